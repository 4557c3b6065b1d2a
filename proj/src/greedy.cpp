#include <eoram/greedy.hpp>
#include <eoram/constructions.hpp>
#include <eoram/error.hpp>

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

using std::int64_t;
using std::string;
using std::to_string;
using std::vector;

namespace eoram
{
    namespace
    {
        constexpr int64_t max_host_vertices = 40'000;

        auto checked_power(int64_t base, int exponent) -> int64_t
        {
            int64_t result = 1;
            for (int i = 0 ; i < exponent ; ++i) {
                if (result > max_host_vertices / base)
                    raise(ErrorKind::InvalidArgument, "greedy host too large");
                result *= base;
            }
            return result;
        }

        /// Index of {u, v} in the sorted edge list of K_n.
        auto complete_edge_index(int64_t n, int64_t u, int64_t v) -> int64_t
        {
            if (u > v)
                std::swap(u, v);
            return u * n - u * (u + 1) / 2 + (v - u - 1);
        }

        auto edge_count_of_complete(int64_t n) -> int64_t
        {
            return n * (n - 1) / 2;
        }
    }

    auto host_for(const Graph & pattern, int t) -> GreedyInstance
    {
        if (t < 1)
            raise(ErrorKind::InvalidArgument, "t must be at least 1");
        if (pattern.n() == 0)
            raise(ErrorKind::InvalidArgument, "pattern must have a vertex");

        auto degeneracy = degeneracy_order(pattern);
        int64_t parts = pattern.n();
        int64_t part_size = parts * checked_power(t, degeneracy.d + 1);
        if (part_size > max_host_vertices / parts)
            raise(ErrorKind::InvalidArgument, "greedy host too large");

        GreedyInstance instance;
        instance.pattern = pattern;
        instance.order = degeneracy.order;
        instance.d = degeneracy.d;
        instance.t = t;
        instance.host_n = static_cast<int>(parts * part_size);
        for (int64_t i = 0 ; i < parts ; ++i) {
            vector<int> part;
            for (int64_t x = i * part_size ; x < (i + 1) * part_size ; ++x)
                part.push_back(static_cast<int>(x));
            instance.parts.push_back(std::move(part));
        }
        return instance;
    }

    auto validate_instance(const GreedyInstance & instance) -> void
    {
        const auto & h = instance.pattern;
        int np = h.n();
        if (instance.t < 1 || instance.d < 0 || np == 0)
            raise(ErrorKind::InvalidInstance, "t, d or the pattern size is out of range");
        if (static_cast<int>(instance.order.size()) != np)
            raise(ErrorKind::InvalidInstance, "vertex order has the wrong length");

        vector<int> position(np, -1);
        for (int i = 0 ; i < np ; ++i) {
            int v = instance.order[i];
            if (v < 0 || v >= np || position[v] != -1)
                raise(ErrorKind::InvalidInstance, "vertex order is not a permutation");
            position[v] = i;
        }
        for (int v = 0 ; v < np ; ++v) {
            int back = 0;
            for (int w : h.neighbours(v))
                if (position[w] < position[v])
                    ++back;
            if (back > instance.d)
                raise(ErrorKind::InvalidInstance, "vertex " + to_string(v) + " has more than d earlier neighbours");
        }

        int64_t part_size = int64_t{np} * checked_power(instance.t, instance.d + 1);
        if (int64_t{np} * part_size != instance.host_n)
            raise(ErrorKind::InvalidInstance, "host size is not n'^2 t^(d+1)");
        if (static_cast<int>(instance.parts.size()) != np)
            raise(ErrorKind::InvalidInstance, "need one part per pattern vertex");
        vector<char> covered(instance.host_n, 0);
        for (const auto & part : instance.parts) {
            if (static_cast<int64_t>(part.size()) != part_size)
                raise(ErrorKind::InvalidInstance, "parts must have size n' t^(d+1)");
            for (int x : part) {
                if (x < 0 || x >= instance.host_n || covered[x])
                    raise(ErrorKind::InvalidInstance, "parts must partition the host vertices");
                covered[x] = 1;
            }
        }
    }

    auto greedy_embed(const GreedyInstance & instance, const Coloring & coloring, GreedyTrace * trace) -> GreedyCertificate
    {
        validate_instance(instance);
        const int64_t n = instance.host_n;
        if (coloring.size() != edge_count_of_complete(n))
            raise(ErrorKind::InvalidInstance, "colouring does not cover K_" + to_string(n));

        const auto & h = instance.pattern;
        const int np = h.n();
        const int t = instance.t;

        auto is_blue = [&] (int x, int y) {
            return coloring[static_cast<int>(complete_edge_index(n, x, y))] == blue;
        };
        auto blue_count = [&] (int v, const vector<int> & set) {
            return static_cast<int64_t>(std::count_if(set.begin(), set.end(), [&] (int w) { return is_blue(v, w); }));
        };

        vector<vector<int>> candidates(np);
        for (int i = 0 ; i < np ; ++i) {
            candidates[i] = instance.parts[i];
            std::sort(candidates[i].begin(), candidates[i].end());
        }
        if (trace)
            *trace = GreedyTrace{vector<int>(np, 0), {}};

        vector<int> image(np, -1);
        for (int i = 0 ; i < np ; ++i) {
            vector<int> forward;
            for (int j = i + 1 ; j < np ; ++j)
                if (h.has_edge(instance.order[i], instance.order[j]))
                    forward.push_back(j);
            for (int j : forward)
                if (candidates[j].size() % t != 0)
                    throw std::logic_error("candidate set size is not a multiple of t");

            auto & current = candidates[i];
            int chosen = -1;
            for (int v : current) {
                bool good = std::all_of(forward.begin(), forward.end(), [&] (int j) {
                    return blue_count(v, candidates[j]) >= static_cast<int64_t>(candidates[j].size() / t);
                });
                if (good) {
                    chosen = v;
                    break;
                }
            }

            if (chosen != -1) {
                if (static_cast<int64_t>(current.size()) < int64_t{np} * t)
                    throw std::logic_error("candidate set fell below n' t at a selection step");
                if (trace)
                    trace->selection_sizes.push_back(static_cast<int>(current.size()));
                image[i] = chosen;
                for (int j : forward) {
                    vector<int> kept;
                    for (int w : candidates[j])
                        if (is_blue(chosen, w))
                            kept.push_back(w);
                    kept.resize(kept.size() / t * t);
                    candidates[j] = std::move(kept);
                    if (trace)
                        ++trace->updates[j];
                }
                continue;
            }

            for (int j : forward) {
                int64_t quota = static_cast<int64_t>(candidates[j].size() / t);
                vector<int> bad;
                for (int v : current)
                    if (blue_count(v, candidates[j]) <= quota - 1)
                        bad.push_back(v);
                if (static_cast<int>(bad.size()) < t)
                    continue;

                RedBiclique biclique;
                biclique.left_part = i;
                biclique.right_part = j;
                biclique.left.assign(bad.begin(), bad.begin() + t);
                for (int z : candidates[j]) {
                    bool red_to_all = std::none_of(biclique.left.begin(), biclique.left.end(), [&] (int w) { return is_blue(w, z); });
                    if (red_to_all)
                        biclique.right.push_back(z);
                    if (static_cast<int>(biclique.right.size()) == t)
                        break;
                }
                if (static_cast<int>(biclique.right.size()) < t)
                    throw std::logic_error("fewer than t vertices left after removing blue neighbours");
                return biclique;
            }
            throw std::logic_error("no good candidate and no forward neighbour with t bad candidates");
        }

        BlueCopy copy;
        copy.vertex_map.assign(np, -1);
        for (int i = 0 ; i < np ; ++i)
            copy.vertex_map[instance.order[i]] = image[i];
        return copy;
    }

    auto verify_certificate(const GreedyInstance & instance, const Coloring & coloring, const GreedyCertificate & certificate) -> bool
    {
        try {
            validate_instance(instance);
        }
        catch (const Error &) {
            return false;
        }

        // Pair ranks counted from the end: C(N,2) - C(N-u,2) + (v-u-1).
        const int64_t hn = instance.host_n;
        auto pairs = [] (int64_t x) { return x * (x - 1) / 2; };
        if (coloring.size() != pairs(hn))
            return false;

        vector<int> part_of(instance.host_n, -1);
        for (int p = 0 ; p < static_cast<int>(instance.parts.size()) ; ++p)
            for (int x : instance.parts[p])
                part_of[x] = p;

        auto in_range = [&] (int x) { return x >= 0 && x < instance.host_n; };
        auto color_of = [&] (int64_t x, int64_t y) {
            if (x > y)
                std::swap(x, y);
            return coloring[static_cast<int>(pairs(hn) - pairs(hn - x) + (y - x - 1))];
        };

        if (auto copy = std::get_if<BlueCopy>(&certificate)) {
            const auto & h = instance.pattern;
            if (static_cast<int>(copy->vertex_map.size()) != h.n())
                return false;
            std::set<int> images;
            for (int i = 0 ; i < h.n() ; ++i) {
                int v = instance.order[i];
                int x = copy->vertex_map[v];
                if (! in_range(x) || part_of[x] != i)
                    return false;
                images.insert(x);
            }
            if (static_cast<int>(images.size()) != h.n())
                return false;
            for (const auto & e : h.edges())
                if (color_of(copy->vertex_map[e.u], copy->vertex_map[e.v]) != blue)
                    return false;
            return true;
        }

        const auto & biclique = std::get<RedBiclique>(certificate);
        int parts = static_cast<int>(instance.parts.size());
        if (biclique.left_part == biclique.right_part || biclique.left_part < 0 || biclique.right_part < 0
                || biclique.left_part >= parts || biclique.right_part >= parts)
            return false;
        if (static_cast<int>(biclique.left.size()) != instance.t || static_cast<int>(biclique.right.size()) != instance.t)
            return false;
        if (std::set<int>(biclique.left.begin(), biclique.left.end()).size() != biclique.left.size()
                || std::set<int>(biclique.right.begin(), biclique.right.end()).size() != biclique.right.size())
            return false;
        for (int x : biclique.left)
            if (! in_range(x) || part_of[x] != biclique.left_part)
                return false;
        for (int y : biclique.right)
            if (! in_range(y) || part_of[y] != biclique.right_part)
                return false;
        for (int x : biclique.left)
            for (int y : biclique.right)
                if (color_of(x, y) != red)
                    return false;
        return true;
    }
}
