#include <eoram/verify.hpp>
#include <eoram/error.hpp>
#include <eoram/greedy.hpp>
#include <eoram/paramwords.hpp>
#include <eoram/ramsey.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <set>

using std::optional;
using std::string;
using std::vector;

namespace eoram
{
    namespace
    {
        auto pattern_graph(const Graph & g) -> const Graph & { return g; }
        auto pattern_graph(const EdgeOrderedGraph & g) -> const Graph & { return g.graph(); }
        auto pattern_graph(const VertexOrderedGraph & g) -> const Graph & { return g.graph(); }

        /// Host edge indices of the pattern edges under the map, or nullopt if one is missing or
        /// has the wrong colour.
        auto image_edges(const Graph & pattern, const Graph & host, const vector<int> & map,
                const optional<ColorFilter> & filter) -> optional<vector<int>>
        {
            vector<int> image;
            for (const auto & e : pattern.edges()) {
                int h = host.edge_index(map[e.u], map[e.v]);
                if (h < 0)
                    return std::nullopt;
                if (filter && filter->colors[h] != filter->color)
                    return std::nullopt;
                image.push_back(h);
            }
            return image;
        }

        auto order_preserved(const Graph &, const Graph &, const vector<int> &, const vector<int> &) -> bool
        {
            return true;
        }

        auto order_preserved(const EdgeOrderedGraph & pattern, const EdgeOrderedGraph & host, const vector<int> &,
                const vector<int> & image) -> bool
        {
            for (int e = 0 ; e < pattern.m() ; ++e)
                for (int f = 0 ; f < pattern.m() ; ++f)
                    if (pattern.rank(e) < pattern.rank(f) && ! (host.rank(image[e]) < host.rank(image[f])))
                        return false;
            return true;
        }

        auto order_preserved(const VertexOrderedGraph & pattern, const VertexOrderedGraph & host, const vector<int> & map,
                const vector<int> &) -> bool
        {
            for (int a = 0 ; a < pattern.n() ; ++a)
                for (int b = 0 ; b < pattern.n() ; ++b)
                    if (pattern.vrank(a) < pattern.vrank(b) && ! (host.vrank(map[a]) < host.vrank(map[b])))
                        return false;
            return true;
        }

        template <typename G>
        auto check_any(const G & pattern, const G & host, const vector<int> & map, const optional<ColorFilter> & filter) -> bool
        {
            const auto & p = pattern_graph(pattern);
            const auto & h = pattern_graph(host);
            if (static_cast<int>(map.size()) != p.n())
                return false;
            std::set<int> used;
            for (int x : map) {
                if (x < 0 || x >= h.n() || ! used.insert(x).second)
                    return false;
            }
            if (filter && static_cast<int>(filter->colors.size()) != h.m())
                return false;
            auto image = image_edges(p, h, map, filter);
            return image && order_preserved(pattern, host, map, *image);
        }

        /// Calls visit(map, image) for every injection giving a copy; stops when visit returns true.
        template <typename G>
        auto for_each_injection(const G & pattern, const G & host, const optional<ColorFilter> & filter,
                const std::function<bool (const vector<int> &, const vector<int> &)> & visit) -> bool
        {
            const auto & p = pattern_graph(pattern);
            const auto & h = pattern_graph(host);
            if (p.n() > h.n())
                return false;
            vector<int> map(p.n(), -1);
            vector<char> used(h.n(), 0);
            auto extend = [&] (auto & self, int v) -> bool {
                if (v == p.n()) {
                    auto image = image_edges(p, h, map, filter);
                    if (image && order_preserved(pattern, host, map, *image))
                        return visit(map, *image);
                    return false;
                }
                for (int x = 0 ; x < h.n() ; ++x) {
                    if (used[x])
                        continue;
                    bool fits = true;
                    for (int w : p.neighbours(v))
                        if (w < v) {
                            int e = h.edge_index(x, map[w]);
                            if (e < 0 || (filter && filter->colors[e] != filter->color))
                                fits = false;
                        }
                    if (! fits)
                        continue;
                    map[v] = x;
                    used[x] = 1;
                    bool stop = self(self, v + 1);
                    used[x] = 0;
                    map[v] = -1;
                    if (stop)
                        return true;
                }
                return false;
            };
            return extend(extend, 0);
        }

        template <typename G>
        auto copies_any(const G & pattern, const G & host) -> vector<EdgeSet>
        {
            std::set<EdgeSet> found;
            for_each_injection(pattern, host, std::nullopt, [&] (const vector<int> &, const vector<int> & image) {
                EdgeSet s = image;
                std::sort(s.begin(), s.end());
                found.insert(s);
                return false;
            });
            return {found.begin(), found.end()};
        }

        template <typename G>
        auto has_copy_any(const G & pattern, const G & host, const optional<ColorFilter> & filter) -> bool
        {
            return for_each_injection(pattern, host, filter, [] (const vector<int> &, const vector<int> &) { return true; });
        }

        template <typename G>
        auto bad_any(const G & host, const G & red_target, const G & blue_target, const Coloring & coloring) -> bool
        {
            if (coloring.size() != pattern_graph(host).m())
                return false;
            for (int c = 0 ; c < coloring.k ; ++c) {
                const auto & target = c == 1 ? blue_target : red_target;
                if (has_copy_any(target, host, ColorFilter{coloring.colors, c}))
                    return false;
            }
            return true;
        }

        template <typename G>
        auto arrows_any(const G & host, const G & red_target, const G & blue_target, int k) -> bool
        {
            if (k < 2)
                raise(ErrorKind::InvalidArgument, "need at least two colours");
            int m = pattern_graph(host).m();
            if (m * std::log2(static_cast<double>(k)) > max_brute_force_edges + 1e-9)
                raise(ErrorKind::LimitExceeded, "too many colourings for brute force");
            vector<int> colors(m, 0);
            while (true) {
                if (bad_any(host, red_target, blue_target, Coloring(k, colors)))
                    return false;
                int i = 0;
                while (i < m && colors[i] == k - 1)
                    colors[i++] = 0;
                if (i == m)
                    return true;
                ++colors[i];
            }
        }
    }

    auto check_embedding(const EdgeOrderedGraph & pattern, const EdgeOrderedGraph & host, const vector<int> & vertex_map,
            optional<ColorFilter> filter) -> bool
    {
        return check_any(pattern, host, vertex_map, filter);
    }

    auto check_embedding(const VertexOrderedGraph & pattern, const VertexOrderedGraph & host, const vector<int> & vertex_map,
            optional<ColorFilter> filter) -> bool
    {
        return check_any(pattern, host, vertex_map, filter);
    }

    auto check_embedding(const Graph & pattern, const Graph & host, const vector<int> & vertex_map,
            optional<ColorFilter> filter) -> bool
    {
        return check_any(pattern, host, vertex_map, filter);
    }

    auto naive_copies(const EdgeOrderedGraph & pattern, const EdgeOrderedGraph & host) -> vector<EdgeSet>
    {
        return copies_any(pattern, host);
    }

    auto naive_copies(const VertexOrderedGraph & pattern, const VertexOrderedGraph & host) -> vector<EdgeSet>
    {
        return copies_any(pattern, host);
    }

    auto naive_copies(const Graph & pattern, const Graph & host) -> vector<EdgeSet>
    {
        return copies_any(pattern, host);
    }

    auto naive_has_copy(const EdgeOrderedGraph & pattern, const EdgeOrderedGraph & host, optional<ColorFilter> filter) -> bool
    {
        return has_copy_any(pattern, host, filter);
    }

    auto naive_has_copy(const VertexOrderedGraph & pattern, const VertexOrderedGraph & host, optional<ColorFilter> filter) -> bool
    {
        return has_copy_any(pattern, host, filter);
    }

    auto naive_has_copy(const Graph & pattern, const Graph & host, optional<ColorFilter> filter) -> bool
    {
        return has_copy_any(pattern, host, filter);
    }

    auto is_bad_coloring(const EdgeOrderedGraph & host, const EdgeOrderedGraph & red_target,
            const EdgeOrderedGraph & blue_target, const Coloring & coloring) -> bool
    {
        return bad_any(host, red_target, blue_target, coloring);
    }

    auto is_bad_coloring(const VertexOrderedGraph & host, const VertexOrderedGraph & red_target,
            const VertexOrderedGraph & blue_target, const Coloring & coloring) -> bool
    {
        return bad_any(host, red_target, blue_target, coloring);
    }

    auto is_bad_coloring(const Graph & host, const Graph & red_target, const Graph & blue_target, const Coloring & coloring) -> bool
    {
        return bad_any(host, red_target, blue_target, coloring);
    }

    auto brute_force_arrows(const EdgeOrderedGraph & host, const EdgeOrderedGraph & red_target,
            const EdgeOrderedGraph & blue_target, int k) -> bool
    {
        return arrows_any(host, red_target, blue_target, k);
    }

    auto brute_force_arrows(const VertexOrderedGraph & host, const VertexOrderedGraph & red_target,
            const VertexOrderedGraph & blue_target, int k) -> bool
    {
        return arrows_any(host, red_target, blue_target, k);
    }

    auto brute_force_arrows(const Graph & host, const Graph & red_target, const Graph & blue_target, int k) -> bool
    {
        return arrows_any(host, red_target, blue_target, k);
    }

    namespace
    {
        using io::json;

        /// Runs fn on the host and targets of a certificate parsed in the given mode.
        template <typename Fn>
        auto with_mode(const json & c, const Fn & fn) -> VerifyResult
        {
            auto mode = c.at("mode").get<string>();
            if (mode == "edge") {
                auto host = io::edge_ordered_from_json(c.at("host"));
                return fn(host, io::edge_ordered_from_json(c.at("red_target")),
                        io::edge_ordered_from_json(c.at("blue_target")), &host);
            }
            if (mode == "vertex")
                return fn(io::vertex_ordered_from_json(c.at("host")), io::vertex_ordered_from_json(c.at("red_target")),
                        io::vertex_ordered_from_json(c.at("blue_target")), nullptr);
            if (mode == "plain")
                return fn(io::graph_from_json(c.at("host")), io::graph_from_json(c.at("red_target")),
                        io::graph_from_json(c.at("blue_target")), nullptr);
            return {false, "unknown mode '" + mode + "'"};
        }

        auto verify_embedding(const json & c) -> VerifyResult
        {
            auto map = c.at("vertex_map").get<vector<int>>();
            auto mode = c.at("mode").get<string>();
            optional<Coloring> coloring;
            int color = c.value("color", red);

            auto run = [&] (const auto & pattern, const auto & host, const EdgeOrderedGraph * ordered) -> VerifyResult {
                optional<ColorFilter> filter;
                if (c.contains("coloring")) {
                    coloring = io::coloring_from_json(c.at("coloring"), ordered);
                    filter = ColorFilter{coloring->colors, color};
                }
                if (check_embedding(pattern, host, map, filter))
                    return {true, "embedding verified"};
                return {false, "vertex map is not a copy of the pattern"};
            };
            if (mode == "edge") {
                auto host = io::edge_ordered_from_json(c.at("host"));
                return run(io::edge_ordered_from_json(c.at("pattern")), host, &host);
            }
            if (mode == "vertex")
                return run(io::vertex_ordered_from_json(c.at("pattern")), io::vertex_ordered_from_json(c.at("host")), nullptr);
            if (mode == "plain")
                return run(io::graph_from_json(c.at("pattern")), io::graph_from_json(c.at("host")), nullptr);
            return {false, "unknown mode '" + mode + "'"};
        }

        auto verify_bad_coloring(const json & c) -> VerifyResult
        {
            return with_mode(c, [&] (const auto & host, const auto & red_target, const auto & blue_target,
                        const EdgeOrderedGraph * ordered) -> VerifyResult {
                auto coloring = io::coloring_from_json(c.at("coloring"), ordered);
                if (is_bad_coloring(host, red_target, blue_target, coloring))
                    return {true, "no monochromatic copy in any colour"};
                return {false, "colouring contains a forbidden monochromatic copy"};
            });
        }

        auto verify_arrowing(const json & c) -> VerifyResult
        {
            return with_mode(c, [&] (const auto & host, const auto & red_target, const auto & blue_target,
                        const EdgeOrderedGraph *) -> VerifyResult {
                if (pattern_graph(host).m() <= arrowing_brute_force_edges) {
                    if (brute_force_arrows(host, red_target, blue_target))
                        return {true, "every colouring checked by brute force"};
                    return {false, "brute force found a bad colouring"};
                }
                auto result = adversary_coloring(host, red_target, blue_target);
                if (result.arrows)
                    return {true, "search re-run exhausted every colouring"};
                return {false, "search re-run found a bad colouring"};
            });
        }

        auto verify_greedy(const json & c) -> VerifyResult
        {
            auto instance = io::greedy_instance_from_json(c.at("instance"));
            auto coloring = io::coloring_from_json(c.at("coloring"));
            auto certificate = io::greedy_certificate_from_json(c.at("certificate"));
            if (verify_certificate(instance, coloring, certificate))
                return {true, "greedy certificate verified"};
            return {false, "greedy certificate rejected"};
        }

        /// Brute-force isomorphism: some vertex permutation carries a's edge sequence onto b's.
        auto isomorphic_by_permutation(const EdgeOrderedGraph & a, const EdgeOrderedGraph & b) -> bool
        {
            if (a.n() != b.n() || a.m() != b.m())
                return false;
            auto sa = a.sequence(), sb = b.sequence();
            vector<int> perm(a.n());
            for (int i = 0 ; i < a.n() ; ++i)
                perm[i] = i;
            do {
                bool same = true;
                for (std::size_t r = 0 ; r < sa.size() && same ; ++r) {
                    int u = perm[sa[r].u], v = perm[sa[r].v];
                    same = std::min(u, v) == sb[r].u && std::max(u, v) == sb[r].v;
                }
                if (same)
                    return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        }

        auto verify_canonical_clique(const json & c) -> VerifyResult
        {
            auto host = io::edge_ordered_from_json(c.at("host"));
            auto vertices = c.at("vertices").get<vector<int>>();
            auto type = parse_canonical_type(c.at("type").get<string>());
            int n = c.at("n").get<int>();
            std::set<int> distinct(vertices.begin(), vertices.end());
            if (static_cast<int>(vertices.size()) != n || static_cast<int>(distinct.size()) != n)
                return {false, "clique must have n distinct vertices"};
            for (int v : vertices)
                if (v < 0 || v >= host.n())
                    return {false, "clique vertex out of range"};
            std::sort(vertices.begin(), vertices.end());
            auto induced = restrict(host, vertices);
            if (induced.m() != n * (n - 1) / 2)
                return {false, "vertices do not induce a clique"};
            if (isomorphic_by_permutation(induced, canonical_clique_ordering(n, type)))
                return {true, "clique has the claimed canonical ordering"};
            return {false, "clique ordering is not of the claimed type"};
        }

        auto subset_host_coloring(const SubsetHost & host, const json & j) -> Coloring
        {
            auto rule = j.value("rule", string("explicit"));
            if (rule == "parity")
                return parity_coloring(host);
            if (rule == "constant")
                return Coloring::constant(host.edge_count(), j.at("color").get<int>());
            return io::coloring_from_json(j);
        }

        auto verify_theorem8(const json & c) -> VerifyResult
        {
            SubsetHost host(c.at("ground").get<int>());
            auto f = io::bi_ordered_from_json(c.at("graph"));
            auto w = io::word_from_json(c.at("word"));
            auto chi = subset_host_coloring(host, c.at("coloring"));
            auto report = verify_theorem8_witness(host, f, w, chi, false);
            if (report.all_pass())
                return {true, "induced monochromatic copy verified"};
            return {false, string("failed:") + (report.precondition ? "" : " word") + (report.vertex_order ? "" : " vertex-order")
                + (report.induced_edges ? "" : " induced-edges") + (report.edge_order ? "" : " edge-order")
                + (report.monochromatic ? "" : " colour")};
        }

        auto verify_saturation(const json & c) -> VerifyResult
        {
            auto host = io::edge_ordered_from_json(c.at("host"));
            auto pattern = io::edge_ordered_from_json(c.at("pattern"));
            int t = c.at("t").get<int>();
            int side = host.n() / 2;
            if (host.n() % 2 != 0 || ! (host.graph() == Graph::complete_bipartite(side, side)) || t < 1 || t > side)
                return {false, "host is not K_{M,M} or t is out of range"};
            for (unsigned left = 0 ; left < (1u << side) ; ++left) {
                if (std::popcount(left) != t)
                    continue;
                for (unsigned right = 0 ; right < (1u << side) ; ++right) {
                    if (std::popcount(right) != t)
                        continue;
                    vector<int> vertices;
                    for (int i = 0 ; i < side ; ++i)
                        if (left >> i & 1)
                            vertices.push_back(i);
                    for (int i = 0 ; i < side ; ++i)
                        if (right >> i & 1)
                            vertices.push_back(side + i);
                    if (! naive_has_copy(pattern, restrict(host, vertices)))
                        return {false, "some K_{t,t} misses the pattern"};
                }
            }
            return {true, "every K_{t,t} contains the pattern"};
        }
    }

    auto verify_certificate_json(const json & certificate) -> VerifyResult
    {
        try {
            auto kind = certificate.at("kind").get<string>();
            if (kind == "embedding")
                return verify_embedding(certificate);
            if (kind == "bad_coloring")
                return verify_bad_coloring(certificate);
            if (kind == "arrowing")
                return verify_arrowing(certificate);
            if (kind == "greedy")
                return verify_greedy(certificate);
            if (kind == "canonical_clique")
                return verify_canonical_clique(certificate);
            if (kind == "theorem8")
                return verify_theorem8(certificate);
            if (kind == "saturation")
                return verify_saturation(certificate);
            return {false, "unknown certificate kind '" + kind + "'"};
        }
        catch (const json::exception & e) {
            return {false, string("malformed certificate: ") + e.what()};
        }
        catch (const Error & e) {
            return {false, string("invalid certificate: ") + e.what()};
        }
    }
}
