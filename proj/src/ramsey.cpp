#include <eoram/ramsey.hpp>
#include <eoram/constructions.hpp>
#include <eoram/error.hpp>
#include <eoram/parallel.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

using std::int64_t;
using std::optional;
using std::string;
using std::to_string;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace eoram
{
    namespace
    {
        /// Hypergraph structure shared read-only by every search state.
        struct Structure
        {
            int edge_count = 0;
            int k = 2;
            vector<int> color;                  // per hyperedge
            vector<int> start;                  // per hyperedge, into members
            vector<int> size;                   // per hyperedge
            vector<int> members;
            vector<vector<int>> incident;       // per host edge
            vector<int> priority;
            bool has_empty = false;
        };

        struct Decision
        {
            int edge;
            int color;
        };

        class State
        {
            private:
                const Structure * _s;
                vector<int> _assign;
                vector<uint32_t> _domain;
                vector<int> _same, _diff;
                int _alive = 0;

                struct TrailEntry
                {
                    int edge;
                    uint32_t old_domain;    // ~0u marks an assignment entry
                };
                vector<TrailEntry> _trail;
                vector<Decision> _queue;

                auto restrict_domain(int e, uint32_t new_domain) -> bool
                {
                    if (new_domain == _domain[e])
                        return true;
                    _trail.push_back({e, _domain[e]});
                    _domain[e] = new_domain;
                    if (new_domain == 0)
                        return false;
                    if (std::has_single_bit(new_domain))
                        _queue.push_back({e, std::countr_zero(new_domain)});
                    return true;
                }

                auto free_member(int h) const -> int
                {
                    for (int i = _s->start[h] ; i < _s->start[h] + _s->size[h] ; ++i)
                        if (_assign[_s->members[i]] == -1)
                            return _s->members[i];
                    return -1;
                }

                auto drain() -> bool
                {
                    while (! _queue.empty()) {
                        auto [e, c] = _queue.back();
                        _queue.pop_back();
                        if (_assign[e] != -1) {
                            if (_assign[e] != c)
                                return false;
                            continue;
                        }
                        if (! (_domain[e] & (1u << c)))
                            return false;

                        _assign[e] = c;
                        _trail.push_back({e, ~0u});
                        bool conflict = false;
                        vector<int> units;
                        for (int h : _s->incident[e]) {
                            if (_s->color[h] == c) {
                                ++_same[h];
                                if (_diff[h] == 0) {
                                    if (_same[h] == _s->size[h])
                                        conflict = true;
                                    else if (_same[h] == _s->size[h] - 1)
                                        units.push_back(h);
                                }
                            }
                            else if (_diff[h]++ == 0)
                                --_alive;
                        }
                        if (conflict)
                            return false;
                        for (int h : units) {
                            if (_diff[h] != 0)
                                continue;
                            int f = free_member(h);
                            if (f != -1 && ! restrict_domain(f, _domain[f] & ~(1u << _s->color[h])))
                                return false;
                        }
                    }
                    return true;
                }

            public:
                explicit State(const Structure & s) :
                    _s(&s),
                    _assign(s.edge_count, -1),
                    _domain(s.edge_count, (s.k >= 32 ? ~0u : (1u << s.k) - 1)),
                    _same(s.color.size(), 0),
                    _diff(s.color.size(), 0),
                    _alive(static_cast<int>(s.color.size()))
                {
                }

                /// Unit propagation from the single-edge copies. False on immediate conflict.
                auto initialise() -> bool
                {
                    if (_s->has_empty)
                        return false;
                    for (std::size_t h = 0 ; h < _s->color.size() ; ++h)
                        if (_s->size[h] == 1) {
                            int e = _s->members[_s->start[h]];
                            if (! restrict_domain(e, _domain[e] & ~(1u << _s->color[h])))
                                return false;
                        }
                    return drain();
                }

                auto mark() const -> std::size_t { return _trail.size(); }

                auto undo(std::size_t to) -> void
                {
                    _queue.clear();
                    while (_trail.size() > to) {
                        auto entry = _trail.back();
                        _trail.pop_back();
                        if (entry.old_domain == ~0u) {
                            int e = entry.edge;
                            int c = _assign[e];
                            for (int h : _s->incident[e]) {
                                if (_s->color[h] == c)
                                    --_same[h];
                                else if (--_diff[h] == 0)
                                    ++_alive;
                            }
                            _assign[e] = -1;
                        }
                        else
                            _domain[entry.edge] = entry.old_domain;
                    }
                }

                auto decide(int e, int c) -> bool
                {
                    _queue.push_back({e, c});
                    return drain();
                }

                auto domain(int e) const -> uint32_t { return _domain[e]; }

                /// Fail-first: the free edge lying in the most nearly monochromatic live copies.
                /// Returns -1 when no live copy remains or everything is assigned.
                auto choose() const -> int
                {
                    if (_alive == 0)
                        return -1;
                    int best = -1;
                    int64_t best_score = -1;
                    for (int e = 0 ; e < _s->edge_count ; ++e) {
                        if (_assign[e] != -1)
                            continue;
                        int64_t score = 0;
                        for (int h : _s->incident[e])
                            if (_diff[h] == 0)
                                score += int64_t{1} << std::min(2 * _same[h], 40);
                        if (score > best_score || (score == best_score && _s->priority[e] < _s->priority[best])) {
                            best = e;
                            best_score = score;
                        }
                    }
                    return best;
                }

                /// Completes the assignment with the lowest colour left in each domain; only valid
                /// when choose() returned -1.
                auto completion() const -> vector<int>
                {
                    vector<int> result = _assign;
                    for (int e = 0 ; e < _s->edge_count ; ++e)
                        if (result[e] == -1)
                            result[e] = std::countr_zero(_domain[e]);
                    return result;
                }
        };

        struct DfsResult
        {
            optional<vector<int>> solution;
            int64_t nodes = 0;
        };

        auto dfs(State & state, int64_t & nodes) -> optional<vector<int>>
        {
            ++nodes;
            int e = state.choose();
            if (e == -1)
                return state.completion();
            uint32_t dom = state.domain(e);
            for (int c = 0 ; c < 32 ; ++c) {
                if (! (dom & (1u << c)))
                    continue;
                auto m = state.mark();
                if (state.decide(e, c))
                    if (auto found = dfs(state, nodes))
                        return found;
                state.undo(m);
            }
            return std::nullopt;
        }

        /// Decision paths of the search tree at the given depth, in DFS order. A path that reaches
        /// a full solution early is kept as-is.
        auto frontier(State & state, int depth, vector<Decision> & path, vector<vector<Decision>> & out) -> void
        {
            int e = state.choose();
            if (depth == 0 || e == -1) {
                out.push_back(path);
                return;
            }
            uint32_t dom = state.domain(e);
            for (int c = 0 ; c < 32 ; ++c) {
                if (! (dom & (1u << c)))
                    continue;
                auto m = state.mark();
                if (state.decide(e, c)) {
                    path.push_back({e, c});
                    frontier(state, depth - 1, path, out);
                    path.pop_back();
                }
                state.undo(m);
            }
        }

        auto check_witness(const CopyHypergraph & hg, const vector<int> & colors) -> bool
        {
            for (std::size_t c = 0 ; c < hg.forbidden.size() ; ++c)
                for (const auto & copy : hg.forbidden[c])
                    if (std::all_of(copy.begin(), copy.end(), [&] (int e) { return colors[e] == static_cast<int>(c); }))
                        return false;
            return true;
        }
    }

    auto solve_copy_hypergraph(const CopyHypergraph & hg, int k, const vector<int> & priority,
            const SearchOptions & options) -> ArrowingResult
    {
        if (k < 1 || k > 31)
            raise(ErrorKind::InvalidArgument, "colour count must be between 1 and 31");
        if (static_cast<int>(hg.forbidden.size()) != k)
            raise(ErrorKind::InvalidArgument, "hypergraph has " + to_string(hg.forbidden.size()) + " colour classes, expected " + to_string(k));
        if (static_cast<int>(priority.size()) != hg.edge_count)
            raise(ErrorKind::InvalidArgument, "priority vector has the wrong length");

        Structure s;
        s.edge_count = hg.edge_count;
        s.k = k;
        s.priority = priority;
        s.incident.resize(hg.edge_count);
        for (int c = 0 ; c < k ; ++c)
            for (const auto & copy : hg.forbidden[c]) {
                int h = static_cast<int>(s.color.size());
                s.color.push_back(c);
                s.start.push_back(static_cast<int>(s.members.size()));
                s.size.push_back(static_cast<int>(copy.size()));
                if (copy.empty())
                    s.has_empty = true;
                for (int e : copy) {
                    if (e < 0 || e >= hg.edge_count)
                        raise(ErrorKind::InvalidArgument, "copy refers to a host edge out of range");
                    s.members.push_back(e);
                    s.incident[e].push_back(h);
                }
            }

        ArrowingResult result;
        State root(s);
        if (! root.initialise()) {
            result.arrows = true;
            result.nodes = 1;
            return result;
        }

        bool symmetric = options.symmetry_breaking && k >= 2 && hg.edge_count > 0
            && std::all_of(hg.forbidden.begin() + 1, hg.forbidden.end(), [&] (const auto & f) { return f == hg.forbidden[0]; });
        if (symmetric) {
            int first = static_cast<int>(std::min_element(priority.begin(), priority.end()) - priority.begin());
            if (root.domain(first) & 1u) {
                if (! root.decide(first, 0)) {
                    result.arrows = true;
                    result.nodes = 1;
                    return result;
                }
            }
        }

        optional<vector<int>> solution;
        if (options.threads <= 1) {
            solution = dfs(root, result.nodes);
        }
        else {
            int depth = 0;
            while ((1 << depth) < 8 * options.threads && depth < 20)
                ++depth;
            vector<vector<Decision>> paths;
            vector<Decision> path;
            frontier(root, depth, path, paths);

            vector<optional<vector<int>>> found(paths.size());
            vector<int64_t> nodes(paths.size(), 0);
            int first = parallel_find_first(static_cast<int>(paths.size()), options.threads, [&] (int i) {
                State local = root;
                for (auto [e, c] : paths[i])
                    if (! local.decide(e, c))
                        raise(ErrorKind::InvalidArgument, "internal error: frontier path no longer propagates");
                found[i] = dfs(local, nodes[i]);
                return found[i].has_value();
            });
            result.nodes = std::accumulate(nodes.begin(), nodes.end(), int64_t{0});
            if (first >= 0)
                solution = found[first];
        }

        if (! solution) {
            result.arrows = true;
            return result;
        }
        if (! check_witness(hg, *solution))
            raise(ErrorKind::InvalidArgument, "internal error: search produced an invalid colouring");
        result.witness = Coloring(k, std::move(*solution));
        return result;
    }

    namespace
    {
        auto describe(const EdgeOrderedGraph & g) -> string
        {
            std::ostringstream out;
            out << "eog " << g.n();
            for (const auto & e : g.sequence())
                out << ' ' << e.u << ',' << e.v;
            return out.str();
        }

        auto describe(const VertexOrderedGraph & g) -> string
        {
            std::ostringstream out;
            out << "vog " << g.n() << " [";
            for (int v = 0 ; v < g.n() ; ++v)
                out << ' ' << g.vrank(v);
            out << " ]";
            for (const auto & e : g.graph().edges())
                out << ' ' << e.u << ',' << e.v;
            return out.str();
        }

        auto describe(const Graph & g) -> string
        {
            std::ostringstream out;
            out << "graph " << g.n();
            for (const auto & e : g.edges())
                out << ' ' << e.u << ',' << e.v;
            return out.str();
        }

        auto fnv1a(const string & s) -> uint64_t
        {
            uint64_t h = 0xcbf29ce484222325ULL;
            for (unsigned char c : s) {
                h ^= c;
                h *= 0x100000001b3ULL;
            }
            return h;
        }

        /// Copies are memoised under cache_dir keyed by the full text of (pattern, host).
        template <typename Compute_>
        auto cached_copies(const SearchOptions & options, const string & key, Compute_ compute) -> vector<EdgeSet>
        {
            if (options.cache_dir.empty())
                return compute();

            namespace fs = std::filesystem;
            std::ostringstream name;
            name << std::hex << fnv1a(key) << ".copies";
            auto file = fs::path(options.cache_dir) / name.str();

            if (std::ifstream in{file}) {
                string stored_key;
                std::getline(in, stored_key);
                std::size_t count = 0;
                if (stored_key == key && (in >> count)) {
                    vector<EdgeSet> copies(count);
                    bool ok = true;
                    for (auto & c : copies) {
                        std::size_t len = 0;
                        if (! (in >> len)) { ok = false; break; }
                        c.resize(len);
                        for (auto & e : c)
                            if (! (in >> e)) { ok = false; break; }
                    }
                    if (ok)
                        return copies;
                }
            }

            auto copies = compute();
            std::error_code ec;
            fs::create_directories(options.cache_dir, ec);
            auto tmp = file;
            tmp += ".tmp";
            if (std::ofstream out{tmp}) {
                out << key << '\n' << copies.size() << '\n';
                for (const auto & c : copies) {
                    out << c.size();
                    for (int e : c)
                        out << ' ' << e;
                    out << '\n';
                }
                out.close();
                fs::rename(tmp, file, ec);
            }
            return copies;
        }

        template <typename Host_, typename Target_, typename Iso_>
        auto build_hypergraph(const Host_ & host, const Target_ & red_target, const Target_ & blue_target, int k,
                const SearchOptions & options, Iso_ same_pattern) -> CopyHypergraph
        {
            if (k < 2)
                raise(ErrorKind::InvalidArgument, "need at least two colours");
            bool diagonal = same_pattern(red_target, blue_target);
            if (k > 2 && ! diagonal)
                raise(ErrorKind::InvalidArgument, "more than two colours needs identical red and blue targets");

            auto copies_of = [&] (const Target_ & target) {
                return cached_copies(options, describe(target) + " in " + describe(host), [&] {
                    return enumerate_copies(target, host, options.copy_cap, options.threads);
                });
            };

            CopyHypergraph hg;
            hg.edge_count = host.m();
            hg.forbidden.resize(k);
            hg.forbidden[0] = copies_of(red_target);
            hg.forbidden[1] = diagonal ? hg.forbidden[0] : copies_of(blue_target);
            for (int c = 2 ; c < k ; ++c)
                hg.forbidden[c] = hg.forbidden[0];
            return hg;
        }

        auto identity_priority(int m) -> vector<int>
        {
            vector<int> p(m);
            std::iota(p.begin(), p.end(), 0);
            return p;
        }

        auto same_vertex_ordered(const VertexOrderedGraph & a, const VertexOrderedGraph & b) -> bool
        {
            // Compare after relabelling both into their vertex order.
            if (a.n() != b.n() || a.m() != b.m())
                return false;
            auto normal = [] (const VertexOrderedGraph & g) {
                vector<Edge> es;
                for (const auto & e : g.graph().edges())
                    es.push_back({std::min(g.vrank(e.u), g.vrank(e.v)), std::max(g.vrank(e.u), g.vrank(e.v))});
                std::sort(es.begin(), es.end());
                return es;
            };
            return normal(a) == normal(b);
        }

        auto same_graph(const Graph & a, const Graph & b) -> bool
        {
            if (a.n() != b.n() || a.m() != b.m())
                return false;
            if (a == b)
                return true;
            vector<int> perm(a.n());
            std::iota(perm.begin(), perm.end(), 0);
            do {
                bool ok = true;
                for (const auto & e : a.edges())
                    if (! b.has_edge(perm[e.u], perm[e.v])) {
                        ok = false;
                        break;
                    }
                if (ok)
                    return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        }
    }

    auto copy_hypergraph(const EdgeOrderedGraph & host, const EdgeOrderedGraph & red_target,
            const EdgeOrderedGraph & blue_target, int k, const SearchOptions & options) -> CopyHypergraph
    {
        return build_hypergraph(host, red_target, blue_target, k, options,
                [] (const EdgeOrderedGraph & a, const EdgeOrderedGraph & b) { return are_isomorphic_eog(a, b); });
    }

    auto copy_hypergraph(const VertexOrderedGraph & host, const VertexOrderedGraph & red_target,
            const VertexOrderedGraph & blue_target, int k, const SearchOptions & options) -> CopyHypergraph
    {
        return build_hypergraph(host, red_target, blue_target, k, options, same_vertex_ordered);
    }

    auto copy_hypergraph(const Graph & host, const Graph & red_target,
            const Graph & blue_target, int k, const SearchOptions & options) -> CopyHypergraph
    {
        return build_hypergraph(host, red_target, blue_target, k, options, same_graph);
    }

    auto adversary_coloring(const EdgeOrderedGraph & host, const EdgeOrderedGraph & red_target,
            const EdgeOrderedGraph & blue_target, int k, const SearchOptions & options) -> ArrowingResult
    {
        return solve_copy_hypergraph(copy_hypergraph(host, red_target, blue_target, k, options), k, host.ranks(), options);
    }

    auto adversary_coloring(const VertexOrderedGraph & host, const VertexOrderedGraph & red_target,
            const VertexOrderedGraph & blue_target, int k, const SearchOptions & options) -> ArrowingResult
    {
        return solve_copy_hypergraph(copy_hypergraph(host, red_target, blue_target, k, options), k, identity_priority(host.m()), options);
    }

    auto adversary_coloring(const Graph & host, const Graph & red_target,
            const Graph & blue_target, int k, const SearchOptions & options) -> ArrowingResult
    {
        return solve_copy_hypergraph(copy_hypergraph(host, red_target, blue_target, k, options), k, identity_priority(host.m()), options);
    }

    namespace
    {
        /// Scans N = 1..max_host for the first arrowing host.
        template <typename Run_>
        auto minimal_host(int max_host, Run_ run, bool keep_ordering) -> RamseyAnswer
        {
            if (max_host < 1)
                raise(ErrorKind::InvalidArgument, "max_host must be positive");
            RamseyAnswer answer;
            for (int n = 1 ; n <= max_host ; ++n) {
                auto [host, result] = run(n);
                answer.nodes += result.nodes;
                answer.searched_to = n;
                if (result.arrows) {
                    answer.value = n;
                    if (keep_ordering)
                        answer.witness_host = host;
                    return answer;
                }
                answer.lower_certificates.push_back({n, keep_ordering ? optional<EdgeOrderedGraph>(host) : std::nullopt, *result.witness});
            }
            return answer;
        }
    }

    auto lex_ramsey(const EdgeOrderedGraph & red_target, const optional<EdgeOrderedGraph> & blue_target,
            int max_host, const SearchOptions & options) -> RamseyAnswer
    {
        if (! is_lexicographic(red_target) || (blue_target && ! is_lexicographic(*blue_target)))
            raise(ErrorKind::NotLexicographic, "lex_ramsey targets must be lexicographically edge-ordered");
        const auto & blue = blue_target ? *blue_target : red_target;
        return minimal_host(max_host, [&] (int n) {
            auto host = lex_complete(n);
            auto result = adversary_coloring(host, red_target, blue, 2, options);
            return std::pair{host, result};
        }, true);
    }

    auto ordered_ramsey(const VertexOrderedGraph & red_target, const optional<VertexOrderedGraph> & blue_target,
            int max_host, const SearchOptions & options) -> RamseyAnswer
    {
        const auto & blue = blue_target ? *blue_target : red_target;
        return minimal_host(max_host, [&] (int n) {
            auto host = VertexOrderedGraph::natural(Graph::complete(n));
            auto result = adversary_coloring(host, red_target, blue, 2, options);
            return std::pair{lex_complete(n), result};
        }, false);
    }

    auto classic_ramsey(const Graph & red_target, const optional<Graph> & blue_target,
            int max_host, const SearchOptions & options) -> RamseyAnswer
    {
        const auto & blue = blue_target ? *blue_target : red_target;
        return minimal_host(max_host, [&] (int n) {
            auto host = Graph::complete(n);
            auto result = adversary_coloring(host, red_target, blue, 2, options);
            return std::pair{lex_complete(n), result};
        }, false);
    }

    auto for_each_host_ordering_class(int n, const std::function<void (const EdgeOrderedGraph &)> & fn, int limit) -> void
    {
        if (n < 1)
            raise(ErrorKind::InvalidArgument, "host size must be positive");
        if (n > limit)
            raise(ErrorKind::LimitExceeded, "ordering classes of K_" + to_string(n) + " exceed the limit " + to_string(limit));

        auto kn = Graph::complete(n);
        int m = kn.m();

        // image[p][e]: index of the edge that relabelling p sends e to. Edge indices follow sorted
        // pair order, so comparing indices compares canonical-key entries.
        vector<vector<int>> image;
        vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            vector<int> row(m);
            for (int e = 0 ; e < m ; ++e)
                row[e] = kn.edge_index(perm[kn.edge(e).u], perm[kn.edge(e).v]);
            image.push_back(std::move(row));
        } while (std::next_permutation(perm.begin(), perm.end()));

        vector<int> sequence;
        vector<char> used(m, 0);
        vector<int> all(image.size());
        std::iota(all.begin(), all.end(), 0);

        // Orderly generation: extend only while no relabelling maps the prefix to something smaller.
        auto extend = [&] (auto & self, const vector<int> & tied) -> void {
            if (static_cast<int>(sequence.size()) == m) {
                vector<Edge> seq;
                for (int e : sequence)
                    seq.push_back(kn.edge(e));
                fn(EdgeOrderedGraph::from_sequence(n, seq));
                return;
            }
            for (int e = 0 ; e < m ; ++e) {
                if (used[e])
                    continue;
                vector<int> next;
                bool smaller = false;
                for (int p : tied) {
                    int img = image[p][e];
                    if (img < e) {
                        smaller = true;
                        break;
                    }
                    if (img == e)
                        next.push_back(p);
                }
                if (smaller)
                    continue;
                used[e] = 1;
                sequence.push_back(e);
                self(self, next);
                sequence.pop_back();
                used[e] = 0;
            }
        };
        extend(extend, all);
    }

    auto enumerate_host_ordering_classes(int n, int limit) -> vector<EdgeOrderedGraph>
    {
        vector<EdgeOrderedGraph> result;
        for_each_host_ordering_class(n, [&] (const EdgeOrderedGraph & g) { result.push_back(g); }, limit);
        return result;
    }

    auto edge_ordered_ramsey(const EdgeOrderedGraph & red_target, const EdgeOrderedGraph & blue_target,
            int max_host, const SearchOptions & options, int limit) -> RamseyAnswer
    {
        if (max_host < 1)
            raise(ErrorKind::InvalidArgument, "max_host must be positive");
        if (max_host > limit)
            raise(ErrorKind::LimitExceeded, "exhaustive edge-ordered search is limited to hosts of at most " + to_string(limit) + " vertices");

        // Classes are searched in parallel, each single-threaded, so witnesses do not depend on
        // the thread count.
        SearchOptions inner = options;
        inner.threads = 1;

        RamseyAnswer answer;
        vector<BadColoring> previous;
        for (int n = 1 ; n <= max_host ; ++n) {
            auto classes = enumerate_host_ordering_classes(n, limit);
            vector<optional<ArrowingResult>> results(classes.size());
            int hit = parallel_find_first(static_cast<int>(classes.size()), options.threads, [&] (int i) {
                results[i] = adversary_coloring(classes[i], red_target, blue_target, 2, inner);
                return results[i]->arrows;
            });
            for (const auto & r : results)
                if (r)
                    answer.nodes += r->nodes;
            answer.searched_to = n;
            if (hit >= 0) {
                answer.value = n;
                answer.witness_host = classes[hit];
                answer.lower_certificates = std::move(previous);
                return answer;
            }
            previous.clear();
            for (std::size_t i = 0 ; i < classes.size() ; ++i)
                previous.push_back({n, classes[i], *results[i]->witness});
        }
        answer.lower_certificates = std::move(previous);
        return answer;
    }

    auto verify_lemma4(const EdgeOrderedGraph & target, int max_host, const SearchOptions & options) -> Lemma4Report
    {
        Lemma4Report report;
        report.lex = lex_ramsey(target, std::nullopt, max_host, options);
        report.maps = consistent_maps(target);
        for (const auto & f : report.maps) {
            auto ordered = ordered_ramsey(VertexOrderedGraph(target.graph(), f), std::nullopt, max_host, options);
            if (ordered.value && (! report.min_ordered || *ordered.value < *report.min_ordered))
                report.min_ordered = ordered.value;
            report.ordered.push_back(std::move(ordered));
        }

        if (report.min_ordered) {
            // An unknown lexicographic value means it exceeds max_host >= the minimum.
            if (report.lex.value)
                report.status = *report.lex.value <= *report.min_ordered ? Lemma4Status::Holds : Lemma4Status::Violated;
            else
                report.status = Lemma4Status::Violated;
        }
        else
            report.status = Lemma4Status::Inconclusive;
        return report;
    }
}
