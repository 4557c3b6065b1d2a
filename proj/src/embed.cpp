#include <eoram/embed.hpp>
#include <eoram/constructions.hpp>
#include <eoram/error.hpp>
#include <eoram/parallel.hpp>

#include <algorithm>
#include <array>
#include <string>

using std::int64_t;
using std::optional;
using std::pair;
using std::string;
using std::to_string;
using std::vector;

namespace eoram
{
    namespace
    {
        /// Collects distinct edge sets, compacting as it goes so memory tracks the distinct count.
        class CopyCollector
        {
            private:
                vector<EdgeSet> _sets;
                std::size_t _compacted = 0;
                int64_t _cap;

                auto compact() -> void
                {
                    std::sort(_sets.begin(), _sets.end());
                    _sets.erase(std::unique(_sets.begin(), _sets.end()), _sets.end());
                    _compacted = _sets.size();
                    if (static_cast<int64_t>(_sets.size()) > _cap)
                        raise(ErrorKind::CapExceeded, "more than " + to_string(_cap) + " copies");
                }

            public:
                explicit CopyCollector(int64_t cap) : _cap(cap) {}

                auto add(const vector<int> & edge_map) -> void
                {
                    EdgeSet s = edge_map;
                    std::sort(s.begin(), s.end());
                    _sets.push_back(std::move(s));
                    if (_sets.size() > 2 * _compacted + 1024)
                        compact();
                }

                auto finish() -> vector<EdgeSet>
                {
                    compact();
                    return std::move(_sets);
                }
        };

        auto merge_sets(vector<vector<EdgeSet>> & parts, int64_t cap) -> vector<EdgeSet>
        {
            vector<EdgeSet> all;
            for (auto & p : parts)
                for (auto & s : p)
                    all.push_back(std::move(s));
            std::sort(all.begin(), all.end());
            all.erase(std::unique(all.begin(), all.end()), all.end());
            if (static_cast<int64_t>(all.size()) > cap)
                raise(ErrorKind::CapExceeded, "more than " + to_string(cap) + " copies");
            return all;
        }

        auto isolated_vertices(const Graph & g) -> vector<int>
        {
            vector<int> result;
            for (int v = 0 ; v < g.n() ; ++v)
                if (g.degree(v) == 0)
                    result.push_back(v);
            return result;
        }

        /// Maps the isolated pattern vertices onto the lowest unused host vertices.
        auto place_isolated(const vector<int> & isolated, vector<int> & vertex_map, const vector<char> & used) -> bool
        {
            std::size_t next = 0;
            for (int h = 0 ; h < static_cast<int>(used.size()) && next < isolated.size() ; ++h)
                if (! used[h])
                    vertex_map[isolated[next++]] = h;
            return next == isolated.size();
        }

        class EdgeOrderedSearcher
        {
            private:
                const EdgeOrderedGraph & _pattern;
                const EdgeOrderedGraph & _host;
                optional<ColorFilter> _filter;

                vector<Edge> _pattern_edges;                   // by pattern rank
                vector<int> _pattern_edge_index;               // by pattern rank
                vector<vector<pair<int, int>>> _incident;      // host vertex -> (rank, other), by rank
                vector<int> _isolated;

                vector<int> _vertex_map;
                vector<char> _used;
                vector<int> _edge_map;

                auto allowed(int host_edge) const -> bool
                {
                    return ! _filter || _filter->colors[host_edge] == _filter->color;
                }

                template <typename Callback_>
                auto finish(Callback_ & callback) -> bool
                {
                    if (_isolated.empty())
                        return callback(_vertex_map, _edge_map);
                    auto saved = _vertex_map;
                    bool stop = false;
                    if (place_isolated(_isolated, _vertex_map, _used))
                        stop = callback(_vertex_map, _edge_map);
                    _vertex_map = std::move(saved);
                    return stop;
                }

                template <typename Callback_>
                auto bind_edge(int i, int host_edge, int a_image, int b_image, Callback_ & callback) -> bool
                {
                    auto [a, b] = _pattern_edges[i];
                    bool bound_a = false, bound_b = false;
                    if (_vertex_map[a] == -1) {
                        if (_used[a_image]) return false;
                        _vertex_map[a] = a_image;
                        _used[a_image] = 1;
                        bound_a = true;
                    }
                    if (_vertex_map[b] == -1) {
                        if (_used[b_image]) {
                            if (bound_a) { _vertex_map[a] = -1; _used[a_image] = 0; }
                            return false;
                        }
                        _vertex_map[b] = b_image;
                        _used[b_image] = 1;
                        bound_b = true;
                    }
                    _edge_map[_pattern_edge_index[i]] = host_edge;
                    bool stop = search(i + 1, _host.rank(host_edge), callback);
                    if (bound_b) { _vertex_map[b] = -1; _used[b_image] = 0; }
                    if (bound_a) { _vertex_map[a] = -1; _used[a_image] = 0; }
                    return stop;
                }

            public:
                EdgeOrderedSearcher(const EdgeOrderedGraph & pattern, const EdgeOrderedGraph & host, optional<ColorFilter> filter) :
                    _pattern(pattern),
                    _host(host),
                    _filter(filter),
                    _incident(host.n()),
                    _vertex_map(pattern.n(), -1),
                    _used(host.n(), 0),
                    _edge_map(pattern.m(), -1)
                {
                    for (int r = 0 ; r < pattern.m() ; ++r) {
                        _pattern_edge_index.push_back(pattern.edge_at_rank(r));
                        _pattern_edges.push_back(pattern.graph().edge(pattern.edge_at_rank(r)));
                    }
                    for (int r = 0 ; r < host.m() ; ++r) {
                        auto [u, v] = host.graph().edge(host.edge_at_rank(r));
                        _incident[u].emplace_back(r, v);
                        _incident[v].emplace_back(r, u);
                    }
                    _isolated = isolated_vertices(pattern.graph());
                }

                /// callback(vertex_map, edge_map) returns true to stop the search.
                template <typename Callback_>
                auto search(int i, int last_rank, Callback_ & callback) -> bool
                {
                    if (i == _pattern.m())
                        return finish(callback);

                    // Not enough host edges left above last_rank for the remaining pattern edges.
                    if (_host.m() - 1 - last_rank < _pattern.m() - i)
                        return false;

                    auto [a, b] = _pattern_edges[i];
                    int ha = _vertex_map[a], hb = _vertex_map[b];

                    if (ha != -1 && hb != -1) {
                        int e = _host.graph().edge_index(ha, hb);
                        if (e >= 0 && _host.rank(e) > last_rank && allowed(e))
                            return bind_edge(i, e, ha, hb, callback);
                        return false;
                    }

                    if (ha != -1 || hb != -1) {
                        int anchor = ha != -1 ? ha : hb;
                        const auto & inc = _incident[anchor];
                        auto it = std::upper_bound(inc.begin(), inc.end(), pair{last_rank, std::numeric_limits<int>::max()});
                        for ( ; it != inc.end() ; ++it) {
                            auto [r, other] = *it;
                            if (_used[other])
                                continue;
                            int e = _host.edge_at_rank(r);
                            if (! allowed(e))
                                continue;
                            bool stop = ha != -1 ? bind_edge(i, e, ha, other, callback) : bind_edge(i, e, other, hb, callback);
                            if (stop)
                                return true;
                        }
                        return false;
                    }

                    return search_free(i, last_rank + 1, _host.m(), callback);
                }

                /// Both endpoints unmapped: host edges of rank in [from, to), both orientations.
                template <typename Callback_>
                auto search_free(int i, int from, int to, Callback_ & callback) -> bool
                {
                    for (int r = from ; r < to ; ++r) {
                        int e = _host.edge_at_rank(r);
                        if (! allowed(e))
                            continue;
                        auto [x, y] = _host.graph().edge(e);
                        if (_used[x] || _used[y])
                            continue;
                        if (bind_edge(i, e, x, y, callback) || bind_edge(i, e, y, x, callback))
                            return true;
                    }
                    return false;
                }

                auto pattern_has_edges() const -> bool { return _pattern.m() > 0; }
        };

        template <typename Callback_>
        auto run_edge_ordered(const EdgeOrderedGraph & pattern, const EdgeOrderedGraph & host,
                optional<ColorFilter> filter, Callback_ & callback) -> void
        {
            if (pattern.n() > host.n() || pattern.m() > host.m())
                return;
            EdgeOrderedSearcher searcher(pattern, host, filter);
            searcher.search(0, -1, callback);
        }
    }

    auto find_edge_ordered_embedding(const EdgeOrderedGraph & pattern, const EdgeOrderedGraph & host,
            optional<ColorFilter> filter) -> optional<Embedding>
    {
        optional<Embedding> result;
        auto callback = [&] (const vector<int> & vm, const vector<int> & em) {
            result = Embedding{vm, em};
            return true;
        };
        run_edge_ordered(pattern, host, filter, callback);
        return result;
    }

    auto enumerate_copies(const EdgeOrderedGraph & pattern, const EdgeOrderedGraph & host, int64_t cap, int threads) -> vector<EdgeSet>
    {
        if (pattern.n() > host.n() || pattern.m() > host.m())
            return {};
        if (pattern.m() == 0)
            return {EdgeSet{}};

        // Split on the rank of the host edge matched to the first pattern edge.
        int workers = std::max(1, std::min(threads, host.m()));
        vector<vector<EdgeSet>> parts(workers);
        parallel_for(workers, workers, [&] (int w) {
            CopyCollector collector(cap);
            auto callback = [&] (const vector<int> &, const vector<int> & em) {
                collector.add(em);
                return false;
            };
            EdgeOrderedSearcher searcher(pattern, host, std::nullopt);
            for (int r = w ; r < host.m() ; r += workers)
                searcher.search_free(0, r, r + 1, callback);
            parts[w] = collector.finish();
        });
        return merge_sets(parts, cap);
    }

    namespace
    {
        class VertexOrderedSearcher
        {
            private:
                const VertexOrderedGraph & _pattern;
                const VertexOrderedGraph & _host;
                optional<ColorFilter> _filter;
                vector<int> _vertex_map;

                auto allowed(int host_edge) const -> bool
                {
                    return ! _filter || _filter->colors[host_edge] == _filter->color;
                }

            public:
                VertexOrderedSearcher(const VertexOrderedGraph & pattern, const VertexOrderedGraph & host, optional<ColorFilter> filter) :
                    _pattern(pattern), _host(host), _filter(filter), _vertex_map(pattern.n(), -1)
                {
                }

                template <typename Callback_>
                auto search(int i, int first_position, int last_position, Callback_ & callback) -> bool
                {
                    int k = _pattern.n();
                    if (i == k) {
                        vector<int> edge_map(_pattern.m());
                        for (int e = 0 ; e < _pattern.m() ; ++e) {
                            auto [u, v] = _pattern.graph().edge(e);
                            edge_map[e] = _host.graph().edge_index(_vertex_map[u], _vertex_map[v]);
                        }
                        return callback(_vertex_map, edge_map);
                    }

                    int pv = _pattern.vertex_at(i);
                    int limit = std::min(last_position, _host.n() - (k - i));
                    for (int q = first_position ; q <= limit ; ++q) {
                        int hv = _host.vertex_at(q);
                        bool ok = true;
                        for (int w : _pattern.graph().neighbours(pv)) {
                            if (_pattern.vrank(w) >= i)
                                continue;
                            int e = _host.graph().edge_index(hv, _vertex_map[w]);
                            if (e < 0 || ! allowed(e)) {
                                ok = false;
                                break;
                            }
                        }
                        if (! ok)
                            continue;
                        _vertex_map[pv] = hv;
                        bool stop = search(i + 1, q + 1, _host.n() - 1, callback);
                        _vertex_map[pv] = -1;
                        if (stop)
                            return true;
                    }
                    return false;
                }
        };
    }

    auto find_vertex_ordered_embedding(const VertexOrderedGraph & pattern, const VertexOrderedGraph & host,
            optional<ColorFilter> filter) -> optional<Embedding>
    {
        if (pattern.n() > host.n())
            return std::nullopt;
        optional<Embedding> result;
        auto callback = [&] (const vector<int> & vm, const vector<int> & em) {
            result = Embedding{vm, em};
            return true;
        };
        VertexOrderedSearcher searcher(pattern, host, filter);
        searcher.search(0, 0, host.n() - 1, callback);
        return result;
    }

    auto enumerate_copies(const VertexOrderedGraph & pattern, const VertexOrderedGraph & host, int64_t cap, int threads) -> vector<EdgeSet>
    {
        if (pattern.n() > host.n())
            return {};
        if (pattern.n() == 0)
            return {EdgeSet{}};

        int first_choices = host.n() - pattern.n() + 1;
        int workers = std::max(1, std::min(threads, first_choices));
        vector<vector<EdgeSet>> parts(workers);
        parallel_for(workers, workers, [&] (int w) {
            CopyCollector collector(cap);
            auto callback = [&] (const vector<int> &, const vector<int> & em) {
                collector.add(em);
                return false;
            };
            VertexOrderedSearcher searcher(pattern, host, std::nullopt);
            for (int q = w ; q < first_choices ; q += workers)
                searcher.search(0, q, q, callback);
            parts[w] = collector.finish();
        });
        return merge_sets(parts, cap);
    }

    namespace
    {
        class PlainSearcher
        {
            private:
                const Graph & _pattern;
                const Graph & _host;
                optional<ColorFilter> _filter;
                vector<int> _order;
                vector<int> _vertex_map;
                vector<char> _used;

                auto allowed(int host_edge) const -> bool
                {
                    return ! _filter || _filter->colors[host_edge] == _filter->color;
                }

            public:
                PlainSearcher(const Graph & pattern, const Graph & host, optional<ColorFilter> filter) :
                    _pattern(pattern), _host(host), _filter(filter), _vertex_map(pattern.n(), -1), _used(host.n(), 0)
                {
                    // Most-constrained first: each next vertex has the most already-placed neighbours.
                    vector<char> placed(pattern.n(), 0);
                    vector<int> links(pattern.n(), 0);
                    for (int step = 0 ; step < pattern.n() ; ++step) {
                        int best = -1;
                        for (int v = 0 ; v < pattern.n() ; ++v) {
                            if (placed[v])
                                continue;
                            if (best == -1 || links[v] > links[best]
                                    || (links[v] == links[best] && pattern.degree(v) > pattern.degree(best)))
                                best = v;
                        }
                        placed[best] = 1;
                        _order.push_back(best);
                        for (int w : pattern.neighbours(best))
                            ++links[w];
                    }
                }

                auto order() const -> const vector<int> & { return _order; }

                template <typename Callback_>
                auto search(int i, int from, int to, Callback_ & callback) -> bool
                {
                    if (i == _pattern.n()) {
                        vector<int> edge_map(_pattern.m());
                        for (int e = 0 ; e < _pattern.m() ; ++e) {
                            auto [u, v] = _pattern.edge(e);
                            edge_map[e] = _host.edge_index(_vertex_map[u], _vertex_map[v]);
                        }
                        return callback(_vertex_map, edge_map);
                    }

                    int pv = _order[i];
                    for (int h = from ; h < to ; ++h) {
                        if (_used[h] || _host.degree(h) < _pattern.degree(pv))
                            continue;
                        bool ok = true;
                        for (int w : _pattern.neighbours(pv)) {
                            if (_vertex_map[w] == -1)
                                continue;
                            int e = _host.edge_index(h, _vertex_map[w]);
                            if (e < 0 || ! allowed(e)) {
                                ok = false;
                                break;
                            }
                        }
                        if (! ok)
                            continue;
                        _vertex_map[pv] = h;
                        _used[h] = 1;
                        bool stop = search(i + 1, 0, _host.n(), callback);
                        _used[h] = 0;
                        _vertex_map[pv] = -1;
                        if (stop)
                            return true;
                    }
                    return false;
                }
        };
    }

    auto find_embedding(const Graph & pattern, const Graph & host, optional<ColorFilter> filter) -> optional<Embedding>
    {
        if (pattern.n() > host.n())
            return std::nullopt;
        optional<Embedding> result;
        auto callback = [&] (const vector<int> & vm, const vector<int> & em) {
            result = Embedding{vm, em};
            return true;
        };
        PlainSearcher searcher(pattern, host, filter);
        searcher.search(0, 0, host.n(), callback);
        return result;
    }

    auto enumerate_copies(const Graph & pattern, const Graph & host, int64_t cap, int threads) -> vector<EdgeSet>
    {
        if (pattern.n() > host.n())
            return {};
        if (pattern.n() == 0)
            return {EdgeSet{}};

        int workers = std::max(1, std::min(threads, host.n()));
        vector<vector<EdgeSet>> parts(workers);
        parallel_for(workers, workers, [&] (int w) {
            CopyCollector collector(cap);
            auto callback = [&] (const vector<int> &, const vector<int> & em) {
                collector.add(em);
                return false;
            };
            PlainSearcher searcher(pattern, host, std::nullopt);
            for (int h = w ; h < host.n() ; h += workers)
                searcher.search(0, h, h + 1, callback);
            parts[w] = collector.finish();
        });
        return merge_sets(parts, cap);
    }

    auto canonical_type_name(CanonicalType type) -> std::string_view
    {
        switch (type) {
            case CanonicalType::Lex: return "lex";
            case CanonicalType::MaxLex: return "maxlex";
            case CanonicalType::InverseLex: return "inv_lex";
            case CanonicalType::InverseMaxLex: return "inv_maxlex";
        }
        return "?";
    }

    auto parse_canonical_type(std::string_view name) -> CanonicalType
    {
        for (auto t : {CanonicalType::Lex, CanonicalType::MaxLex, CanonicalType::InverseLex, CanonicalType::InverseMaxLex})
            if (canonical_type_name(t) == name)
                return t;
        raise(ErrorKind::InvalidArgument, "unknown canonical type '" + string(name) + "'");
    }

    auto canonical_clique_ordering(int n, CanonicalType type) -> EdgeOrderedGraph
    {
        auto kn = Graph::complete(n);
        vector<int> id(n);
        for (int i = 0 ; i < n ; ++i)
            id[i] = i;
        switch (type) {
            case CanonicalType::Lex: return lex_ordering(kn, id);
            case CanonicalType::MaxLex: return max_lex_ordering(kn, id);
            case CanonicalType::InverseLex: return inverse_ordering(lex_ordering(kn, id));
            case CanonicalType::InverseMaxLex: return inverse_ordering(max_lex_ordering(kn, id));
        }
        return lex_ordering(kn, id);
    }

    auto find_canonical_clique(const EdgeOrderedGraph & host, int n, int64_t cap) -> optional<CanonicalClique>
    {
        if (n < 0 || n > host.n())
            raise(ErrorKind::InvalidArgument, "clique size must be between 0 and the host size");

        long double subsets = 1;
        for (int i = 0 ; i < n ; ++i)
            subsets = subsets * (host.n() - i) / (i + 1);
        if (subsets > static_cast<long double>(cap))
            raise(ErrorKind::CapExceeded, "C(" + to_string(host.n()) + "," + to_string(n) + ") subsets exceed the cap");

        constexpr std::array types{CanonicalType::Lex, CanonicalType::MaxLex, CanonicalType::InverseLex, CanonicalType::InverseMaxLex};
        vector<CanonicalKey> keys;
        for (auto t : types)
            keys.push_back(canonical_form_eog(canonical_clique_ordering(n, t)));

        vector<int> subset(n);
        for (int i = 0 ; i < n ; ++i)
            subset[i] = i;
        for (;;) {
            auto key = canonical_form_eog(restrict(host, subset));
            for (std::size_t t = 0 ; t < types.size() ; ++t)
                if (key == keys[t])
                    return CanonicalClique{subset, types[t]};

            int i = n - 1;
            while (i >= 0 && subset[i] == host.n() - n + i)
                --i;
            if (i < 0)
                return std::nullopt;
            ++subset[i];
            for (int j = i + 1 ; j < n ; ++j)
                subset[j] = subset[j - 1] + 1;
        }
    }
}
