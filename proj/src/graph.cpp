#include <eoram/graph.hpp>
#include <eoram/error.hpp>

#include <algorithm>
#include <numeric>
#include <string>

using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace eoram
{
    namespace
    {
        auto check_permutation(const vector<int> & p, int size, const char * what) -> void
        {
            if (static_cast<int>(p.size()) != size)
                raise(ErrorKind::InvalidArgument, string(what) + " has length " + to_string(p.size())
                        + ", expected " + to_string(size));
            vector<char> seen(size, 0);
            for (int x : p) {
                if (x < 0 || x >= size || seen[x])
                    raise(ErrorKind::InvalidArgument, string(what) + " is not a permutation of 0.." + to_string(size - 1));
                seen[x] = 1;
            }
        }

        auto inverse_of(const vector<int> & p) -> vector<int>
        {
            vector<int> result(p.size());
            for (size_t i = 0 ; i < p.size() ; ++i)
                result[p[i]] = static_cast<int>(i);
            return result;
        }
    }

    Graph::Graph(int n, vector<Edge> edges) :
        _n(n)
    {
        if (n < 0)
            raise(ErrorKind::InvalidArgument, "negative vertex count");

        for (auto & e : edges) {
            if (e.u == e.v)
                raise(ErrorKind::InvalidArgument, "loop at vertex " + to_string(e.u));
            if (e.u > e.v)
                std::swap(e.u, e.v);
            if (e.u < 0 || e.v >= n)
                raise(ErrorKind::InvalidArgument, "edge (" + to_string(e.u) + "," + to_string(e.v) + ") out of range");
        }

        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            raise(ErrorKind::InvalidArgument, "duplicate edge");

        _edges = std::move(edges);
        _index.assign(static_cast<size_t>(n) * n, -1);
        _neighbours.resize(n);
        for (int i = 0 ; i < m() ; ++i) {
            auto [u, v] = _edges[i];
            _index[static_cast<size_t>(u) * n + v] = i;
            _index[static_cast<size_t>(v) * n + u] = i;
            _neighbours[u].push_back(v);
            _neighbours[v].push_back(u);
        }
        for (auto & nb : _neighbours)
            std::sort(nb.begin(), nb.end());
    }

    auto Graph::complete(int n) -> Graph
    {
        vector<Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                edges.push_back({u, v});
        return Graph(n, std::move(edges));
    }

    auto Graph::complete_bipartite(int a, int b) -> Graph
    {
        vector<Edge> edges;
        for (int u = 0 ; u < a ; ++u)
            for (int v = a ; v < a + b ; ++v)
                edges.push_back({u, v});
        return Graph(a + b, std::move(edges));
    }

    EdgeOrderedGraph::EdgeOrderedGraph(Graph graph, vector<int> rank) :
        _graph(std::move(graph)),
        _rank(std::move(rank))
    {
        check_permutation(_rank, _graph.m(), "edge rank");
        _by_rank = inverse_of(_rank);
    }

    auto EdgeOrderedGraph::from_sequence(int n, const vector<Edge> & in_order) -> EdgeOrderedGraph
    {
        Graph g(n, in_order);
        vector<int> rank(g.m());
        for (int r = 0 ; r < static_cast<int>(in_order.size()) ; ++r)
            rank[g.edge_index(in_order[r].u, in_order[r].v)] = r;
        return EdgeOrderedGraph(std::move(g), std::move(rank));
    }

    auto EdgeOrderedGraph::sequence() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(m());
        for (int e : _by_rank)
            result.push_back(_graph.edge(e));
        return result;
    }

    VertexOrderedGraph::VertexOrderedGraph(Graph graph, vector<int> vrank) :
        _graph(std::move(graph)),
        _vrank(std::move(vrank))
    {
        check_permutation(_vrank, _graph.n(), "vertex rank");
        _by_vrank = inverse_of(_vrank);
    }

    auto VertexOrderedGraph::natural(Graph graph) -> VertexOrderedGraph
    {
        vector<int> id(graph.n());
        std::iota(id.begin(), id.end(), 0);
        return VertexOrderedGraph(std::move(graph), std::move(id));
    }

    Coloring::Coloring(int k, vector<int> c) :
        k(k),
        colors(std::move(c))
    {
        if (k < 1)
            raise(ErrorKind::InvalidArgument, "colour count must be positive");
        for (int x : colors)
            if (x < 0 || x >= k)
                raise(ErrorKind::InvalidArgument, "colour " + to_string(x) + " out of range for k=" + to_string(k));
    }

    auto Coloring::constant(int edge_count, int color, int k) -> Coloring
    {
        return Coloring(k, vector<int>(edge_count, color));
    }

    auto are_isomorphic_eog(const EdgeOrderedGraph & a, const EdgeOrderedGraph & b) -> bool
    {
        if (a.n() != b.n() || a.m() != b.m())
            return false;

        // The i-th edge of a must go to the i-th edge of b, so only the orientation of each edge
        // is free.
        vector<int> forward(a.n(), -1), backward(b.n(), -1);
        auto seq_a = a.sequence(), seq_b = b.sequence();

        auto try_bind = [&] (int x, int y, vector<std::pair<int, int>> & undo) -> bool {
            if (forward[x] == -1 && backward[y] == -1) {
                forward[x] = y;
                backward[y] = x;
                undo.emplace_back(x, y);
                return true;
            }
            return forward[x] == y;
        };

        auto search = [&] (auto & self, int i) -> bool {
            if (i == a.m())
                return true;
            for (int orientation = 0 ; orientation < 2 ; ++orientation) {
                auto [x1, x2] = seq_a[i];
                auto [y1, y2] = seq_b[i];
                if (orientation == 1)
                    std::swap(y1, y2);
                vector<std::pair<int, int>> undo;
                if (try_bind(x1, y1, undo) && try_bind(x2, y2, undo) && self(self, i + 1))
                    return true;
                for (auto [x, y] : undo) {
                    forward[x] = -1;
                    backward[y] = -1;
                }
            }
            return false;
        };

        return search(search, 0);
    }

    auto canonical_form_eog(const EdgeOrderedGraph & g, int limit) -> CanonicalKey
    {
        if (g.n() > limit)
            raise(ErrorKind::LimitExceeded, "canonical form needs n <= " + to_string(limit) + ", got " + to_string(g.n()));

        auto seq = g.sequence();
        vector<int> perm(g.n());
        std::iota(perm.begin(), perm.end(), 0);

        CanonicalKey best{g.n(), {}};
        bool have_best = false;
        vector<Edge> candidate(seq.size());

        do {
            bool worse = false, better = !have_best;
            for (size_t i = 0 ; i < seq.size() ; ++i) {
                int a = perm[seq[i].u], b = perm[seq[i].v];
                Edge e{std::min(a, b), std::max(a, b)};
                candidate[i] = e;
                if (! better) {
                    if (e < best.sequence[i]) better = true;
                    else if (best.sequence[i] < e) { worse = true; break; }
                }
            }
            if (! worse && better) {
                best.sequence = candidate;
                have_best = true;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));

        return best;
    }

    auto relabel(const EdgeOrderedGraph & g, std::span<const int> perm) -> EdgeOrderedGraph
    {
        if (static_cast<int>(perm.size()) != g.n())
            raise(ErrorKind::InvalidArgument, "relabelling has wrong length");
        auto seq = g.sequence();
        for (auto & e : seq)
            e = {perm[e.u], perm[e.v]};
        return EdgeOrderedGraph::from_sequence(g.n(), seq);
    }

    namespace
    {
        auto position_map(int n, std::span<const int> vertices) -> vector<int>
        {
            vector<int> sorted(vertices.begin(), vertices.end());
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                raise(ErrorKind::InvalidArgument, "vertex subset has duplicates");
            vector<int> where(n, -1);
            for (size_t i = 0 ; i < sorted.size() ; ++i) {
                if (sorted[i] < 0 || sorted[i] >= n)
                    raise(ErrorKind::InvalidArgument, "vertex subset out of range");
                where[sorted[i]] = static_cast<int>(i);
            }
            return where;
        }
    }

    auto restrict(const EdgeOrderedGraph & host, std::span<const int> vertices) -> EdgeOrderedGraph
    {
        auto where = position_map(host.n(), vertices);
        vector<Edge> kept;
        for (const auto & e : host.sequence())
            if (where[e.u] >= 0 && where[e.v] >= 0)
                kept.push_back({where[e.u], where[e.v]});
        return EdgeOrderedGraph::from_sequence(static_cast<int>(vertices.size()), kept);
    }

    auto restrict(const Graph & host, std::span<const int> vertices) -> Graph
    {
        auto where = position_map(host.n(), vertices);
        vector<Edge> kept;
        for (const auto & e : host.edges())
            if (where[e.u] >= 0 && where[e.v] >= 0)
                kept.push_back({where[e.u], where[e.v]});
        return Graph(static_cast<int>(vertices.size()), std::move(kept));
    }
}
