#include <eoram/io.hpp>
#include <eoram/error.hpp>

#include <fstream>
#include <sstream>

using std::string;
using std::vector;

namespace eoram::io
{
    namespace
    {
        template <typename Fn>
        auto guarded(const char * what, const Fn & fn)
        {
            try {
                return fn();
            }
            catch (const json::exception & e) {
                raise(ErrorKind::InvalidArgument, string("malformed ") + what + ": " + e.what());
            }
        }

        auto pairs_to_edges(const json & j) -> vector<Edge>
        {
            vector<Edge> edges;
            for (const auto & p : j) {
                if (! p.is_array() || p.size() != 2)
                    raise(ErrorKind::InvalidArgument, "edges must be [u, v] pairs");
                edges.push_back({p[0].get<int>(), p[1].get<int>()});
            }
            return edges;
        }

        auto edges_to_pairs(const vector<Edge> & edges) -> json
        {
            json result = json::array();
            for (const auto & e : edges)
                result.push_back({e.u, e.v});
            return result;
        }
    }

    auto to_json(const Graph & g) -> json
    {
        return {{"n", g.n()}, {"edges", edges_to_pairs(g.edges())}};
    }

    auto graph_from_json(const json & j) -> Graph
    {
        return guarded("graph", [&] {
            const auto & list = j.contains("edges") ? j.at("edges") : j.at("edge_order");
            return Graph(j.at("n").get<int>(), pairs_to_edges(list));
        });
    }

    auto to_json(const EdgeOrderedGraph & g) -> json
    {
        return {{"n", g.n()}, {"edge_order", edges_to_pairs(g.sequence())}};
    }

    auto edge_ordered_from_json(const json & j) -> EdgeOrderedGraph
    {
        return guarded("edge-ordered graph", [&] {
            return EdgeOrderedGraph::from_sequence(j.at("n").get<int>(), pairs_to_edges(j.at("edge_order")));
        });
    }

    auto to_json(const VertexOrderedGraph & g) -> json
    {
        json order = json::array();
        for (int p = 0 ; p < g.n() ; ++p)
            order.push_back(g.vertex_at(p));
        return {{"n", g.n()}, {"vertex_order", order}, {"edges", edges_to_pairs(g.graph().edges())}};
    }

    auto vertex_ordered_from_json(const json & j) -> VertexOrderedGraph
    {
        return guarded("vertex-ordered graph", [&] {
            int n = j.at("n").get<int>();
            Graph g(n, pairs_to_edges(j.at("edges")));
            auto order = j.at("vertex_order").get<vector<int>>();
            if (static_cast<int>(order.size()) != n)
                raise(ErrorKind::InvalidArgument, "vertex_order must list every vertex once");
            vector<int> vrank(n, -1);
            for (int p = 0 ; p < n ; ++p) {
                int v = order[p];
                if (v < 0 || v >= n || vrank[v] != -1)
                    raise(ErrorKind::InvalidArgument, "vertex_order must list every vertex once");
                vrank[v] = p;
            }
            return VertexOrderedGraph(std::move(g), std::move(vrank));
        });
    }

    auto to_json(const Coloring & c, const EdgeOrderedGraph * host) -> json
    {
        json colors = json::array();
        for (int r = 0 ; r < c.size() ; ++r)
            colors.push_back(host ? c[host->edge_at_rank(r)] : c[r]);
        return {{"k", c.k}, {"colors", colors}};
    }

    auto coloring_from_json(const json & j, const EdgeOrderedGraph * host) -> Coloring
    {
        return guarded("colouring", [&] {
            auto by_position = j.at("colors").get<vector<int>>();
            int k = j.contains("k") ? j.at("k").get<int>() : 2;
            if (! host)
                return Coloring(k, std::move(by_position));
            if (static_cast<int>(by_position.size()) != host->m())
                raise(ErrorKind::InvalidArgument, "colouring length differs from the host edge count");
            vector<int> colors(host->m());
            for (int r = 0 ; r < host->m() ; ++r)
                colors[host->edge_at_rank(r)] = by_position[r];
            return Coloring(k, std::move(colors));
        });
    }

    auto to_json(const ZeroOneMatrix & m) -> json
    {
        json ones = json::array();
        for (auto [i, j] : m.ones())
            ones.push_back({i, j});
        return {{"rows", m.rows()}, {"cols", m.cols()}, {"ones", ones}};
    }

    auto matrix_from_json(const json & j) -> ZeroOneMatrix
    {
        return guarded("matrix", [&] {
            vector<std::pair<int, int>> ones;
            for (const auto & p : j.at("ones"))
                ones.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
            return ZeroOneMatrix(j.at("rows").get<int>(), j.at("cols").get<int>(), ones);
        });
    }

    auto to_json(const ParameterWord & w) -> json
    {
        return {{"alphabet", w.alphabet()}, {"t", w.parameters()}, {"symbols", w.tokens()}};
    }

    auto word_from_json(const json & j) -> ParameterWord
    {
        return guarded("parameter word", [&] {
            return ParameterWord::parse(j.at("alphabet").get<vector<string>>(), j.at("t").get<int>(),
                    j.at("symbols").get<vector<string>>());
        });
    }

    auto to_json(const BiOrderedGraph & f) -> json
    {
        json order = json::array();
        for (int i = 1 ; i <= f.n() ; ++i)
            order.push_back(f.vertex(i));
        return {{"graph", to_json(f.graph)}, {"vertex_order", order}};
    }

    auto bi_ordered_from_json(const json & j) -> BiOrderedGraph
    {
        return guarded("bi-ordered graph", [&] {
            auto g = edge_ordered_from_json(j.at("graph"));
            auto order = j.at("vertex_order").get<vector<int>>();
            if (static_cast<int>(order.size()) != g.n())
                raise(ErrorKind::InvalidArgument, "vertex_order must list every vertex once");
            vector<int> rank(g.n(), -1);
            for (int p = 0 ; p < g.n() ; ++p) {
                if (order[p] < 0 || order[p] >= g.n() || rank[order[p]] != -1)
                    raise(ErrorKind::InvalidArgument, "vertex_order must list every vertex once");
                rank[order[p]] = p;
            }
            return BiOrderedGraph{std::move(g), std::move(rank)};
        });
    }

    auto to_json(const GreedyInstance & instance) -> json
    {
        return {{"pattern", to_json(instance.pattern)}, {"order", instance.order}, {"d", instance.d},
            {"t", instance.t}, {"host_n", instance.host_n}, {"parts", instance.parts}};
    }

    auto greedy_instance_from_json(const json & j) -> GreedyInstance
    {
        return guarded("greedy instance", [&] {
            GreedyInstance instance;
            instance.pattern = graph_from_json(j.at("pattern"));
            instance.order = j.at("order").get<vector<int>>();
            instance.d = j.at("d").get<int>();
            instance.t = j.at("t").get<int>();
            instance.host_n = j.at("host_n").get<int>();
            instance.parts = j.at("parts").get<vector<vector<int>>>();
            return instance;
        });
    }

    auto to_json(const GreedyCertificate & certificate) -> json
    {
        if (auto copy = std::get_if<BlueCopy>(&certificate))
            return {{"type", "blue_copy"}, {"vertex_map", copy->vertex_map}};
        const auto & b = std::get<RedBiclique>(certificate);
        return {{"type", "red_biclique"}, {"left_part", b.left_part}, {"right_part", b.right_part},
            {"left", b.left}, {"right", b.right}};
    }

    auto greedy_certificate_from_json(const json & j) -> GreedyCertificate
    {
        return guarded("greedy certificate", [&] () -> GreedyCertificate {
            auto type = j.at("type").get<string>();
            if (type == "blue_copy")
                return BlueCopy{j.at("vertex_map").get<vector<int>>()};
            if (type == "red_biclique")
                return RedBiclique{j.at("left_part").get<int>(), j.at("right_part").get<int>(),
                    j.at("left").get<vector<int>>(), j.at("right").get<vector<int>>()};
            raise(ErrorKind::InvalidArgument, "unknown greedy certificate type '" + type + "'");
        });
    }

    namespace
    {
        auto mode_of(const EdgeOrderedGraph &) -> const char * { return "edge"; }
        auto mode_of(const VertexOrderedGraph &) -> const char * { return "vertex"; }
        auto mode_of(const Graph &) -> const char * { return "plain"; }

        auto ordered_host(const EdgeOrderedGraph & g) -> const EdgeOrderedGraph * { return &g; }
        auto ordered_host(const VertexOrderedGraph &) -> const EdgeOrderedGraph * { return nullptr; }
        auto ordered_host(const Graph &) -> const EdgeOrderedGraph * { return nullptr; }

        template <typename G>
        auto bad_coloring_any(const G & host, const G & red_target, const G & blue_target, const Coloring & coloring) -> json
        {
            return {{"kind", "bad_coloring"}, {"mode", mode_of(host)}, {"host", to_json(host)},
                {"red_target", to_json(red_target)}, {"blue_target", to_json(blue_target)},
                {"coloring", to_json(coloring, ordered_host(host))}};
        }

        template <typename G>
        auto arrowing_any(const G & host, const G & red_target, const G & blue_target) -> json
        {
            return {{"kind", "arrowing"}, {"mode", mode_of(host)}, {"host", to_json(host)},
                {"red_target", to_json(red_target)}, {"blue_target", to_json(blue_target)}};
        }

        template <typename G>
        auto embedding_any(const G & pattern, const G & host, const vector<int> & vertex_map,
                const Coloring * coloring, int color) -> json
        {
            json c = {{"kind", "embedding"}, {"mode", mode_of(host)}, {"pattern", to_json(pattern)},
                {"host", to_json(host)}, {"vertex_map", vertex_map}};
            if (coloring) {
                c["coloring"] = to_json(*coloring, ordered_host(host));
                c["color"] = color;
            }
            return c;
        }
    }

    auto bad_coloring_certificate(const EdgeOrderedGraph & host, const EdgeOrderedGraph & red_target,
            const EdgeOrderedGraph & blue_target, const Coloring & coloring) -> json
    {
        return bad_coloring_any(host, red_target, blue_target, coloring);
    }

    auto bad_coloring_certificate(const VertexOrderedGraph & host, const VertexOrderedGraph & red_target,
            const VertexOrderedGraph & blue_target, const Coloring & coloring) -> json
    {
        return bad_coloring_any(host, red_target, blue_target, coloring);
    }

    auto bad_coloring_certificate(const Graph & host, const Graph & red_target, const Graph & blue_target,
            const Coloring & coloring) -> json
    {
        return bad_coloring_any(host, red_target, blue_target, coloring);
    }

    auto arrowing_certificate(const EdgeOrderedGraph & host, const EdgeOrderedGraph & red_target,
            const EdgeOrderedGraph & blue_target) -> json
    {
        return arrowing_any(host, red_target, blue_target);
    }

    auto arrowing_certificate(const VertexOrderedGraph & host, const VertexOrderedGraph & red_target,
            const VertexOrderedGraph & blue_target) -> json
    {
        return arrowing_any(host, red_target, blue_target);
    }

    auto arrowing_certificate(const Graph & host, const Graph & red_target, const Graph & blue_target) -> json
    {
        return arrowing_any(host, red_target, blue_target);
    }

    auto embedding_certificate(const EdgeOrderedGraph & pattern, const EdgeOrderedGraph & host,
            const vector<int> & vertex_map, const Coloring * coloring, int color) -> json
    {
        return embedding_any(pattern, host, vertex_map, coloring, color);
    }

    auto embedding_certificate(const VertexOrderedGraph & pattern, const VertexOrderedGraph & host,
            const vector<int> & vertex_map, const Coloring * coloring, int color) -> json
    {
        return embedding_any(pattern, host, vertex_map, coloring, color);
    }

    auto embedding_certificate(const Graph & pattern, const Graph & host,
            const vector<int> & vertex_map, const Coloring * coloring, int color) -> json
    {
        return embedding_any(pattern, host, vertex_map, coloring, color);
    }

    auto greedy_certificate(const GreedyInstance & instance, const Coloring & coloring,
            const GreedyCertificate & certificate) -> json
    {
        return {{"kind", "greedy"}, {"instance", to_json(instance)}, {"coloring", to_json(coloring)},
            {"certificate", to_json(certificate)}};
    }

    auto read_file(const string & path) -> json
    {
        std::ifstream in(path);
        if (! in)
            raise(ErrorKind::InvalidArgument, "cannot read " + path);
        try {
            return json::parse(in);
        }
        catch (const json::exception & e) {
            raise(ErrorKind::InvalidArgument, path + ": " + e.what());
        }
    }

    auto write_file(const string & path, const json & j) -> void
    {
        std::ofstream out(path);
        if (! out)
            raise(ErrorKind::InvalidArgument, "cannot write " + path);
        out << dump(j);
    }

    auto dump(const json & j) -> string
    {
        return j.dump(2) + "\n";
    }
}
