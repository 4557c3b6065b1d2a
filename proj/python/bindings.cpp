#include <eoram/constructions.hpp>
#include <eoram/embed.hpp>
#include <eoram/error.hpp>
#include <eoram/experiments.hpp>
#include <eoram/greedy.hpp>
#include <eoram/io.hpp>
#include <eoram/matrices.hpp>
#include <eoram/paramwords.hpp>
#include <eoram/probabilistic.hpp>
#include <eoram/ramsey.hpp>
#include <eoram/verify.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace eoram;
using std::optional;
using std::vector;

namespace
{
    auto edges_from(const vector<std::pair<int, int>> & pairs) -> vector<Edge>
    {
        vector<Edge> edges;
        for (auto [u, v] : pairs)
            edges.push_back({u, v});
        return edges;
    }

    auto pairs_from(const vector<Edge> & edges) -> vector<std::pair<int, int>>
    {
        vector<std::pair<int, int>> pairs;
        for (auto e : edges)
            pairs.emplace_back(e.u, e.v);
        return pairs;
    }

    auto answer_dict(const RamseyAnswer & a) -> py::dict
    {
        py::dict d;
        d["value"] = a.value ? py::cast(*a.value) : py::none();
        d["searched_to"] = a.searched_to;
        d["lower_certificates"] = a.lower_certificates.size();
        d["nodes"] = a.nodes;
        return d;
    }

    auto options(int threads) -> SearchOptions
    {
        SearchOptions o;
        o.threads = threads;
        return o;
    }
}

PYBIND11_MODULE(_eoram, m)
{
    m.doc() = "Edge-ordered Ramsey toolkit";

    static py::exception<Error> error(m, "EoramError");
    py::register_exception_translator([] (std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        }
        catch (const Error & e) {
            py::set_error(error, (std::string(error_kind_name(e.kind())) + ": " + e.what()).c_str());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init([] (int n, const vector<std::pair<int, int>> & edges) { return Graph(n, edges_from(edges)); }))
        .def_static("complete", &Graph::complete)
        .def_static("complete_bipartite", &Graph::complete_bipartite)
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m)
        .def_property_readonly("edges", [] (const Graph & g) { return pairs_from(g.edges()); })
        .def("edge_index", &Graph::edge_index)
        .def("__eq__", &Graph::operator==);

    py::class_<EdgeOrderedGraph>(m, "EdgeOrderedGraph")
        .def(py::init<Graph, vector<int>>())
        .def_static("from_sequence", [] (int n, const vector<std::pair<int, int>> & seq) {
            return EdgeOrderedGraph::from_sequence(n, edges_from(seq));
        })
        .def_property_readonly("graph", &EdgeOrderedGraph::graph)
        .def_property_readonly("n", &EdgeOrderedGraph::n)
        .def_property_readonly("m", &EdgeOrderedGraph::m)
        .def_property_readonly("ranks", &EdgeOrderedGraph::ranks)
        .def_property_readonly("sequence", [] (const EdgeOrderedGraph & g) { return pairs_from(g.sequence()); })
        .def("__eq__", &EdgeOrderedGraph::operator==);

    py::class_<VertexOrderedGraph>(m, "VertexOrderedGraph")
        .def(py::init<Graph, vector<int>>())
        .def_static("natural", &VertexOrderedGraph::natural)
        .def_property_readonly("graph", &VertexOrderedGraph::graph)
        .def_property_readonly("vranks", &VertexOrderedGraph::vranks);

    py::class_<Coloring>(m, "Coloring")
        .def(py::init<int, vector<int>>())
        .def_readonly("k", &Coloring::k)
        .def_readonly("colors", &Coloring::colors);

    m.def("lex_complete", &lex_complete);
    m.def("lex_bipartite", &lex_bipartite);
    m.def("edge_monotone_path", &edge_monotone_path);
    m.def("matching", &matching);
    m.def("star", &star);
    m.def("lex_ordering", &lex_ordering);
    m.def("max_lex_ordering", &max_lex_ordering);
    m.def("inverse_ordering", &inverse_ordering);
    m.def("consistent_maps", [] (const EdgeOrderedGraph & g) { return consistent_maps(g); });
    m.def("is_lexicographic", [] (const EdgeOrderedGraph & g) { return is_lexicographic(g); });
    m.def("are_isomorphic", &are_isomorphic_eog);
    m.def("random_edge_ordering", &random_edge_ordering);

    m.def("find_embedding", [] (const EdgeOrderedGraph & p, const EdgeOrderedGraph & h) -> optional<vector<int>> {
        auto e = find_edge_ordered_embedding(p, h);
        return e ? optional(e->vertex_map) : std::nullopt;
    });
    m.def("enumerate_copies", [] (const EdgeOrderedGraph & p, const EdgeOrderedGraph & h, int threads) {
        return enumerate_copies(p, h, default_copy_cap, threads);
    }, py::arg("pattern"), py::arg("host"), py::arg("threads") = 1);

    m.def("lex_ramsey", [] (const EdgeOrderedGraph & t, int max_host, int threads) {
        return answer_dict(lex_ramsey(t, std::nullopt, max_host, options(threads)));
    }, py::arg("target"), py::arg("max_host"), py::arg("threads") = 1);
    m.def("ordered_ramsey", [] (const VertexOrderedGraph & t, int max_host, int threads) {
        return answer_dict(ordered_ramsey(t, std::nullopt, max_host, options(threads)));
    }, py::arg("target"), py::arg("max_host"), py::arg("threads") = 1);
    m.def("classic_ramsey", [] (const Graph & t, int max_host, int threads) {
        return answer_dict(classic_ramsey(t, std::nullopt, max_host, options(threads)));
    }, py::arg("target"), py::arg("max_host"), py::arg("threads") = 1);
    m.def("edge_ordered_ramsey", [] (const EdgeOrderedGraph & t, int max_host, int threads) {
        return answer_dict(edge_ordered_ramsey(t, t, max_host, options(threads)));
    }, py::arg("target"), py::arg("max_host"), py::arg("threads") = 1);
    m.def("arrows", [] (const EdgeOrderedGraph & host, const EdgeOrderedGraph & red_target, const EdgeOrderedGraph & blue_target) {
        return adversary_coloring(host, red_target, blue_target).arrows;
    });

    m.def("greedy_certificate", [] (const Graph & pattern, int t, const vector<int> & colors) {
        auto instance = host_for(pattern, t);
        Coloring c(2, colors);
        return io::dump(io::greedy_certificate(instance, c, greedy_embed(instance, c)));
    });
    m.def("greedy_host_size", [] (const Graph & pattern, int t) { return host_for(pattern, t).host_n; });

    m.def("containment_probability_exact", [] (const EdgeOrderedGraph & p, const Graph & h) {
        auto f = containment_probability_exact(p, h);
        return std::pair{f.numerator, f.denominator};
    });
    m.def("containment_probability_mc", [] (const EdgeOrderedGraph & p, const Graph & h, std::int64_t trials, std::uint64_t seed) {
        auto e = containment_probability_mc(p, h, trials, seed);
        return std::pair{e.p, e.standard_error};
    });
    m.def("lemma9_feasible", [] (int n, int mm, int t, int big_m) {
        auto f = lemma9_feasible(n, mm, t, big_m);
        return std::pair{f.feasible, static_cast<double>(f.margin)};
    });

    m.def("path_pattern_ones", [] (int n) { return path_pattern(n).ones(); });
    m.def("max_weight_avoiding_path", [] (int n, int rows, int cols) {
        return max_weight_avoiding(path_pattern(n), rows, cols);
    });
    m.def("fh_weight_bound", &fh_weight_bound);
    m.def("prop5_bound", &prop5_bound);

    m.def("compose_words", [] (const vector<std::string> & f, int tf, const vector<std::string> & g, int tg) {
        return compose(ParameterWord::parse({"0"}, tf, f), ParameterWord::parse({"0"}, tg, g)).tokens();
    });
    m.def("word_blocks", [] (const vector<std::string> & w, int t) { return ParameterWord::parse({"0"}, t, w).blocks(); });

    m.def("_verify_certificate", [] (const std::string & text) {
        auto r = verify_certificate_json(io::json::parse(text));
        return std::pair{r.ok, r.detail};
    });
    m.def("_run_experiment", [] (const std::string & name, int threads, std::uint64_t seed) {
        auto r = run_experiment(name, ExperimentOptions{threads, seed});
        return io::dump(io::json{{"name", r.name}, {"pass", r.pass}, {"summary", r.summary}, {"details", r.details}});
    });
}
