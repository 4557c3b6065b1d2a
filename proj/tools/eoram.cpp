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
#include <eoram/rng.hpp>
#include <eoram/verify.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using std::optional;
using std::string;
using std::vector;

using namespace eoram;
using io::json;

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_bad_args = 2;
    constexpr int exit_negative = 3;
    constexpr int exit_unknown = 4;
    constexpr int exit_verification = 5;

    struct Globals
    {
        std::uint64_t seed = 0;
        int threads = 1;
    };

    auto emit(const json & j, const string & out) -> void
    {
        if (out.empty())
            std::cout << io::dump(j);
        else
            io::write_file(out, j);
    }

    auto search_options(const Globals & g) -> SearchOptions
    {
        SearchOptions options;
        options.threads = g.threads;
        if (const char * dir = std::getenv("EORAM_CACHE_DIR"))
            options.cache_dir = dir;
        return options;
    }

    auto parse_color(const string & name) -> int
    {
        if (name == "red")
            return red;
        if (name == "blue")
            return blue;
        try {
            return std::stoi(name);
        }
        catch (const std::exception &) {
            raise(ErrorKind::InvalidArgument, "unknown colour '" + name + "'");
        }
    }

    /// "edge", "vertex" or "plain" according to the keys of a graph document.
    auto graph_mode(const json & j) -> string
    {
        if (j.contains("edge_order"))
            return "edge";
        if (j.contains("vertex_order"))
            return "vertex";
        return "plain";
    }

    // ---------------------------------------------------------------- construct

    struct ConstructArgs
    {
        string name;
        int n = 3;
        int a = 2;
        int b = 2;
        int block = 2;
        string graph;
        string base;
        string map;
        string bridge = "lex";
        string out;
    };

    auto run_construct(const ConstructArgs & args, const Globals & g) -> int
    {
        json result;
        const auto & name = args.name;
        auto read_map = [&] {
            return io::read_file(args.map).get<VertexMap>();
        };
        if (name == "lex")
            result = io::to_json(lex_complete(args.n));
        else if (name == "lex-bipartite")
            result = io::to_json(lex_bipartite(args.a, args.b));
        else if (name == "path")
            result = io::to_json(edge_monotone_path(args.n));
        else if (name == "matching")
            result = io::to_json(matching(args.n));
        else if (name == "star")
            result = io::to_json(star(args.n));
        else if (name == "complete")
            result = io::to_json(Graph::complete(args.n));
        else if (name == "complete-bipartite")
            result = io::to_json(Graph::complete_bipartite(args.a, args.b));
        else if (name == "ordered-path")
            result = io::to_json(VertexOrderedGraph::natural(edge_monotone_path(args.n).graph()));
        else if (name == "lex-ordering")
            result = io::to_json(lex_ordering(io::graph_from_json(io::read_file(args.graph)), read_map()));
        else if (name == "max-lex-ordering")
            result = io::to_json(max_lex_ordering(io::graph_from_json(io::read_file(args.graph)), read_map()));
        else if (name == "inverse")
            result = io::to_json(inverse_ordering(io::edge_ordered_from_json(io::read_file(args.graph))));
        else if (name == "consistent-maps") {
            auto maps = consistent_maps(io::edge_ordered_from_json(io::read_file(args.graph)));
            result = {{"maps", maps}, {"lexicographic", ! maps.empty()}};
        }
        else if (name == "random-ordering")
            result = io::to_json(random_edge_ordering(io::graph_from_json(io::read_file(args.graph)), g.seed));
        else if (name == "blow-up") {
            auto base = io::edge_ordered_from_json(io::read_file(args.base));
            BridgeGenerator bridge;
            if (args.bridge == "lex")
                bridge = lexicographic_bridge();
            else if (args.bridge == "random")
                bridge = random_bridge(g.seed);
            else
                bridge = fixed_bridge(io::edge_ordered_from_json(io::read_file(args.bridge)));
            auto blown = blow_up(base, args.block, bridge);
            result = {{"host", io::to_json(blown.host)}, {"partition", blown.partition}};
        }
        else
            raise(ErrorKind::InvalidArgument, "unknown construction '" + name + "'");
        emit(result, args.out);
        return exit_ok;
    }

    // ---------------------------------------------------------------- embed

    struct EmbedArgs
    {
        string pattern;
        string host;
        string coloring;
        string color = "red";
        bool all = false;
        std::int64_t cap = default_copy_cap;
        string out;
    };

    auto run_embed(const EmbedArgs & args, const Globals & g) -> int
    {
        auto pattern_json = io::read_file(args.pattern);
        auto host_json = io::read_file(args.host);
        auto mode = graph_mode(host_json);
        if (graph_mode(pattern_json) != mode)
            raise(ErrorKind::InvalidArgument, "pattern and host must be the same kind of graph");
        int color = parse_color(args.color);
        if (! args.coloring.empty() && args.all)
            raise(ErrorKind::InvalidArgument, "--all does not take a colouring");

        auto run = [&] (const auto & pattern, const auto & host, auto find) -> int {
            if (args.all) {
                auto copies = enumerate_copies(pattern, host, args.cap, g.threads);
                emit(json{{"count", copies.size()}, {"copies", copies}}, args.out);
                return copies.empty() ? exit_negative : exit_ok;
            }
            optional<Coloring> coloring;
            optional<ColorFilter> filter;
            if (! args.coloring.empty()) {
                coloring = io::coloring_from_json(io::read_file(args.coloring), nullptr);
                filter = ColorFilter{coloring->colors, color};
            }
            auto embedding = find(pattern, host, filter);
            if (! embedding) {
                emit(json{{"found", false}}, args.out);
                return exit_negative;
            }
            emit(io::embedding_certificate(pattern, host, embedding->vertex_map, coloring ? &*coloring : nullptr, color), args.out);
            return exit_ok;
        };

        if (mode == "edge") {
            auto host = io::edge_ordered_from_json(host_json);
            auto pattern = io::edge_ordered_from_json(pattern_json);
            // Colourings of edge-ordered hosts are stored by rank.
            if (! args.coloring.empty()) {
                auto coloring = io::coloring_from_json(io::read_file(args.coloring), &host);
                auto embedding = find_edge_ordered_embedding(pattern, host, ColorFilter{coloring.colors, color});
                if (! embedding) {
                    emit(json{{"found", false}}, args.out);
                    return exit_negative;
                }
                emit(io::embedding_certificate(pattern, host, embedding->vertex_map, &coloring, color), args.out);
                return exit_ok;
            }
            return run(pattern, host, [] (const auto & p, const auto & h, auto f) { return find_edge_ordered_embedding(p, h, f); });
        }
        if (mode == "vertex")
            return run(io::vertex_ordered_from_json(pattern_json), io::vertex_ordered_from_json(host_json),
                    [] (const auto & p, const auto & h, auto f) { return find_vertex_ordered_embedding(p, h, f); });
        return run(io::graph_from_json(pattern_json), io::graph_from_json(host_json),
                [] (const auto & p, const auto & h, auto f) { return find_embedding(p, h, f); });
    }

    // ---------------------------------------------------------------- ramsey

    struct RamseyArgs
    {
        string variant;
        string target;
        string blue_target;
        int max_host = 6;
        string emit_certs;
        string out;
    };

    auto write_certs(const string & dir, const vector<std::pair<string, json>> & certs) -> void
    {
        if (dir.empty())
            return;
        std::filesystem::create_directories(dir);
        for (const auto & [file, cert] : certs)
            io::write_file((std::filesystem::path(dir) / file).string(), cert);
    }

    auto run_ramsey(const RamseyArgs & args, const Globals & g) -> int
    {
        auto options = search_options(g);
        auto red_json = io::read_file(args.target);
        optional<json> blue_json;
        if (! args.blue_target.empty())
            blue_json = io::read_file(args.blue_target);

        RamseyAnswer answer;
        vector<std::pair<string, json>> certs;
        auto name_lower = [&] (const BadColoring & bad, std::size_t index) {
            string name = "bad_N" + std::to_string(bad.host_n);
            if (args.variant == "edge")
                name += "_class" + std::to_string(index);
            return name + ".json";
        };

        if (args.variant == "lex" || args.variant == "edge") {
            auto red_target = io::edge_ordered_from_json(red_json);
            auto blue_target = blue_json ? io::edge_ordered_from_json(*blue_json) : red_target;
            if (args.variant == "lex")
                answer = lex_ramsey(red_target, blue_target, args.max_host, options);
            else
                answer = edge_ordered_ramsey(red_target, blue_target, args.max_host, options);
            for (std::size_t i = 0 ; i < answer.lower_certificates.size() ; ++i) {
                const auto & bad = answer.lower_certificates[i];
                certs.emplace_back(name_lower(bad, i), io::bad_coloring_certificate(*bad.host_ordering, red_target, blue_target, bad.coloring));
            }
            if (answer.witness_host)
                certs.emplace_back("arrowing_N" + std::to_string(*answer.value) + ".json",
                        io::arrowing_certificate(*answer.witness_host, red_target, blue_target));
        }
        else if (args.variant == "ordered") {
            auto red_target = io::vertex_ordered_from_json(red_json);
            auto blue_target = blue_json ? io::vertex_ordered_from_json(*blue_json) : red_target;
            answer = ordered_ramsey(red_target, blue_target, args.max_host, options);
            for (std::size_t i = 0 ; i < answer.lower_certificates.size() ; ++i) {
                const auto & bad = answer.lower_certificates[i];
                certs.emplace_back(name_lower(bad, i), io::bad_coloring_certificate(
                        VertexOrderedGraph::natural(Graph::complete(bad.host_n)), red_target, blue_target, bad.coloring));
            }
            if (answer.value)
                certs.emplace_back("arrowing_N" + std::to_string(*answer.value) + ".json", io::arrowing_certificate(
                        VertexOrderedGraph::natural(Graph::complete(*answer.value)), red_target, blue_target));
        }
        else if (args.variant == "classic") {
            auto red_target = io::graph_from_json(red_json);
            auto blue_target = blue_json ? io::graph_from_json(*blue_json) : red_target;
            answer = classic_ramsey(red_target, blue_target, args.max_host, options);
            for (std::size_t i = 0 ; i < answer.lower_certificates.size() ; ++i) {
                const auto & bad = answer.lower_certificates[i];
                certs.emplace_back(name_lower(bad, i), io::bad_coloring_certificate(Graph::complete(bad.host_n), red_target, blue_target, bad.coloring));
            }
            if (answer.value)
                certs.emplace_back("arrowing_N" + std::to_string(*answer.value) + ".json",
                        io::arrowing_certificate(Graph::complete(*answer.value), red_target, blue_target));
        }
        else
            raise(ErrorKind::InvalidArgument, "unknown Ramsey variant '" + args.variant + "'");

        json result = {{"variant", args.variant}, {"value", answer.value ? json(*answer.value) : json("unknown")},
            {"searched_to", answer.searched_to}, {"lower_certificates", answer.lower_certificates.size()}};
        if (answer.witness_host)
            result["witness_host"] = io::to_json(*answer.witness_host);
        write_certs(args.emit_certs, certs);
        emit(result, args.out);
        return answer.value ? exit_ok : exit_unknown;
    }

    // ---------------------------------------------------------------- greedy

    struct GreedyArgs
    {
        string h;
        int t = 2;
        string coloring;
        bool random = false;
        string out;
        string instance;
        string cert;
    };

    auto run_greedy(const GreedyArgs & args, const Globals & g) -> int
    {
        auto instance = host_for(io::graph_from_json(io::read_file(args.h)), args.t);
        int m = instance.host_n * (instance.host_n - 1) / 2;
        Coloring coloring;
        if (args.random) {
            Rng rng(g.seed);
            vector<int> colors(m);
            for (auto & c : colors)
                c = static_cast<int>(rng.below(2));
            coloring = Coloring(2, std::move(colors));
        }
        else if (! args.coloring.empty())
            coloring = io::coloring_from_json(io::read_file(args.coloring));
        else
            raise(ErrorKind::InvalidArgument, "give --coloring or --random");
        if (coloring.size() != m)
            raise(ErrorKind::InvalidArgument, "colouring must have one colour per edge of K_" + std::to_string(instance.host_n));
        auto certificate = greedy_embed(instance, coloring);
        emit(io::greedy_certificate(instance, coloring, certificate), args.out);
        return exit_ok;
    }

    auto run_greedy_verify(const GreedyArgs & args) -> int
    {
        auto instance = io::greedy_instance_from_json(io::read_file(args.instance));
        auto coloring = io::coloring_from_json(io::read_file(args.coloring));
        auto cert_json = io::read_file(args.cert);
        if (cert_json.contains("certificate"))
            cert_json = cert_json.at("certificate");
        bool ok = verify_certificate(instance, coloring, io::greedy_certificate_from_json(cert_json));
        std::cout << io::dump(json{{"valid", ok}});
        return ok ? exit_ok : exit_verification;
    }

    // ---------------------------------------------------------------- prob

    struct ProbArgs
    {
        string pattern;
        string host;
        std::int64_t trials = 10'000;
        int t = 2;
        int m_side = 4;
        int restarts = 100;
        int n = 2;
        int m = 2;
        int big_m = 40;
        double cap = 1e6;
        int edge_limit = 8;
        string out;
    };

    auto fraction_json(const Fraction & f) -> json
    {
        return {{"numerator", f.numerator}, {"denominator", f.denominator}, {"value", f.value()}};
    }

    auto run_prob(const string & what, const ProbArgs & args, const Globals & g) -> int
    {
        json result;
        int code = exit_ok;
        if (what == "exact") {
            auto pattern = io::edge_ordered_from_json(io::read_file(args.pattern));
            auto host = io::graph_from_json(io::read_file(args.host));
            result = {{"probability", fraction_json(containment_probability_exact(pattern, host, args.edge_limit))}};
        }
        else if (what == "mc") {
            auto pattern = io::edge_ordered_from_json(io::read_file(args.pattern));
            auto host = io::graph_from_json(io::read_file(args.host));
            auto e = containment_probability_mc(pattern, host, args.trials, g.seed, g.threads);
            result = {{"hits", e.hits}, {"trials", e.trials}, {"p", e.p}, {"standard_error", e.standard_error}, {"seed", g.seed}};
        }
        else if (what == "saturate") {
            auto host = io::edge_ordered_from_json(io::read_file(args.host));
            auto pattern = io::edge_ordered_from_json(io::read_file(args.pattern));
            auto s = check_biclique_saturation(host, pattern, args.t, static_cast<std::int64_t>(args.cap));
            result = {{"saturated", s.saturated}};
            if (s.violation)
                result["violation"] = {{"left", s.violation->first}, {"right", s.violation->second}};
            else
                result["certificate"] = {{"kind", "saturation"}, {"host", io::to_json(host)},
                    {"pattern", io::to_json(pattern)}, {"t", args.t}};
            code = s.saturated ? exit_ok : exit_negative;
        }
        else if (what == "search") {
            auto pattern = io::edge_ordered_from_json(io::read_file(args.pattern));
            auto found = search_saturating_ordering(args.m_side, pattern, args.t, args.restarts, g.seed,
                    static_cast<std::int64_t>(args.cap));
            result = {{"found", found.has_value()}, {"restarts", args.restarts}, {"seed", g.seed}};
            if (found)
                result["certificate"] = {{"kind", "saturation"}, {"host", io::to_json(*found)},
                    {"pattern", io::to_json(pattern)}, {"t", args.t}};
            code = found ? exit_ok : exit_negative;
        }
        else if (what == "feasible") {
            auto f = lemma9_feasible(args.n, args.m, args.t, args.big_m);
            result = {{"feasible", f.feasible}, {"margin", static_cast<double>(f.margin)}, {"high_precision", f.high_precision},
                {"n", args.n}, {"m", args.m}, {"t", args.t}, {"M", args.big_m}};
        }
        else if (what == "decompose") {
            json blocks = json::array();
            for (const auto & b : decompose_biclique(args.t, args.n))
                blocks.push_back({{"left", b.left}, {"right", b.right}});
            result = {{"blocks", blocks}};
        }
        emit(result, args.out);
        return code;
    }

    // ---------------------------------------------------------------- matrix

    struct MatrixArgs
    {
        string matrix;
        string pattern;
        int n = 4;
        int big_n = 8;
        int rows = 4;
        int cols = 4;
        string out;
    };

    auto run_matrix(const string & what, const MatrixArgs & args, const Globals & g) -> int
    {
        json result;
        int code = exit_ok;
        if (what == "contains") {
            bool found = contains_pattern(io::matrix_from_json(io::read_file(args.matrix)), io::matrix_from_json(io::read_file(args.pattern)));
            result = {{"contains", found}};
            code = found ? exit_ok : exit_negative;
        }
        else if (what == "pattern")
            result = io::to_json(path_pattern(args.n));
        else if (what == "bound")
            result = {{"n", args.n}, {"N", args.big_n}, {"bound", fh_weight_bound(args.n, args.big_n)}, {"prop5_bound", prop5_bound(args.n)}};
        else if (what == "oracle") {
            auto pattern = args.pattern.empty() ? path_pattern(args.n) : io::matrix_from_json(io::read_file(args.pattern));
            result = {{"rows", args.rows}, {"cols", args.cols}, {"max_weight", max_weight_avoiding(pattern, args.rows, args.cols, g.threads)}};
        }
        emit(result, args.out);
        return code;
    }

    // ---------------------------------------------------------------- pwords

    struct WordsArgs
    {
        string f;
        string g;
        string word;
        string graph;
        int ground = 9;
        string coloring = "parity";
        int color = 0;
        string out;
    };

    auto bi_ordered_input(const json & j) -> BiOrderedGraph
    {
        if (j.contains("graph"))
            return io::bi_ordered_from_json(j);
        return BiOrderedGraph::natural(io::edge_ordered_from_json(j));
    }

    auto run_pwords(const string & what, const WordsArgs & args) -> int
    {
        json result;
        int code = exit_ok;
        if (what == "compose")
            result = io::to_json(compose(io::word_from_json(io::read_file(args.f)), io::word_from_json(io::read_file(args.g))));
        else if (what == "edge") {
            auto [x, y] = word_to_edge(io::word_from_json(io::read_file(args.word)));
            result = {{"edge", {x, y}}};
        }
        else if (what == "extract") {
            auto sets = extract_F_star(io::word_from_json(io::read_file(args.word)), bi_ordered_input(io::read_file(args.graph)));
            result = {{"sets", sets}};
        }
        else if (what == "verify") {
            SubsetHost host(args.ground);
            auto f = bi_ordered_input(io::read_file(args.graph));
            auto w = io::word_from_json(io::read_file(args.word));
            json rule;
            Coloring chi;
            if (args.coloring == "parity") {
                rule = {{"rule", "parity"}};
                chi = parity_coloring(host);
            }
            else if (args.coloring == "constant") {
                rule = {{"rule", "constant"}, {"color", args.color}};
                chi = Coloring::constant(host.edge_count(), args.color);
            }
            else {
                rule = io::read_file(args.coloring);
                chi = io::coloring_from_json(rule);
            }
            auto report = verify_theorem8_witness(host, f, w, chi, false);
            result = {{"precondition", report.precondition}, {"vertex_order", report.vertex_order},
                {"induced_edges", report.induced_edges}, {"edge_order", report.edge_order},
                {"monochromatic", report.monochromatic}, {"sets", report.sets}};
            if (report.color)
                result["color"] = *report.color;
            if (report.all_pass())
                result["certificate"] = {{"kind", "theorem8"}, {"ground", args.ground}, {"graph", io::to_json(f)},
                    {"word", io::to_json(w)}, {"coloring", rule}};
            code = report.all_pass() ? exit_ok : exit_verification;
        }
        emit(result, args.out);
        return code;
    }

    // ---------------------------------------------------------------- verify, repro

    auto run_verify(const string & path) -> int
    {
        auto certificate = io::read_file(path);
        if (certificate.contains("certificate") && ! certificate.contains("kind"))
            certificate = certificate.at("certificate");
        auto result = verify_certificate_json(certificate);
        std::cout << io::dump(json{{"valid", result.ok}, {"detail", result.detail}});
        return result.ok ? exit_ok : exit_verification;
    }

    auto run_repro(const string & name, const string & dir, bool no_certs, const Globals & g) -> int
    {
        vector<string> names;
        if (name == "all")
            for (const auto & e : experiments())
                names.push_back(e.name);
        else
            names.push_back(name);
        bool all_pass = true;
        for (const auto & n : names) {
            auto result = run_experiment(n, ExperimentOptions{g.threads, g.seed});
            if (! no_certs)
                write_certificates(result, (std::filesystem::path(dir.empty() ? "certs" : dir) / n).string());
            std::cout << (result.pass ? "PASS " : "FAIL ") << n << ": " << result.summary << '\n';
            std::cerr << n << " took " << result.seconds << " s\n";
            all_pass = all_pass && result.pass;
        }
        return all_pass ? exit_ok : exit_verification;
    }

    auto exit_code_for(ErrorKind kind) -> int
    {
        switch (kind) {
            case ErrorKind::LimitExceeded:
            case ErrorKind::CapExceeded:
            case ErrorKind::Overflow:
                return exit_unknown;
            case ErrorKind::NotMonochromaticWord:
                return exit_verification;
            default:
                return exit_bad_args;
        }
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Edge-ordered Ramsey toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals globals;
    app.add_option("--seed", globals.seed, "Master seed for every randomised step")->capture_default_str();
    app.add_option("--threads", globals.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

    std::function<int ()> action;

    ConstructArgs construct;
    auto * construct_cmd = app.add_subcommand("construct", "Build a named graph");
    construct_cmd->add_option("name", construct.name,
            "lex, lex-bipartite, path, ordered-path, matching, star, complete, complete-bipartite, "
            "lex-ordering, max-lex-ordering, inverse, consistent-maps, random-ordering, blow-up")->required();
    construct_cmd->add_option("--n", construct.n, "Vertex count (edge count for star)");
    construct_cmd->add_option("--a", construct.a, "Left part size");
    construct_cmd->add_option("--b", construct.b, "Right part size");
    construct_cmd->add_option("--graph", construct.graph, "Input graph file");
    construct_cmd->add_option("--map", construct.map, "Vertex map file (JSON array)");
    construct_cmd->add_option("--base", construct.base, "Blow-up base ordering");
    construct_cmd->add_option("--block", construct.block, "Blow-up block size");
    construct_cmd->add_option("--bridge", construct.bridge, "lex, random or a bridge ordering file");
    construct_cmd->add_option("--out", construct.out, "Output file (stdout if absent)");
    construct_cmd->callback([&] { action = [&] { return run_construct(construct, globals); }; });

    EmbedArgs embed;
    auto * embed_cmd = app.add_subcommand("embed", "Find a copy of a pattern in a host");
    embed_cmd->add_option("--pattern", embed.pattern)->required();
    embed_cmd->add_option("--host", embed.host)->required();
    embed_cmd->add_option("--coloring", embed.coloring, "Restrict to host edges of one colour");
    embed_cmd->add_option("--color", embed.color, "red, blue or a colour index");
    embed_cmd->add_flag("--all", embed.all, "Enumerate all copies as edge sets");
    embed_cmd->add_option("--copy-cap", embed.cap);
    embed_cmd->add_option("--out", embed.out);
    embed_cmd->callback([&] { action = [&] { return run_embed(embed, globals); }; });

    RamseyArgs ramsey;
    auto * ramsey_cmd = app.add_subcommand("ramsey", "Exact Ramsey numbers by exhaustive search");
    ramsey_cmd->add_option("variant", ramsey.variant, "lex, ordered, classic or edge")
        ->required()->check(CLI::IsMember({"lex", "ordered", "classic", "edge"}));
    ramsey_cmd->add_option("--target", ramsey.target)->required();
    ramsey_cmd->add_option("--blue-target", ramsey.blue_target);
    ramsey_cmd->add_option("--max-host", ramsey.max_host)->capture_default_str();
    ramsey_cmd->add_option("--emit-certs", ramsey.emit_certs, "Directory for certificates");
    ramsey_cmd->add_option("--out", ramsey.out);
    ramsey_cmd->callback([&] { action = [&] { return run_ramsey(ramsey, globals); }; });

    GreedyArgs greedy;
    auto * greedy_cmd = app.add_subcommand("greedy", "Greedy blue-copy or red-biclique certificate");
    greedy_cmd->set_help_flag("--help", "Print this help message and exit");
    greedy_cmd->require_subcommand(0, 1);
    greedy_cmd->add_option("--h", greedy.h, "Pattern graph");
    greedy_cmd->add_option("--t", greedy.t)->capture_default_str();
    greedy_cmd->add_option("--coloring", greedy.coloring, "Colouring of K_N by sorted edge index");
    greedy_cmd->add_flag("--random", greedy.random, "Use a seeded random colouring");
    greedy_cmd->add_option("--out", greedy.out);
    auto * greedy_verify = greedy_cmd->add_subcommand("verify", "Check a greedy certificate");
    greedy_verify->add_option("--instance", greedy.instance)->required();
    greedy_verify->add_option("--coloring", greedy.coloring)->required();
    greedy_verify->add_option("--cert", greedy.cert)->required();
    greedy_cmd->callback([&] {
        if (greedy_verify->parsed())
            action = [&] { return run_greedy_verify(greedy); };
        else {
            if (greedy.h.empty())
                throw CLI::RequiredError("--h");
            action = [&] { return run_greedy(greedy, globals); };
        }
    });

    ProbArgs prob;
    string prob_what;
    auto * prob_cmd = app.add_subcommand("prob", "Random edge orderings and the saturation machinery");
    prob_cmd->add_option("what", prob_what, "exact, mc, saturate, search, feasible or decompose")
        ->required()->check(CLI::IsMember({"exact", "mc", "saturate", "search", "feasible", "decompose"}));
    prob_cmd->add_option("--pattern", prob.pattern);
    prob_cmd->add_option("--host", prob.host);
    prob_cmd->add_option("--trials", prob.trials)->capture_default_str();
    prob_cmd->add_option("--t", prob.t)->capture_default_str();
    prob_cmd->add_option("--side", prob.m_side, "Side M of the K_{M,M} host for search")->capture_default_str();
    prob_cmd->add_option("--restarts", prob.restarts)->capture_default_str();
    prob_cmd->add_option("--n", prob.n)->capture_default_str();
    prob_cmd->add_option("--m", prob.m)->capture_default_str();
    prob_cmd->add_option("--M", prob.big_m)->capture_default_str();
    prob_cmd->add_option("--cap", prob.cap, "Cap on the number of K_{t,t} subsets checked")->capture_default_str();
    prob_cmd->add_option("--edge-limit", prob.edge_limit)->capture_default_str();
    prob_cmd->add_option("--out", prob.out);
    prob_cmd->callback([&] { action = [&] { return run_prob(prob_what, prob, globals); }; });

    MatrixArgs matrix;
    string matrix_what;
    auto * matrix_cmd = app.add_subcommand("matrix", "0-1 matrix patterns");
    matrix_cmd->add_option("what", matrix_what, "contains, pattern, bound or oracle")
        ->required()->check(CLI::IsMember({"contains", "pattern", "bound", "oracle"}));
    matrix_cmd->add_option("--matrix", matrix.matrix);
    matrix_cmd->add_option("--pattern", matrix.pattern);
    matrix_cmd->add_option("--n", matrix.n)->capture_default_str();
    matrix_cmd->add_option("--N", matrix.big_n)->capture_default_str();
    matrix_cmd->add_option("--rows", matrix.rows)->capture_default_str();
    matrix_cmd->add_option("--cols", matrix.cols)->capture_default_str();
    matrix_cmd->add_option("--out", matrix.out);
    matrix_cmd->callback([&] { action = [&] { return run_matrix(matrix_what, matrix, globals); }; });

    WordsArgs words;
    string words_what;
    auto * words_cmd = app.add_subcommand("pwords", "Parameter words and induced copies");
    words_cmd->add_option("what", words_what, "compose, edge, extract or verify")
        ->required()->check(CLI::IsMember({"compose", "edge", "extract", "verify"}));
    words_cmd->add_option("--f", words.f);
    words_cmd->add_option("--g", words.g);
    words_cmd->add_option("--word", words.word);
    words_cmd->add_option("--graph", words.graph);
    words_cmd->add_option("--ground", words.ground)->capture_default_str();
    words_cmd->add_option("--coloring", words.coloring, "parity, constant or a colouring file")->capture_default_str();
    words_cmd->add_option("--color", words.color, "Colour for the constant rule");
    words_cmd->add_option("--out", words.out);
    words_cmd->callback([&] { action = [&] { return run_pwords(words_what, words); }; });

    string cert_path;
    auto * verify_cmd = app.add_subcommand("verify", "Re-check any emitted certificate");
    verify_cmd->add_option("--cert", cert_path)->required();
    verify_cmd->callback([&] { action = [&] { return run_verify(cert_path); }; });

    string repro_name;
    string repro_dir;
    bool repro_no_certs = false;
    auto * repro_cmd = app.add_subcommand("repro", "Run a named acceptance experiment");
    vector<string> known{"all"};
    for (const auto & e : experiments())
        known.push_back(e.name);
    repro_cmd->add_option("name", repro_name)->required()->check(CLI::IsMember(known));
    repro_cmd->add_option("--emit-certs", repro_dir, "Certificate root directory (default certs/)");
    repro_cmd->add_flag("--no-certs", repro_no_certs);
    repro_cmd->callback([&] { action = [&] { return run_repro(repro_name, repro_dir, repro_no_certs, globals); }; });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_bad_args;
    }

    try {
        return action();
    }
    catch (const Error & e) {
        std::cerr << "eoram: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    catch (const json::exception & e) {
        std::cerr << "eoram: malformed JSON input: " << e.what() << '\n';
        return exit_bad_args;
    }
    catch (const std::exception & e) {
        std::cerr << "eoram: " << e.what() << '\n';
        return exit_bad_args;
    }
}
