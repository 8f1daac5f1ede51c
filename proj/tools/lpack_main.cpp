// Command-line front end. Every result is one JSON document on stdout (or --out).
// Exit codes: 0 success, 1 witness / no packing / counterexample, 2 input error, 3 resource cap.

#include <lpack/constructive.hpp>
#include <lpack/discharging.hpp>
#include <lpack/errors.hpp>
#include <lpack/generators.hpp>
#include <lpack/graph_measures.hpp>
#include <lpack/json_io.hpp>
#include <lpack/kernels.hpp>
#include <lpack/obstruction.hpp>
#include <lpack/solver.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace lpack;
using std::string;

namespace
{
    constexpr const char * schemas = R"(
JSON formats:
  graph      {"n": 5, "edges": [[0,1], ...]}                      edges u < v, sorted on output
  bigraph    {"s": 4, "rows": [3, 5, ...]}                       bit j of rows[i] set iff a_i ~ b_j
             {"s": 4, "edges": [[i,j], ...]}                     accepted on input
  cover      {"k": 3, "graph": <graph>, "arcs": [{"u":0, "v":1, "perm":[1,0,2]}, ...]}
             colour c at u conflicts with perm[c] at v; one arc per edge, either direction
  lists      {"k": 2, "lists": {"0": [1,2], ...}, "graph": <graph>}   graph may be given by --graph
  packing    {"k": 3, "assign": {"0": [c_1, ..., c_k], ...}}     colour of each vertex in each colouring

Exit codes: 0 success, 1 witness / no packing / counterexample, 2 input error, 3 resource cap exceeded.
)";

    struct Output
    {
        string path;
        std::uint64_t seed = 0;

        auto emit(Json j) const -> void
        {
            j["seed"] = seed;
            if (path.empty() || path == "-")
                std::cout << dump(j);
            else {
                std::ofstream out{path};
                if (! out)
                    throw InputError{"cannot write '" + path + "'"};
                out << dump(j);
            }
        }
    };

    auto write_file(const string & path, const Json & j) -> void
    {
        std::ofstream out{path};
        if (! out)
            throw InputError{"cannot write '" + path + "'"};
        out << dump(j);
    }
}

int main(int argc, char * argv[])
{
    CLI::App app{"Packing colourings of small graphs: solvers, constructive packers and lemma checks"};
    app.footer(schemas);
    app.require_subcommand(1);

    Output out;
    app.add_option("--out", out.path, "write the result here instead of stdout");

    std::function<int ()> run;
    auto command = [&] (const string & name, const string & help) {
        auto * sub = app.add_subcommand(name, help);
        sub->add_option("--seed", out.seed, "seed, echoed in the output")->capture_default_str();
        return sub;
    };

    // gen
    string gen_kind;
    std::vector<int> gen_params;
    auto * gen = command("gen", "named graph: cycle n, path n, complete n, complete_bipartite a b, grid r c, cube [d], "
            "dodecahedron, icosahedron, gnp n percent, triangulation splits");
    gen->add_option("kind", gen_kind)->required();
    gen->add_option("params", gen_params);
    gen->callback([&] { run = [&] {
        out.emit(graph_to_json(generate(gen_kind, gen_params, out.seed)));
        return 0; }; });

    // girth, mad
    string graph_path;
    auto * gir = command("girth", "girth of a graph (null when acyclic)");
    gir->add_option("--graph", graph_path, "graph JSON file, - for stdin")->required();
    gir->callback([&] { run = [&] {
        auto g = graph_from_json(read_json_file(graph_path));
        auto value = girth(g);
        out.emit({{"girth", value ? Json(*value) : Json(nullptr)}});
        return 0; }; });

    auto * mad_cmd = command("mad", "maximum average degree (exact rational) and degeneracy");
    mad_cmd->add_option("--graph", graph_path)->required();
    mad_cmd->callback([&] { run = [&] {
        auto g = graph_from_json(read_json_file(graph_path));
        auto d = degeneracy(g);
        out.emit({{"mad", to_string(mad(g))}, {"degeneracy", d.value}, {"degeneracy_order", d.order}});
        return 0; }; });

    // discharge
    string rule_name = "P4";
    int rule_k = 3;
    auto * dis = command("discharge", "audit a discharging rule (P4, P5, openB) on a graph");
    dis->add_option("--graph", graph_path)->required();
    dis->add_option("--rule", rule_name)->capture_default_str();
    dis->add_option("--k", rule_k, "degree of the receiving vertices for openB")->capture_default_str();
    dis->callback([&] { run = [&] {
        auto g = graph_from_json(read_json_file(graph_path));
        auto rule = rule_by_name(rule_name, rule_k);
        Json j = ledger_to_json(discharge_audit(g, rule));
        j["rule"] = rule.name;
        j["passes_exclusions"] = rule_name == "P4" ? passes_mad4_exclusions(g)
            : rule_name == "P5" ? passes_girth5_exclusions(g) : passes_light_edge_exclusions(g, rule_k);
        out.emit(j);
        return 0; }; });

    // solve, solve-list
    string cover_path, lists_path;
    auto * solve = command("solve", "exact correspondence packing of a cover");
    solve->add_option("--cover", cover_path)->required();
    solve->callback([&] { run = [&] {
        auto c = cover_from_json(read_json_file(cover_path));
        auto p = solve_packing(c);
        if (! p) {
            out.emit({{"status", "none"}});
            return 1;
        }
        out.emit({{"status", "packing"}, {"packing", packing_to_json(*p)}});
        return 0; }; });

    int peel = 0;
    auto * solve_list = command("solve-list", "exact list packing");
    solve_list->add_option("--lists", lists_path)->required();
    solve_list->add_option("--graph", graph_path, "graph, when the lists file has none");
    solve_list->add_option("--peel", peel, "peel colourings off down to this list size first");
    solve_list->callback([&] { run = [&] {
        std::optional<Graph> g;
        if (! graph_path.empty())
            g = graph_from_json(read_json_file(graph_path));
        auto l = lists_from_json(read_json_file(lists_path), g ? &*g : nullptr);
        auto p = peel > 0 ? pack_by_peeling(l, peel) : solve_list_packing(l);
        if (! p) {
            out.emit({{"status", "none"}});
            return 1;
        }
        out.emit({{"status", "packing"}, {"packing", packing_to_json(*p)}});
        return 0; }; });

    // chromatic, adversary
    string mode_name = "correspondence";
    int upper = 5, colours = 3, universe = 0;
    std::uint64_t cap = 0;
    auto * chrom = command("chromatic", "packing number (list or correspondence) of a tiny graph");
    chrom->add_option("--graph", graph_path)->required();
    chrom->add_option("--mode", mode_name)->capture_default_str();
    chrom->add_option("--upper", upper)->capture_default_str();
    chrom->add_option("--cap", cap, "candidate cap per k (0 = default)");
    chrom->callback([&] { run = [&] {
        auto g = graph_from_json(read_json_file(graph_path));
        out.emit({{"value", packing_number(g, parse_mode(mode_name), upper, cap)}});
        return 0; }; });

    auto * adv = command("adversary", "a cover or list assignment without a packing");
    adv->add_option("--graph", graph_path)->required();
    adv->add_option("--mode", mode_name)->capture_default_str();
    adv->add_option("--k", colours)->capture_default_str();
    adv->add_option("--universe", universe, "colour universe for lists (default k*n)");
    adv->add_option("--cap", cap, "candidate cap (0 = default)");
    adv->callback([&] { run = [&] {
        auto g = graph_from_json(read_json_file(graph_path));
        Json witness;
        if (parse_mode(mode_name) == PackingMode::correspondence) {
            auto c = adversarial_cover_search(g, colours, cap ? cap : default_cover_cap);
            if (c)
                witness = cover_to_json(*c);
        }
        else {
            auto l = adversarial_list_search(g, colours, universe ? universe : colours * g.order(), cap ? cap : default_list_cap);
            if (l)
                witness = lists_to_json(*l);
        }
        if (witness.is_null()) {
            out.emit({{"status", "none"}});
            return 0;
        }
        out.emit({{"status", "witness"}, {"witness", witness}});
        return 1; }; });

    // pack
    string regime_name, trace_path;
    int budget = 2;
    bool no_class_check = false;
    auto * pack = command("pack", "constructive packing by reductions and bounded repair; --graph draws a random cover from --seed");
    pack->add_option("--regime", regime_name, "mad4_k5, girth5_k4 or planar_k8")->required();
    auto * cover_opt = pack->add_option("--cover", cover_path);
    pack->add_option("--graph", graph_path)->excludes(cover_opt);
    pack->add_option("--budget", budget)->capture_default_str();
    pack->add_option("--trace", trace_path, "write the repair trace here");
    pack->add_flag("--no-class-check", no_class_check, "skip the girth and mad checks");
    pack->callback([&] { run = [&] {
        auto regime = parse_regime(regime_name);
        CorrespondenceCover c;
        if (! cover_path.empty())
            c = cover_from_json(read_json_file(cover_path));
        else if (! graph_path.empty()) {
            Rng rng = trial_rng(out.seed, 0);
            c = random_cover(graph_from_json(read_json_file(graph_path)), regime_colours(regime), rng);
        }
        else
            throw InputError{"pack needs --cover or --graph"};

        PackOptions options;
        options.budget = budget;
        options.check_class = ! no_class_check;
        try {
            auto result = pack_constructive(c, regime, options);
            if (! trace_path.empty())
                write_file(trace_path, trace_to_json(result.trace));
            Json reductions = Json::array();
            for (auto & r : result.reductions)
                reductions.push_back({{"kind", to_string(r.kind)}, {"vertices", r.vertices}});
            out.emit({{"status", "packing"}, {"packing", packing_to_json(result.packing)}, {"reductions", reductions},
                {"max_budget_used", result.trace.max_budget_used}});
            return 0;
        }
        catch (const ExtensionFailure & e) {
            if (! trace_path.empty())
                write_file(trace_path, trace_to_json(e.trace));
            out.emit({{"status", "failure"}, {"reason", e.what()}, {"trace", trace_to_json(e.trace)}});
            return 1;
        } }; });

    // classify
    string bigraph_path;
    auto * classify = command("classify", "1-factor, or the obstruction (types 1-4 for (8,3)-bigraphs, else a Hall violator)");
    classify->add_option("--bigraph", bigraph_path)->required();
    classify->callback([&] { run = [&] {
        auto h = bigraph_from_json(read_json_file(bigraph_path));
        if (auto m = one_factor(h)) {
            out.emit({{"status", "one_factor"}, {"one_factor", *m}});
            return 0;
        }
        Json j{{"status", "obstruction"}};
        if (is_st(h, 8, 3))
            j["obstruction"] = obstruction_to_json(*classify_obstruction(h));
        else {
            auto x = hall_violator(h);
            j["obstruction"] = obstruction_to_json(Obstruction{Side::a, x->set, x->neighbourhood, 0, -1, {}, {}});
        }
        out.emit(j);
        return 1; }; });

    // verify-lemma
    string lemma;
    bool exhaustive = false, timing = false, list_lemmas = false;
    std::uint64_t trials = 1000;
    string report_path;
    auto * ver = command("verify-lemma", "check a matching lemma exhaustively or on seeded random instances");
    ver->add_option("name", lemma);
    ver->add_flag("--exhaustive", exhaustive);
    ver->add_option("--trials", trials)->capture_default_str();
    ver->add_option("--report", report_path, "also write the report here");
    ver->add_flag("--timing", timing, "include elapsed time (makes reports run-dependent)");
    ver->add_flag("--list", list_lemmas, "list registered lemmas");
    ver->callback([&] { run = [&] {
        if (list_lemmas) {
            out.emit({{"lemmas", lemma_names()}});
            return 0;
        }
        if (lemma.empty())
            throw InputError{"verify-lemma needs a lemma name (see --list)"};
        Strategy strategy;
        strategy.kind = exhaustive ? Strategy::Kind::exhaustive : Strategy::Kind::randomized;
        strategy.trials = trials;
        strategy.seed = out.seed;
        auto report = verify(lemma, strategy);
        Json j = report_to_json(report, timing);
        if (! report_path.empty())
            write_file(report_path, j);
        out.emit(j);
        return report.counterexamples.empty() ? 0 : 1; }; });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return 2;
    }

    try {
        return run();
    }
    catch (const InputError & e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    catch (const ResourceError & e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        out.emit({{"status", "resource"}, {"reason", e.what()}});
        return 3;
    }
}
