#include <homlab/bench.hh>
#include <homlab/constructions.hh>
#include <homlab/error.hh>
#include <homlab/formats.hh>
#include <homlab/odd_cycle.hh>
#include <homlab/sherali_adams.hh>
#include <homlab/solvers.hh>
#include <homlab/triple_search.hh>

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace homlab;

using std::cerr;
using std::cout;
using std::function;
using std::optional;
using std::string;
using std::uint64_t;
using std::vector;

namespace
{
    constexpr int exit_solved = 0;
    constexpr int exit_budget = 2;
    constexpr int exit_usage = 64;
    constexpr int exit_data = 65;
    constexpr int exit_io = 66;

    class UsageError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    const char * formats_help = R"(
File formats. Tokens are whitespace separated, '#' starts a comment, blank lines
are ignored, vertices and colors count from 1. VALUE is an integer, p/q or inf.

  graph      graph N | digraph N, then one line per edge:  e u v  (or  a u v)
  coloring   c v color, one line per vertex
  layering   layer i v1 v2 ..., for i = 0, 1, ... in order
  layout     coloring lines, then  order v1 ... vN
  tree dec.  bag x v1 ...  for nodes x = 1..N, and  tedge x y  per tree edge
  costs      cost gu gv hu hv VALUE, for an arc (gu,gv) of G and (hu,hv) of H;
             unlisted pairs take --default-cost
  vcsp       vcsp D N, then per term  term r v1 ... vr  followed by rows
             t d1 ... dr VALUE; unlisted rows are inf
  triple     triple D, then  f i a b c value  for i in 1..3; unlisted entries
             are the projections (f_i(a,b,c) is the i-th argument)
  language   language D, then  relation NAME  followed by  p a b  lines
  LP dump    lp COLUMNS ROWS, then  var J NAME COST  per column, then
             row I: C1*xJ1 + ... = RHS  per row, exact p/q

Exit status: 0 solved, 2 budget exhausted, 64 usage, 65 malformed data,
66 I/O failure. HOMLAB_BUDGET overrides every default budget.
)";

    auto budget_override() -> optional<uint64_t>
    {
        const char * text = std::getenv("HOMLAB_BUDGET");
        if (! text || ! *text)
            return std::nullopt;
        char * end = nullptr;
        errno = 0;
        auto value = std::strtoull(text, &end, 10);
        if (errno || *end || text[0] == '-')
            throw UsageError("HOMLAB_BUDGET must be a non-negative integer");
        return value;
    }

    auto budget_or(uint64_t fallback) -> uint64_t
    {
        return budget_override().value_or(fallback);
    }

    auto sa_options() -> SaOptions
    {
        SaOptions options;
        if (auto b = budget_override())
            options.lp.pivot_budget = *b;
        return options;
    }

    auto emit(const optional<string> & path, const string & text) -> void
    {
        if (path)
            write_file(*path, text);
        else
            cout << text;
    }

    auto show_map(const vector<Vertex> & map) -> string
    {
        string result = "map";
        for (auto v : map)
            result += " " + std::to_string(v);
        return result + "\n";
    }

    auto read_graph(const string & path) -> Graph
    {
        return parse_undirected(read_file(path));
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "homlab: graph homomorphism and valued CSP toolkit" };
    app.footer(formats_help);
    app.require_subcommand(1);

    function<int ()> action;

    // hom
    string hom_g, hom_h, hom_method = "brute";
    auto hom = app.add_subcommand("hom", "Decide G -> H; prints YES and a map, or NO");
    hom->add_option("G", hom_g, "source graph")->required();
    hom->add_option("H", hom_h, "target graph")->required();
    hom->add_option("--method", hom_method, "brute or enumerate")->check(CLI::IsMember({ "brute", "enumerate" }));
    hom->callback([&] {
        action = [&] {
            auto g = parse_graph(read_file(hom_g));
            auto h = parse_graph(read_file(hom_h));
            if (g.index() != h.index())
                throw InvalidInput("G and H must both be graphs or both be digraphs");
            auto gd = std::holds_alternative<Graph>(g) ? symmetric_digraph(std::get<Graph>(g)) : std::get<DiGraph>(g);
            auto hd = std::holds_alternative<Graph>(h) ? symmetric_digraph(std::get<Graph>(h)) : std::get<DiGraph>(h);
            optional<vector<Vertex>> map;
            if (hom_method == "brute")
                map = brute_force_hom(gd, hd, budget_or(default_assignment_budget));
            else {
                ValHomOptions options;
                options.sa = sa_options();
                options.subproblem_budget = budget_or(default_subproblem_budget);
                map = valhom_solve(ValHomInstance(gd, hd), std::nullopt, options).witness;
            }
            cout << (map ? "YES\n" : "NO\n");
            if (map)
                cout << show_map(*map);
            return exit_solved;
        };
    });

    // valhom
    string vh_g, vh_h, vh_cost, vh_default = "0";
    optional<string> vh_coloring;
    auto valhom = app.add_subcommand("valhom", "Minimum-cost homomorphism; prints the value and a witness map");
    valhom->add_option("G", vh_g, "source digraph or graph")->required();
    valhom->add_option("H", vh_h, "target digraph or graph")->required();
    valhom->add_option("--cost", vh_cost, "arc cost file")->required();
    valhom->add_option("--default-cost", vh_default, "cost of unlisted arc pairs")->check(CLI::IsMember({ "0", "inf" }));
    valhom->add_option("--coloring", vh_coloring, "coloring of H to try instead of enumerating");
    valhom->callback([&] {
        action = [&] {
            auto g = parse_directed(read_file(vh_g));
            auto h = parse_directed(read_file(vh_h));
            auto instance = parse_costs(read_file(vh_cost), g, h, parse_ext_rational(vh_default));
            optional<Coloring> hint;
            if (vh_coloring)
                hint = parse_coloring(read_file(*vh_coloring), h.size());
            ValHomOptions options;
            options.sa = sa_options();
            options.subproblem_budget = budget_or(default_subproblem_budget);
            auto report = valhom_solve(instance, hint, options);
            cout << "value " << report.value << "\n";
            if (report.witness)
                cout << show_map(*report.witness);
            cout << "colors " << report.statistics.colors << "\n"
                 << "subproblems " << report.statistics.subproblems << "\n";
            return exit_solved;
        };
    });

    // oddcycle
    string oc_g;
    int oc_k = 1;
    uint64_t oc_seed = 1;
    optional<uint64_t> oc_trials;
    bool oc_transcript = false;
    auto oddcycle = app.add_subcommand("oddcycle", "Randomised test for G -> C_{2k+1}");
    oddcycle->add_option("G", oc_g, "graph")->required();
    oddcycle->add_option("--k", oc_k, "cycle length is 2k+1")->required()->check(CLI::PositiveNumber);
    oddcycle->add_option("--seed", oc_seed, "master seed")->required();
    oddcycle->add_option("--trials", oc_trials, "trial count (default: enough for error below 1/2)");
    oddcycle->add_flag("--transcript", oc_transcript, "print one line per trial");
    oddcycle->callback([&] {
        action = [&] {
            auto g = read_graph(oc_g);
            OddCycleOptions options;
            options.sa = sa_options();
            options.trials = oc_trials;
            if (! oc_trials) {
                auto plan = plan_trials(oc_k, g.size(), oc_seed);
                if (auto b = budget_override(); b && plan.trials > *b)
                    throw BudgetExceeded("planned " + std::to_string(plan.trials) + " trials exceeds the budget");
            }
            auto report = odd_cycle_solve(g, oc_k, oc_seed, options);
            cout << "seed " << oc_seed << "\n"
                 << "trials " << report.trials_run << "\n"
                 << (report.yes ? "YES\n" : "NO\n");
            if (report.witness)
                cout << show_map(*report.witness);
            if (oc_transcript)
                for (auto & line : report.transcript)
                    cout << line << "\n";
            return exit_solved;
        };
    });

    // sa
    string sa_file;
    int sa_k = 2, sa_l = 3;
    bool sa_dump = false;
    auto sa = app.add_subcommand("sa", "Sherali-Adams relaxation of a VCSP instance");
    sa->add_option("FILE", sa_file, "vcsp file")->required();
    sa->add_option("--k", sa_k, "k")->check(CLI::PositiveNumber);
    sa->add_option("--l", sa_l, "l")->check(CLI::PositiveNumber);
    sa->add_flag("--dump-lp", sa_dump, "print the LP before solving");
    sa->callback([&] {
        action = [&] {
            auto instance = parse_vcsp(read_file(sa_file));
            if (sa_dump)
                dump_lp(build_sa(instance, sa_k, sa_l).lp, cout);
            auto result = solve_sa(instance, sa_k, sa_l, sa_options());
            cout << "status " << to_string(result.status) << "\n"
                 << "optimum " << (result.status == LpStatus::Optimal ? to_string(result.optimum) : string("inf")) << "\n";
            return exit_solved;
        };
    });

    // triple
    auto triple = app.add_subcommand("triple", "Persistent majority triples");
    triple->require_subcommand(1);
    optional<string> triple_out, coloring_out;

    string tv_language, tv_triple;
    auto verify = triple->add_subcommand("verify", "Check a triple against a language");
    verify->add_option("LANGUAGE", tv_language)->required();
    verify->add_option("TRIPLE", tv_triple)->required();
    verify->callback([&] {
        action = [&] {
            auto violation = find_triple_violation(parse_language(read_file(tv_language)), parse_triple(read_file(tv_triple)));
            if (violation)
                cout << "INVALID " << violation->describe() << "\n";
            else
                cout << "VALID\n";
            return exit_solved;
        };
    });

    string ts_language;
    auto search = triple->add_subcommand("search", "Find a triple for a language, or report NONE");
    search->add_option("LANGUAGE", ts_language)->required();
    search->add_option("--out", triple_out, "write the triple here");
    search->callback([&] {
        action = [&] {
            auto result = search_triple(parse_language(read_file(ts_language)), budget_or(default_triple_search_budget));
            if (result.triple) {
                cout << "FOUND\n";
                emit(triple_out, write_triple(*result.triple));
            }
            else
                cout << "NONE\n";
            cout << "nodes " << result.nodes << "\n";
            return exit_solved;
        };
    });

    string tt_graph, tt_layout;
    auto from_track = triple->add_subcommand("from-track", "Triple from a track layout");
    from_track->add_option("G", tt_graph)->required();
    from_track->add_option("LAYOUT", tt_layout)->required();
    from_track->add_option("--out", triple_out, "write the triple here");
    from_track->callback([&] {
        action = [&] {
            auto g = read_graph(tt_graph);
            auto layout = parse_track_layout(read_file(tt_layout), g.size());
            emit(triple_out, write_triple(triple_from_track_layout(g, layout)));
            return exit_solved;
        };
    });

    string tc_graph;
    optional<string> tc_coloring;
    auto cohen = triple->add_subcommand("cohen", "Triple from a distance-2 coloring");
    cohen->add_option("G", tc_graph)->required();
    cohen->add_option("--coloring", tc_coloring, "distance-2 coloring (default: greedy)");
    cohen->add_option("--out", triple_out, "write the triple here");
    cohen->add_option("--coloring-out", coloring_out, "write the coloring here");
    cohen->callback([&] {
        action = [&] {
            auto g = read_graph(tc_graph);
            auto coloring = tc_coloring ? parse_coloring(read_file(*tc_coloring), g.size()) : distance2_coloring(g);
            auto t = cohen_triple(g, coloring);
            if (coloring_out)
                write_file(*coloring_out, write_coloring(coloring));
            emit(triple_out, write_triple(t));
            return exit_solved;
        };
    });

    string tb_graph, tb_layering;
    auto combine = triple->add_subcommand("combine", "Triple from a shadow-complete layering");
    combine->add_option("G", tb_graph)->required();
    combine->add_option("LAYERING", tb_layering)->required();
    combine->add_option("--out", triple_out, "write the triple here");
    combine->add_option("--coloring-out", coloring_out, "write the coloring here");
    combine->callback([&] {
        action = [&] {
            auto g = read_graph(tb_graph);
            auto layering = parse_layering(read_file(tb_layering), g.size());
            auto result = shadow_combine(g, layering, cohen_component_data(g, layering));
            if (coloring_out)
                write_file(*coloring_out, write_coloring(result.coloring));
            emit(triple_out, write_triple(result.triple));
            return exit_solved;
        };
    });

    // language
    auto language = app.add_subcommand("language", "Write crisp language files");
    language->require_subcommand(1);
    optional<string> language_out;

    string lc_graph, lc_coloring;
    auto from_coloring = language->add_subcommand("coloring", "Language of a colored graph");
    from_coloring->add_option("G", lc_graph)->required();
    from_coloring->add_option("COLORING", lc_coloring)->required();
    from_coloring->add_option("--out", language_out, "write the language here (default: stdout)");
    from_coloring->callback([&] {
        action = [&] {
            auto g = read_graph(lc_graph);
            emit(language_out, write_language(crisp_language_of_coloring(g, parse_coloring(read_file(lc_coloring), g.size()))));
            return exit_solved;
        };
    });

    int lo_k = 1;
    auto odd = language->add_subcommand("odd-cycle", "List-homomorphism language of C_{2k+1}");
    odd->add_option("--k", lo_k, "cycle length is 2k+1")->required()->check(CLI::PositiveNumber);
    odd->add_option("--out", language_out, "write the language here (default: stdout)");
    odd->callback([&] {
        action = [&] {
            emit(language_out, write_language(odd_cycle_language(lo_k)));
            return exit_solved;
        };
    });

    // bench
    string bench_suite;
    optional<string> bench_out;
    BenchConfig bench_config;
    auto bench = app.add_subcommand("bench", "Run a benchmark suite and write CSV");
    bench->add_option("--suite", bench_suite, "benchmark suite")->required()->check(CLI::IsMember(bench_suites()));
    bench->add_option("--out", bench_out, "CSV path (default: stdout)");
    bench->add_option("--seed", bench_config.seed, "master seed");
    bench->add_option("--instances", bench_config.instances, "oracle-equivalence instance count")->check(CLI::NonNegativeNumber);
    bench->add_option("--trials", bench_config.trials, "odd-cycles trials per row");
    bench->callback([&] {
        action = [&] {
            emit(bench_out, to_csv(run_bench(bench_suite, bench_config)));
            return exit_solved;
        };
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto status = app.exit(e);
        return status == 0 ? 0 : exit_usage;
    }

    try {
        return action();
    }
    catch (const UsageError & e) {
        cerr << "homlab: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const BudgetExceeded & e) {
        cerr << "homlab: budget exhausted: " << e.what() << "\n";
        return exit_budget;
    }
    catch (const IoError & e) {
        cerr << "homlab: " << e.what() << "\n";
        return exit_io;
    }
    catch (const InvalidInput & e) {
        cerr << "homlab: " << e.what() << "\n";
        return exit_data;
    }
}
