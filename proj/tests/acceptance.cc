#include <homlab/bench.hh>
#include <homlab/constructions.hh>
#include <homlab/error.hh>
#include <homlab/language.hh>
#include <homlab/odd_cycle.hh>
#include <homlab/sherali_adams.hh>
#include <homlab/solvers.hh>
#include <homlab/triple_search.hh>
#include <homlab/tree_decomposition.hh>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

using namespace homlab;

using std::string;
using std::vector;

namespace
{
    using Clock = std::chrono::steady_clock;

    int failures = 0;

    auto report(int criterion, bool pass, double seconds, double limit, const string & detail) -> void
    {
        bool in_time = seconds <= limit;
        bool ok = pass && in_time;
        failures += ! ok;
        std::printf("criterion %2d %s  %s  [%.1f s, limit %.0f s%s]\n", criterion, ok ? "PASS" : "FAIL", detail.c_str(), seconds,
                limit, in_time ? "" : ", too slow");
        std::fflush(stdout);
    }

    auto timed(const std::function<void ()> & body) -> double
    {
        auto start = Clock::now();
        body();
        return std::chrono::duration<double>(Clock::now() - start).count();
    }

    auto pick(std::mt19937_64 & rng, int lo, int hi) -> int
    {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    auto random_tree(std::mt19937_64 & rng, int n) -> Graph
    {
        Graph g(n);
        for (int v = 2 ; v <= n ; ++v)
            g.add_edge(pick(rng, 1, v - 1), v);
        return g;
    }

    /// Connected, maximum degree at most max_degree (the spanning path keeps it connected).
    auto random_bounded_degree(std::mt19937_64 & rng, int n, int max_degree) -> Graph
    {
        vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 1);
        std::shuffle(order.begin(), order.end(), rng);
        Graph g(n);
        for (int i = 1 ; i < n ; ++i)
            g.add_edge(order[i - 1], order[i]);
        for (int attempt = 0 ; attempt < 3 * n ; ++attempt) {
            int u = pick(rng, 1, n), v = pick(rng, 1, n);
            if (u != v && g.degree(u) < max_degree && g.degree(v) < max_degree)
                g.add_edge(u, v);
        }
        return g;
    }

    /// Majority and polymorphism straight from the definitions.
    auto naive_majority_polymorphism(const OperationTable & f, const CrispLanguage & language) -> bool
    {
        int d = f.domain_size();
        for (int a = 1 ; a <= d ; ++a)
            for (int b = 1 ; b <= d ; ++b)
                if (f(a, a, b) != a || f(a, b, a) != a || f(b, a, a) != a)
                    return false;
        for (auto & r : language.relations())
            for (auto & t1 : r.tuples)
                for (auto & t2 : r.tuples)
                    for (auto & t3 : r.tuples) {
                        Pair image{ f(t1.first, t2.first, t3.first), f(t1.second, t2.second, t3.second) };
                        if (std::find(r.tuples.begin(), r.tuples.end(), image) == r.tuples.end())
                            return false;
                    }
        return true;
    }

    auto criterion_1() -> void
    {
        bool ok = true;
        auto seconds = timed([&] {
            for (int k = 1 ; k <= 6 ; ++k) {
                auto f = odd_cycle_majority(k);
                auto language = odd_cycle_language(k);
                bool library = is_majority(f);
                for (auto & r : language.relations())
                    library = library && is_polymorphism(f, r);
                ok = ok && library && naive_majority_polymorphism(f, language);
            }
        });
        report(1, ok, seconds, 60, "odd-cycle majority is a verified polymorphism for k = 1..6");
    }

    auto criterion_2() -> void
    {
        TripleSearchResult result;
        auto seconds = timed([&] { result = search_triple(odd_cycle_language(4), default_triple_search_budget); });
        report(2, ! result.triple, seconds, 600,
                string("search on the C_9 list language: ") + (result.triple ? "FOUND" : "NONE") + ", " + std::to_string(result.nodes)
                + " nodes, " + std::to_string(result.variables) + " variables");
    }

    auto criterion_3() -> void
    {
        vector<std::pair<int, Rational>> claims{ { 3, Rational(1365, 1000) }, { 4, Rational(1313, 1000) },
            { 5, Rational(1274, 1000) }, { 6, Rational(1244, 1000) } };
        bool ok = true;
        string detail;
        auto seconds = timed([&] {
            for (auto & [k, bound] : claims) {
                bound.canonicalize();
                auto enclosure = alpha_interval(k);
                ok = ok && alpha_below(k, bound) && enclosure.upper < bound.get_d() && enclosure.lower <= enclosure.upper;
                char buffer[96];
                std::snprintf(buffer, sizeof(buffer), " a_%d in [%.6f, %.6f] < %s;", k, enclosure.lower, enclosure.upper,
                        bound.get_str().c_str());
                detail += buffer;
            }
        });
        report(3, ok, seconds, 1, "alpha table:" + detail);
    }

    struct Corpus
    {
        vector<std::pair<string, Graph>> graphs;
    };

    auto build_corpus() -> Corpus
    {
        Corpus corpus;
        std::mt19937_64 rng(4);
        for (int n = 1 ; n <= 12 ; ++n)
            corpus.graphs.emplace_back("path", path_graph(n));
        for (int n = 3 ; n <= 12 ; ++n)
            corpus.graphs.emplace_back("cycle", cycle_graph(n));
        for (int i = 0 ; i < 30 ; ++i)
            corpus.graphs.emplace_back("tree", random_tree(rng, pick(rng, 2, 12)));
        for (int i = 0 ; i < 40 ; ++i)
            corpus.graphs.emplace_back("degree-3", random_bounded_degree(rng, pick(rng, 4, 12), 3));
        for (int i = 0 ; i < 20 ; ++i)
            corpus.graphs.emplace_back("degree-4", random_bounded_degree(rng, pick(rng, 5, 12), 4));
        return corpus;
    }

    auto criteria_4_and_5() -> void
    {
        auto corpus = build_corpus();
        int instances = 0, verified = 0, cohen_bound = 0, combine_bound = 0, combines = 0, filled = 0;
        std::mt19937_64 rng(5);
        auto seconds = timed([&] {
            for (auto & [family, g] : corpus.graphs) {
                int n = g.size();
                auto check = [&] (const Graph & graph, const Coloring & coloring, const Triple & triple) {
                    ++instances;
                    verified += is_proper(graph, coloring) && verify_persistent_triple(crisp_language_of_coloring(graph, coloring), triple);
                };

                auto layout = greedy_track_layout(g);
                check(g, layout.coloring(), triple_from_track_layout(g, layout));

                auto gamma = distance2_coloring(g);
                check(g, gamma, cohen_triple(g, gamma));
                int delta = g.max_degree();
                cohen_bound += gamma.used_colors() <= delta * delta + 1;

                vector<Vertex> keep(n);
                std::iota(keep.begin(), keep.end(), 1);
                std::shuffle(keep.begin(), keep.end(), rng);
                keep.resize(n - std::min(n - 1, pick(rng, 0, 2)));
                std::sort(keep.begin(), keep.end());
                auto h = induced_subgraph(g, keep);
                auto h_gamma = distance2_coloring(h.graph);
                ColoredTriple h_data{ h_gamma, cohen_triple(h.graph, h_gamma) };
                auto extended = extend_after_deletion(g, h, h_data);
                check(g, extended.coloring, extended.triple);
                verified -= extended.coloring.used_colors() > h_gamma.used_colors() + (n - static_cast<int>(keep.size()));

                Graph target = g;
                auto layering = bfs_layering(target, 1);
                if (! is_shadow_complete(target, layering)) {
                    vector<Vertex> order(n);
                    std::iota(order.begin(), order.end(), 1);
                    target = fill_bags(g, decomposition_from_elimination(g, order));
                    layering = bfs_layering(target, 1);
                    ++filled;
                }
                if (! is_shadow_complete(target, layering))
                    continue;
                auto data = cohen_component_data(target, layering);
                auto combined = shadow_combine(target, layering, data);
                check(target, combined.coloring, combined.triple);
                ++combines;
                int c = 0, s = 0;
                for (auto & d : data)
                    c = std::max(c, d.local.coloring.used_colors());
                for (int i = 1 ; i < layering.depth() ; ++i)
                    for (auto & x : connected_components(target, layering.layer(i)))
                        s = std::max(s, static_cast<int>(shadow_of(target, layering, i, x).size()));
                combine_bound += combined.coloring.used_colors() <= 3 * static_cast<long>(std::pow(c + 1, s + 1));
            }
        });
        int graphs = static_cast<int>(corpus.graphs.size());
        report(4, graphs >= 100 && verified == instances && combines == graphs, seconds, 300,
                std::to_string(verified) + "/" + std::to_string(instances) + " constructions verified over " + std::to_string(graphs)
                + " graphs (n <= 12), " + std::to_string(filled) + " combined on chordal fills");
        report(5, cohen_bound == graphs && combine_bound == combines, seconds, 300,
                "cohen <= D^2+1 on " + std::to_string(cohen_bound) + "/" + std::to_string(graphs) + ", combine <= 3(c+1)^(s+1) on "
                + std::to_string(combine_bound) + "/" + std::to_string(combines));
    }

    struct VerifiedLanguage
    {
        CrispLanguage language;
        vector<const Relation *> nonempty;
    };

    auto criterion_6() -> void
    {
        std::mt19937_64 rng(6);
        int instances = 0, agree = 0, infeasible = 0, by_lp = 0;
        auto seconds = timed([&] {
            while (instances < 240) {
                int d = pick(rng, 2, 7);
                auto g = random_bounded_degree(rng, d, pick(rng, 1, 4));
                Coloring coloring;
                Triple triple;
                switch (instances % 3) {
                    case 0: {
                        auto layout = greedy_track_layout(g);
                        coloring = layout.coloring();
                        triple = triple_from_track_layout(g, layout);
                        break;
                    }
                    case 1:
                        coloring = distance2_coloring(g);
                        triple = cohen_triple(g, coloring);
                        break;
                    default: {
                        auto layering = bfs_layering(g, 1);
                        if (! is_shadow_complete(g, layering))
                            continue;
                        auto combined = shadow_combine(g, layering, cohen_component_data(g, layering));
                        coloring = combined.coloring;
                        triple = combined.triple;
                    }
                }
                auto language = crisp_language_of_coloring(g, coloring);
                if (! verify_persistent_triple(language, triple))
                    continue;
                vector<const Relation *> nonempty;
                for (auto & r : language.relations())
                    if (! r.tuples.empty())
                        nonempty.push_back(&r);
                if (nonempty.empty())
                    continue;

                int max_vars = 2;
                while (max_vars < 8 && std::pow(d, max_vars + 1) <= 16807)
                    ++max_vars;
                int n = pick(rng, 2, max_vars);
                VcspInstance instance(d, n);
                // three in four instances hide a feasible assignment
                bool planted = instances % 4 != 3;
                vector<int> hidden(n + 1);
                for (auto & v : hidden)
                    v = pick(rng, 1, d);
                int terms = pick(rng, 1, 2 * n);
                for (int t = 0 ; t < terms ; ++t) {
                    int x = pick(rng, 1, n), y = pick(rng, 1, n - 1);
                    y = y >= x ? y + 1 : y;
                    vector<const Relation *> candidates;
                    for (auto r : nonempty)
                        if (! planted || std::find(r->tuples.begin(), r->tuples.end(), Pair{ hidden[x], hidden[y] }) != r->tuples.end())
                            candidates.push_back(r);
                    if (candidates.empty())
                        continue;
                    auto & r = *candidates[pick(rng, 0, static_cast<int>(candidates.size()) - 1)];
                    CostFunction f(d, 2, ExtRational::infinity());
                    for (auto [a, b] : r.tuples)
                        f.set(vector<int>{ a, b }, ExtRational{ Rational(pick(rng, 0, 6), pick(rng, 1, 3)) });
                    instance.add_term(f, { x, y });
                }

                auto exact = brute_force_opt(instance);
                auto sa = solve_sa(instance, 2, 3);
                bool match = exact.value.is_infinite() ? sa.status == LpStatus::Infeasible
                    : sa.status == LpStatus::Optimal && ExtRational{ sa.optimum } == exact.value;
                agree += match;
                infeasible += exact.value.is_infinite();
                by_lp += ! sa.statistics.certified;
                ++instances;
            }
        });
        report(6, instances >= 200 && agree == instances, seconds, 600,
                std::to_string(agree) + "/" + std::to_string(instances) + " SA(2,3) optima equal brute force (" + std::to_string(infeasible)
                + " infeasible, " + std::to_string(by_lp) + " through the LP), |D| <= 7, <= 8 variables");
    }

    auto criterion_7() -> void
    {
        std::mt19937_64 rng(7);
        int instances = 60, agree = 0, finite = 0;
        auto seconds = timed([&] {
            for (int i = 0 ; i < instances ; ++i) {
                int n = pick(rng, 3, 7), h = pick(rng, 2, 5);
                DiGraph g(n), target(h);
                {
                    vector<Edge> arcs;
                    for (int u = 1 ; u <= n ; ++u)
                        for (int v = 1 ; v <= n ; ++v)
                            if (u != v && pick(rng, 0, 99) < 30)
                                arcs.emplace_back(u, v);
                    g = DiGraph(n, arcs);
                    arcs.clear();
                    for (int u = 1 ; u <= h ; ++u)
                        for (int v = 1 ; v <= h ; ++v)
                            if (pick(rng, 0, 99) < 50)
                                arcs.emplace_back(u, v);
                    target = DiGraph(h, arcs);
                }
                ValHomInstance instance(g, target);
                for (auto & a : g.arcs())
                    for (auto & b : target.arcs()) {
                        int v = pick(rng, 0, 6);
                        instance.set_eta(a, b, v == 6 ? ExtRational::infinity() : ExtRational{ Rational(v, 2) });
                    }
                auto fast = valhom_solve(instance);
                auto slow = brute_force_valhom(instance);
                bool witness_ok = fast.value.is_infinite() || (fast.witness && instance.cost(*fast.witness) == fast.value
                            && is_homomorphism(g, target, *fast.witness));
                agree += fast.value == slow.value && witness_ok;
                finite += slow.value.is_finite();
            }
        });
        report(7, agree == instances, seconds, 900,
                std::to_string(agree) + "/" + std::to_string(instances) + " valhom values equal brute force with revalidated witnesses ("
                + std::to_string(finite) + " finite), n <= 7, h <= 5");
    }

    auto control_graph() -> Graph
    {
        Graph g(12, complete_graph(4).edges());
        for (int v = 5 ; v <= 12 ; ++v)
            g.add_edge(v - 1, v);
        return g;
    }

    constexpr std::uint64_t criterion_8_seed = 20260601;
    constexpr std::uint64_t criterion_8_trials = 10000;

    auto run_trials(const Graph & g, std::uint64_t seed) -> OddCycleReport
    {
        OddCycleOptions options;
        options.trials = criterion_8_trials;
        options.stop_at_yes = false;
        return odd_cycle_solve(g, 3, seed, options);
    }

    auto count_yes(const OddCycleReport & r) -> std::uint64_t
    {
        std::uint64_t yes = 0;
        for (auto & line : r.transcript)
            yes += line.ends_with(" YES");
        return yes;
    }

    OddCycleReport yes_run, no_run;

    auto criterion_8() -> void
    {
        auto g = odd_cycle_with_pendants(4, 12);
        bool ok = false;
        string detail;
        auto seconds = timed([&] {
            yes_run = run_trials(g, criterion_8_seed);
            no_run = run_trials(control_graph(), criterion_8_seed + 1);
            auto yes = count_yes(yes_run), unsound = count_yes(no_run);
            double p = success_interval(3, 12).lower;
            double sigma = std::sqrt(p * (1 - p) / criterion_8_trials);
            double rate = static_cast<double>(yes) / criterion_8_trials;
            bool witness_ok = yes_run.witness && is_homomorphism(g, cycle_graph(7), *yes_run.witness);
            ok = yes_run.trials_run == criterion_8_trials && no_run.trials_run == criterion_8_trials && unsound == 0
                && ! no_run.yes && rate >= p - 3 * sigma && witness_ok;
            char buffer[256];
            std::snprintf(buffer, sizeof(buffer),
                    "C_9 + 3 pendants (n = 12, k = 3): YES rate %.4f vs bound %.5f - 3 sigma = %.5f; K_4 control: %llu unsound YES of %llu",
                    rate, p, p - 3 * sigma, static_cast<unsigned long long>(unsound), static_cast<unsigned long long>(no_run.trials_run));
            detail = buffer;
        });
        report(8, ok, seconds, 600, detail);
    }

    auto criterion_9() -> void
    {
        auto encode = [] (const Graph & g) {
            VcspInstance instance(2, g.size());
            CostFunction differ(2, 2, ExtRational::infinity());
            differ.set(vector<int>{ 1, 2 }, ExtRational{ 0 });
            differ.set(vector<int>{ 2, 1 }, ExtRational{ 0 });
            for (auto [u, v] : g.edges())
                instance.add_term(differ, { u, v });
            return instance;
        };
        SaResult k3, p2;
        auto seconds = timed([&] {
            k3 = solve_sa(encode(complete_graph(3)), 2, 3);
            p2 = solve_sa(encode(path_graph(2)), 2, 3);
        });
        report(9, k3.status == LpStatus::Infeasible && p2.status == LpStatus::Optimal && p2.optimum == 0, seconds, 5,
                "SA(2,3): K_3 -> K_2 " + to_string(k3.status) + ", P_2 -> K_2 " + to_string(p2.status) + " with optimum "
                + to_string(p2.optimum));
    }

    auto criterion_10() -> void
    {
        bool ok = true;
        auto seconds = timed([&] {
            ok = run_trials(odd_cycle_with_pendants(4, 12), criterion_8_seed) == yes_run;
            ok = ok && run_trials(control_graph(), criterion_8_seed + 1) == no_run;
            auto g = odd_cycle_with_pendants(3, 10);
            ok = ok && odd_cycle_solve(g, 3, 77) == odd_cycle_solve(g, 3, 77);
            BenchConfig config;
            config.trials = 20;
            config.instances = 10;
            for (auto & suite : bench_suites()) {
                auto a = run_bench(suite, config), b = run_bench(suite, config);
                ok = ok && a.size() == b.size();
                for (std::size_t i = 0 ; ok && i < a.size() ; ++i)
                    ok = a[i].instance == b[i].instance && a[i].answer == b[i].answer && a[i].trials == b[i].trials
                        && a[i].subproblems == b[i].subproblems;
            }
        });
        report(10, ok, seconds, 600, "criterion 8 runs, a planned run and every bench suite repeat identically per seed");
    }
}

auto main() -> int
{
    try {
        criterion_1();
        criterion_2();
        criterion_3();
        criteria_4_and_5();
        criterion_6();
        criterion_7();
        criterion_8();
        criterion_9();
        criterion_10();
    }
    catch (const std::exception & e) {
        std::printf("acceptance aborted: %s\n", e.what());
        return 1;
    }
    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
