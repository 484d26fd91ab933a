#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <homlab/constructions.hh>
#include <homlab/error.hh>
#include <homlab/odd_cycle.hh>
#include <homlab/solvers.hh>
#include <homlab/track_layout.hh>

#include <cmath>
#include <random>

using namespace homlab;

using std::vector;

namespace
{
    auto random_digraph(std::mt19937_64 & rng, int n, double density, bool loops) -> DiGraph
    {
        std::bernoulli_distribution arc(density);
        vector<Edge> arcs;
        for (int u = 1 ; u <= n ; ++u)
            for (int v = 1 ; v <= n ; ++v)
                if ((u != v || loops) && arc(rng))
                    arcs.emplace_back(u, v);
        return DiGraph(n, arcs);
    }

    auto random_graph(std::mt19937_64 & rng, int n, double density) -> Graph
    {
        std::bernoulli_distribution edge(density);
        Graph g(n);
        for (int u = 1 ; u <= n ; ++u)
            for (int v = u + 1 ; v <= n ; ++v)
                if (edge(rng))
                    g.add_edge(u, v);
        return g;
    }

    auto random_instance(std::mt19937_64 & rng, int n, int h) -> ValHomInstance
    {
        ValHomInstance inst(random_digraph(rng, n, 0.3, false), random_digraph(rng, h, 0.45, true));
        std::uniform_int_distribution<int> value(0, 5);
        for (auto & a : inst.source().arcs())
            for (auto & b : inst.target().arcs()) {
                int v = value(rng);
                inst.set_eta(a, b, v == 5 ? ExtRational::infinity() : ExtRational{ Rational(v, 2) });
            }
        return inst;
    }

    /// Does some g with g(v) in its list map every edge onto a cycle edge?
    auto brute_list_hom(const Graph & g, int k, const vector<ListChoice> & lists) -> bool
    {
        auto instance = list_hom_instance(g, k, lists);
        return brute_force_opt(instance).value == ExtRational{ 0 };
    }
}

TEST_CASE("brute force homomorphisms")
{
    auto c5_c3 = brute_force_hom(cycle_graph(5), cycle_graph(3));
    REQUIRE(c5_c3);
    CHECK(is_homomorphism(cycle_graph(5), cycle_graph(3), *c5_c3));
    CHECK(! brute_force_hom(cycle_graph(3), cycle_graph(5)));
    Graph petersen(10, { { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 5 }, { 5, 1 }, { 1, 6 }, { 2, 7 }, { 3, 8 }, { 4, 9 }, { 5, 10 },
            { 6, 8 }, { 8, 10 }, { 10, 7 }, { 7, 9 }, { 9, 6 } });
    CHECK(brute_force_hom(petersen, petersen, 10'000'000'000));
    CHECK(brute_force_hom(petersen, complete_graph(3)));
    CHECK(! brute_force_hom(complete_graph(4), complete_graph(3)));
    CHECK_THROWS_AS(brute_force_hom(complete_graph(30), complete_graph(30), 1000), BudgetExceeded);

    CHECK(brute_force_hom(directed_cycle(6), directed_cycle(3)));
    CHECK(! brute_force_hom(directed_cycle(3), directed_cycle(6)));
    CHECK(brute_force_hom(directed_cycle(3), DiGraph(1, { { 1, 1 } })));
}

TEST_CASE("unif_solve")
{
    SUBCASE("all infinite")
    {
        VcspInstance inst(3, 2);
        inst.add_term(CostFunction(3, 2, ExtRational::infinity()), { 1, 2 });
        auto r = unif_solve(inst);
        REQUIRE(r.assignment);
        CHECK(*r.assignment == Assignment{ 1, 1 });
        CHECK(r.cost.is_infinite());
    }
    SUBCASE("valuations of track layout languages are solved exactly")
    {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> value(0, 6);
        for (int round = 0 ; round < 25 ; ++round) {
            int size = 3 + round % 4;
            auto h = random_graph(rng, size, 0.5);
            auto layout = greedy_track_layout(h);
            auto lang = crisp_language_of_coloring(h, layout.coloring());
            int n = 2 + round % 4;
            VcspInstance inst(size, n);
            std::uniform_int_distribution<int> var(1, n), rel(0, static_cast<int>(lang.relations().size()) - 1);
            for (int t = 0 ; t < n + 1 ; ++t) {
                auto & r = lang.relations()[rel(rng)];
                CostFunction phi(size, 2, ExtRational::infinity());
                for (auto [a, b] : r.tuples)
                    phi.set(vector<int>{ a, b }, ExtRational{ Rational(value(rng), 3) });
                int x = var(rng), y = var(rng);
                if (x == y)
                    y = x % n + 1;
                inst.add_term(std::move(phi), { x, y });
            }
            auto r = unif_solve(inst);
            REQUIRE(r.assignment);
            auto best = brute_force_opt(inst);
            CHECK(r.cost == best.value);
            CHECK(inst.cost(*r.assignment) == r.cost);
        }
    }
    SUBCASE("never suboptimal on arbitrary instances")
    {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<int> value(0, 4);
        int returned = 0;
        for (int round = 0 ; round < 40 ; ++round) {
            int d = 2 + round % 3, n = 2 + round % 3;
            VcspInstance inst(d, n);
            std::uniform_int_distribution<int> var(1, n);
            for (int t = 0 ; t < n ; ++t) {
                CostFunction phi(d, 2);
                for (std::size_t i = 0 ; i < phi.table_size() ; ++i) {
                    int v = value(rng);
                    phi.set_index(i, v == 4 ? ExtRational::infinity() : ExtRational{ v });
                }
                int x = var(rng), y = var(rng);
                inst.add_term(std::move(phi), { x, y });
            }
            auto r = unif_solve(inst);
            if (r.assignment) {
                ++returned;
                CHECK(r.cost == brute_force_opt(inst).value);
            }
        }
        CHECK(returned > 20);
    }
}

TEST_CASE("valhom_solve examples")
{
    SUBCASE("single arc")
    {
        ValHomInstance inst(DiGraph(2, { { 1, 2 } }), DiGraph(2, { { 1, 2 } }));
        auto r = valhom_solve(inst);
        CHECK(r.value == ExtRational{ 0 });
        REQUIRE(r.witness);
        CHECK(*r.witness == vector<Vertex>{ 1, 2 });
    }
    SUBCASE("directed triangle to a single arc")
    {
        ValHomInstance inst(directed_cycle(3), DiGraph(2, { { 1, 2 } }));
        auto r = valhom_solve(inst);
        CHECK(r.value.is_infinite());
        CHECK(! r.witness);
    }
    SUBCASE("directed nine-cycle onto the directed triangle")
    {
        ValHomInstance inst(directed_cycle(9), directed_cycle(3), ExtRational{ 1 });
        auto r = valhom_solve(inst);
        CHECK(r.value == ExtRational{ 9 });
        REQUIRE(r.witness);
        CHECK(inst.cost(*r.witness) == ExtRational{ 9 });
        CHECK(brute_force_valhom(inst).value == ExtRational{ 9 });
    }
    SUBCASE("empty target")
    {
        ValHomInstance inst(DiGraph(2), DiGraph(0));
        CHECK(valhom_solve(inst).value.is_infinite());
        CHECK(valhom_solve(ValHomInstance(DiGraph(0), DiGraph(0))).value == ExtRational{ 0 });
    }
    SUBCASE("isolated source vertices")
    {
        ValHomInstance inst(DiGraph(3, { { 1, 3 } }), DiGraph(2, { { 2, 1 } }));
        auto r = valhom_solve(inst);
        CHECK(r.value == ExtRational{ 0 });
        REQUIRE(r.witness);
        CHECK(*r.witness == vector<Vertex>{ 2, 1, 1 });
    }
    SUBCASE("hint")
    {
        ValHomInstance inst(directed_cycle(9), directed_cycle(3), ExtRational{ 1 });
        auto r = valhom_solve(inst, Coloring({ 1, 2, 3 }));
        CHECK(r.value == ExtRational{ 9 });
        CHECK(r.statistics.colors == 3);
        CHECK_THROWS_AS(valhom_solve(inst, Coloring({ 1, 1, 2 })), InvalidInput);
    }
    SUBCASE("budget")
    {
        ValHomInstance inst(directed_cycle(9), directed_cycle(3), ExtRational{ 1 });
        ValHomOptions options;
        options.subproblem_budget = 1;
        CHECK_THROWS_AS(valhom_solve(inst, std::nullopt, options), BudgetExceeded);
    }
}

TEST_CASE("valhom_solve matches brute force")
{
    std::mt19937_64 rng(2024);
    int finite = 0, infinite = 0;
    for (int round = 0 ; round < 20 ; ++round) {
        int n = 2 + round % 5, h = 2 + round % 3;
        auto inst = random_instance(rng, n, h);
        auto fast = valhom_solve(inst);
        auto slow = brute_force_valhom(inst);
        REQUIRE(fast.value == slow.value);
        if (fast.feasible()) {
            ++finite;
            REQUIRE(fast.witness);
            CHECK(inst.cost(*fast.witness) == fast.value);
        }
        else
            ++infinite;
        CHECK(valhom_solve(inst) == fast);
    }
    CHECK(finite > 3);
    CHECK(infinite > 0);
}

TEST_CASE("alpha values")
{
    CHECK(alpha_power(1) == Rational(27, 8));
    CHECK(alpha_below(3, Rational(1365, 1000)));
    CHECK(alpha_below(4, Rational(1313, 1000)));
    CHECK(alpha_below(5, Rational(1274, 1000)));
    CHECK(alpha_below(6, Rational(1244, 1000)));
    CHECK(! alpha_below(3, Rational(1364, 1000)));
    CHECK(! alpha_below(4, Rational(1312, 1000)));
    for (int k = 1 ; k <= 8 ; ++k) {
        double m = 2 * k + 1;
        double direct = std::pow(m / 2, 1 / m) * std::pow(m / (2 * k), 2 * k / m);
        auto a = alpha_interval(k);
        CHECK(a.lower <= a.upper);
        CHECK(a.lower <= direct * (1 + 1e-12));
        CHECK(a.upper >= direct * (1 - 1e-12));
        CHECK(a.upper - a.lower < 1e-12);
    }
    CHECK_THROWS_AS(alpha_interval(0), InvalidInput);
}

TEST_CASE("trial plans")
{
    for (int k = 1 ; k <= 4 ; ++k)
        for (int n : { 0, 1, 5, 12, 30 }) {
            auto plan = plan_trials(k, n, 99);
            double x = std::pow(alpha_interval(k).lower, -static_cast<double>(n));
            double direct = (x >= 1) ? 1 : std::ceil(std::log(0.5) / std::log(1 - x)) + 1;
            CHECK(plan.trials >= 1);
            CHECK(static_cast<double>(plan.trials) >= direct - 1e-9);
            CHECK(static_cast<double>(plan.trials) <= direct + 1);
            CHECK(plan.success.lower <= plan.success.upper);
        }
    CHECK(plan_trials(3, 12, 5).trials == 30);
    CHECK_THROWS_AS(plan_trials(3, 100000, 5), BudgetExceeded);
}

TEST_CASE("list sampling")
{
    CHECK(trial_seed(1, 0) != trial_seed(1, 1));
    CHECK(trial_seed(1, 0) != trial_seed(2, 0));
    CHECK(sample_lists(20, 3, 42) == sample_lists(20, 3, 42));

    int counts[3] = { 0, 0, 0 };
    int total = 0;
    for (std::uint64_t s = 0 ; s < 200 ; ++s)
        for (auto c : sample_lists(50, 2, trial_seed(3, s))) {
            ++counts[static_cast<int>(c)];
            ++total;
        }
    // p = 3/5, 1/5, 1/5 over 10000 draws
    CHECK(std::abs(counts[0] / static_cast<double>(total) - 0.6) < 0.03);
    CHECK(std::abs(counts[1] / static_cast<double>(total) - 0.2) < 0.03);
    CHECK(std::abs(counts[2] / static_cast<double>(total) - 0.2) < 0.03);
}

TEST_CASE("algorithm B trials")
{
    SUBCASE("edgeless graphs always say yes")
    {
        for (std::uint64_t s = 0 ; s < 10 ; ++s)
            CHECK(algorithm_b_trial(Graph(4), 2, s).yes);
    }
    SUBCASE("K4 never says yes")
    {
        for (int k = 1 ; k <= 3 ; ++k)
            for (std::uint64_t s = 0 ; s < 30 ; ++s)
                CHECK(! algorithm_b_trial(complete_graph(4), k, trial_seed(5, s)).yes);
    }
    SUBCASE("each trial decides its list instance exactly")
    {
        std::mt19937_64 rng(8);
        int yes = 0, no = 0;
        for (int round = 0 ; round < 120 ; ++round) {
            int k = 1 + round % 3, n = 3 + round % 5;
            auto g = random_graph(rng, n, 0.45);
            auto outcome = algorithm_b_trial(g, k, rng());
            bool exists = brute_list_hom(g, k, outcome.lists);
            REQUIRE(outcome.yes == exists);
            if (outcome.witness)
                CHECK(list_hom_instance(g, k, outcome.lists).cost(*outcome.witness) == ExtRational{ 0 });
            (outcome.yes ? yes : no)++;
        }
        CHECK(yes > 10);
        CHECK(no > 10);
    }
}

TEST_CASE("odd_cycle_solve")
{
    SUBCASE("the cycle itself")
    {
        for (int k = 1 ; k <= 3 ; ++k) {
            auto r = odd_cycle_solve(cycle_graph(2 * k + 1), k, 17);
            CHECK(r.trials_run <= r.plan.trials);
            if (r.yes && r.witness)
                CHECK(is_homomorphism(cycle_graph(2 * k + 1), cycle_graph(2 * k + 1), *r.witness));
        }
        OddCycleOptions many;
        many.trials = 200;
        CHECK(odd_cycle_solve(cycle_graph(7), 3, 1, many).yes);
    }
    SUBCASE("K4 says no")
    {
        for (int k = 1 ; k <= 3 ; ++k) {
            auto r = odd_cycle_solve(complete_graph(4), k, 3);
            CHECK(! r.yes);
            CHECK(r.trials_run == r.plan.trials);
            CHECK(r.transcript.size() == r.trials_run);
        }
    }
    SUBCASE("determinism")
    {
        Graph g = cycle_graph(9);
        g = Graph(12, g.edges());
        g.add_edge(1, 10);
        g.add_edge(4, 11);
        g.add_edge(7, 12);
        OddCycleOptions options;
        options.trials = 40;
        options.stop_at_yes = false;
        auto a = odd_cycle_solve(g, 3, 123, options);
        auto b = odd_cycle_solve(g, 3, 123, options);
        CHECK(a == b);
        auto c = odd_cycle_solve(g, 3, 124, options);
        CHECK(a.transcript != c.transcript);
    }
}
