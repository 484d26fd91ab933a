#include <homlab/bench.hh>
#include <homlab/constructions.hh>
#include <homlab/error.hh>
#include <homlab/language.hh>
#include <homlab/odd_cycle.hh>
#include <homlab/operation.hh>
#include <homlab/solvers.hh>

#include <chrono>
#include <cstdio>
#include <random>

using namespace homlab;

using std::string;
using std::to_string;
using std::vector;

namespace
{
    using Clock = std::chrono::steady_clock;

    auto millis_since(Clock::time_point start) -> double
    {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }

    auto show(double x) -> string
    {
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "%.6g", x);
        return buffer;
    }

    auto show(bool b) -> string
    {
        return b ? "true" : "false";
    }

    /// Uniform in [0, bound) from raw mt19937_64 output, so results do not depend
    /// on the standard library's distributions.
    auto draw(std::mt19937_64 & rng, std::uint64_t bound) -> std::uint64_t
    {
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t raw;
        do
            raw = rng();
        while (raw >= limit);
        return raw % bound;
    }

    auto alpha_table() -> vector<BenchRow>
    {
        vector<BenchRow> rows;
        vector<std::pair<int, Rational>> claims{ { 3, Rational(1365, 1000) }, { 4, Rational(1313, 1000) },
            { 5, Rational(1274, 1000) }, { 6, Rational(1244, 1000) } };
        for (auto & [k, bound] : claims) {
            auto start = Clock::now();
            bound.canonicalize();
            auto enclosure = alpha_interval(k);
            BenchRow row;
            row.instance = "alpha_" + to_string(k);
            row.h = 2 * k + 1;
            row.method = "exact";
            row.answer = "bound=" + show(bound.get_d()) + ";holds=" + show(alpha_below(k, bound)) + ";lower=" + show(enclosure.lower)
                + ";upper=" + show(enclosure.upper);
            row.millis = millis_since(start);
            rows.push_back(row);
        }
        return rows;
    }

    auto oracle_equivalence(const BenchConfig & config) -> vector<BenchRow>
    {
        vector<BenchRow> rows;
        for (int i = 0 ; i < config.instances ; ++i) {
            auto seed = trial_seed(config.seed, static_cast<std::uint64_t>(i));
            int n = 1 + static_cast<int>(seed % 7), h = 1 + static_cast<int>((seed >> 8) % 5);
            auto instance = random_valhom_instance(seed, n, h);

            auto start = Clock::now();
            auto fast = valhom_solve(instance);
            auto millis = millis_since(start);
            auto slow = brute_force_valhom(instance);
            bool witness_ok = ! fast.witness || instance.cost(*fast.witness) == fast.value;

            BenchRow row;
            row.instance = "valhom-" + to_string(i);
            row.n = n;
            row.h = h;
            row.method = "enumerate";
            row.answer = "value=" + to_string(fast.value) + ";brute=" + to_string(slow.value) + ";match="
                + show(fast.value == slow.value && witness_ok);
            row.subproblems = fast.statistics.subproblems;
            row.millis = millis;
            rows.push_back(row);
        }
        return rows;
    }

    auto polymorphism_audit() -> vector<BenchRow>
    {
        vector<BenchRow> rows;
        for (int k = 1 ; k <= 6 ; ++k) {
            auto start = Clock::now();
            auto f = odd_cycle_majority(k);
            auto language = odd_cycle_language(k);
            bool verified = is_majority(f);
            for (auto & r : language.relations())
                verified = verified && is_polymorphism(f, r);
            BenchRow row;
            row.instance = "odd-cycle-" + to_string(k);
            row.h = 2 * k + 1;
            row.method = "exhaustive";
            row.answer = "verified=" + show(verified);
            row.millis = millis_since(start);
            rows.push_back(row);
        }
        return rows;
    }

    auto odd_cycles(const BenchConfig & config) -> vector<BenchRow>
    {
        vector<BenchRow> rows;
        for (int k = 1 ; k <= 3 ; ++k) {
            int m = 2 * k + 1;
            for (int n : { m, m + 3, 12 }) {
                if (n < m)
                    continue;
                auto g = odd_cycle_with_pendants(k, n);
                auto start = Clock::now();
                OddCycleOptions options;
                options.trials = config.trials;
                options.stop_at_yes = false;
                auto seed = splitmix64(config.seed ^ static_cast<std::uint64_t>(k * 1000 + n));
                auto report = odd_cycle_solve(g, k, seed, options);
                std::uint64_t yes = 0;
                for (auto & line : report.transcript)
                    yes += line.ends_with(" YES");

                BenchRow row;
                row.instance = "C" + to_string(m) + "+" + to_string(n - m) + "pendants";
                row.n = n;
                row.h = m;
                row.method = "algorithm-b";
                row.answer = "seed=" + to_string(seed) + ";yes=" + to_string(yes) + ";rate="
                    + show(static_cast<double>(yes) / static_cast<double>(report.trials_run)) + ";bound=" + show(report.plan.success.lower);
                row.trials = report.trials_run;
                row.millis = millis_since(start);
                rows.push_back(row);
            }
        }
        return rows;
    }
}

auto homlab::random_valhom_instance(std::uint64_t seed, int n, int h) -> ValHomInstance
{
    std::mt19937_64 rng(seed);
    auto digraph = [&] (int size, std::uint64_t percent, bool loops) {
        vector<Edge> arcs;
        for (int u = 1 ; u <= size ; ++u)
            for (int v = 1 ; v <= size ; ++v)
                if ((u != v || loops) && draw(rng, 100) < percent)
                    arcs.emplace_back(u, v);
        return DiGraph(size, arcs);
    };
    auto g = digraph(n, 30, false);
    auto target = digraph(h, 45, true);
    ValHomInstance instance(g, target);
    for (auto & a : g.arcs())
        for (auto & b : target.arcs()) {
            auto v = draw(rng, 6);
            instance.set_eta(a, b, v == 5 ? ExtRational::infinity() : ExtRational{ Rational(static_cast<long>(v), 2) });
        }
    return instance;
}

auto homlab::odd_cycle_with_pendants(int k, int n) -> Graph
{
    int m = 2 * k + 1;
    if (k < 1 || n < m)
        throw InvalidInput("need k >= 1 and n >= 2k+1");
    Graph g(n, cycle_graph(m).edges());
    for (int j = 0 ; j < n - m ; ++j)
        g.add_edge(1 + (3 * j) % m, m + 1 + j);
    return g;
}

auto homlab::bench_suites() -> vector<string>
{
    return { "alpha-table", "oracle-equivalence", "polymorphism-audit", "odd-cycles" };
}

auto homlab::run_bench(const string & suite, const BenchConfig & config) -> vector<BenchRow>
{
    if (suite == "alpha-table")
        return alpha_table();
    if (suite == "oracle-equivalence")
        return oracle_equivalence(config);
    if (suite == "polymorphism-audit")
        return polymorphism_audit();
    if (suite == "odd-cycles")
        return odd_cycles(config);
    throw InvalidInput("unknown bench suite '" + suite + "'");
}

auto homlab::to_csv(const vector<BenchRow> & rows) -> string
{
    string result = "instance,n,h,method,answer,trials,subproblems,millis\n";
    for (auto & row : rows)
        result += row.instance + "," + to_string(row.n) + "," + to_string(row.h) + "," + row.method + "," + row.answer + ","
            + to_string(row.trials) + "," + to_string(row.subproblems) + "," + to_string(static_cast<long long>(row.millis)) + "\n";
    return result;
}
