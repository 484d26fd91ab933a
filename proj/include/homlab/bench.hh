#ifndef HOMLAB_GUARD_HOMLAB_BENCH_HH
#define HOMLAB_GUARD_HOMLAB_BENCH_HH 1

#include <homlab/graph.hh>
#include <homlab/valhom.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace homlab
{
    /**
     * One CSV row. answer holds semicolon-separated key=value pairs, so every suite
     * shares the columns
     *
     *   instance,n,h,method,answer,trials,subproblems,millis
     *
     * Only millis depends on the machine; the rest is a function of the suite and
     * its configuration.
     */
    struct BenchRow
    {
        std::string instance;
        int n = 0;
        int h = 0;
        std::string method;
        std::string answer;
        std::uint64_t trials = 0;
        std::uint64_t subproblems = 0;
        double millis = 0;
    };

    struct BenchConfig
    {
        std::uint64_t seed = 1;
        int instances = 50;          // oracle-equivalence
        std::uint64_t trials = 200;  // odd-cycles, per (k, n)
    };

    /**
     * Random ValHom instance from a seed: G on n vertices without loops, each
     * ordered pair an arc with probability 0.3; H on h vertices with loops allowed,
     * each ordered pair an arc with probability 0.45; eta uniform over
     * {0, 1/2, 1, 3/2, 2, inf}.
     */
    auto random_valhom_instance(std::uint64_t seed, int n, int h) -> ValHomInstance;

    /// C_{2k+1} plus n - 2k - 1 pendant vertices, the j-th (from 0) attached to
    /// cycle vertex 1 + (3j mod (2k+1)). Throws InvalidInput if n < 2k+1.
    auto odd_cycle_with_pendants(int k, int n) -> Graph;

    /// alpha-table, oracle-equivalence, polymorphism-audit, odd-cycles.
    auto bench_suites() -> std::vector<std::string>;

    /// Throws InvalidInput on an unknown suite.
    auto run_bench(const std::string & suite, const BenchConfig & config) -> std::vector<BenchRow>;

    /// With header. Timing is written as an integer count of milliseconds.
    auto to_csv(const std::vector<BenchRow> & rows) -> std::string;
}

#endif
