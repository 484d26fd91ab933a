#ifndef HOMLAB_GUARD_HOMLAB_SHERALI_ADAMS_HH
#define HOMLAB_GUARD_HOMLAB_SHERALI_ADAMS_HH 1

#include <homlab/ext_rational.hh>
#include <homlab/lp.hh>
#include <homlab/vcsp.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace homlab
{
    /**
     * One lambda block: a distribution over labelings of a sorted set of variables.
     * Entry t of the block is the labeling whose values, read in scope order, form
     * the t-th tuple of D^|scope| (first variable most significant).
     */
    struct SaBlock
    {
        std::vector<int> scope;
        std::vector<int> terms;          // original terms whose objective lives here
        std::vector<ExtRational> cost;   // per entry, summed over terms
        int first_column = -1;           // LP column of entry 0 (build_sa only)
    };

    struct SaLp
    {
        RationalLp lp;
        std::vector<SaBlock> blocks;
        int domain_size = 0;
        int k = 0, l = 0;
    };

    /**
     * The SA(k,l) relaxation. Zero terms are added for every set of at most l
     * variables, one block per set. An original term whose variable set has at
     * most k elements shares that set's block (costs add up); larger ones get their
     * own block. Infinite-cost entries are pinned to zero and carry no objective.
     * Throws InvalidInput unless 0 < k <= l.
     */
    auto build_sa(const VcspInstance & instance, int k = 2, int l = 3) -> SaLp;

    /// The 0/1 point of an assignment: one on the labeling it induces in every block.
    auto integral_point(const SaLp & sa, const Assignment & assignment) -> std::vector<Rational>;

    struct SaOptions
    {
        LpOptions lp;

        /// Backtracking nodes spent looking for an integral certificate before the
        /// simplex is used.
        std::uint64_t certificate_budget = 200'000;
    };

    struct SaStatistics
    {
        std::uint64_t entries = 0;        // lambda variables in the full relaxation
        std::uint64_t live_entries = 0;   // after propagation
        int propagation_sweeps = 0;
        bool certified = false;           // decided without the simplex
        LpStatistics lp;
    };

    struct SaResult
    {
        LpStatus status = LpStatus::Infeasible;
        Rational optimum;
        std::optional<Assignment> witness;   // an integral optimum, when one was found
        SaStatistics statistics;
    };

    /**
     * Optimum of SA(k,l), identical to lp_solve_exact(build_sa(...)). Entries that
     * are zero in every feasible point are removed first by propagating supports
     * between blocks; an emptied block proves infeasibility. When every surviving
     * entry costs zero, an integral assignment consistent with every block proves
     * the optimum is zero. Otherwise the reduced LP goes to the simplex.
     */
    auto solve_sa(const VcspInstance & instance, int k = 2, int l = 3, const SaOptions & options = SaOptions{ }) -> SaResult;
}

#endif
