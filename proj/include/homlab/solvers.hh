#ifndef HOMLAB_GUARD_HOMLAB_SOLVERS_HH
#define HOMLAB_GUARD_HOMLAB_SOLVERS_HH 1

#include <homlab/ext_rational.hh>
#include <homlab/graph.hh>
#include <homlab/sherali_adams.hh>
#include <homlab/valhom.hh>
#include <homlab/vcsp.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace homlab
{
    struct SolveStatistics
    {
        std::uint64_t subproblems = 0;     // unif_solve calls
        std::uint64_t sa_solves = 0;
        std::uint64_t lp_pivots = 0;
        int max_lp_rows = 0;
        int max_lp_columns = 0;
        int colors = 0;                    // colors of the accepted target coloring
        double millis = 0;                 // wall time, excluded from comparisons

        auto absorb(const SaStatistics & sa) -> void;
        friend auto operator== (const SolveStatistics & a, const SolveStatistics & b) -> bool
        {
            return a.subproblems == b.subproblems && a.sa_solves == b.sa_solves && a.lp_pivots == b.lp_pivots
                && a.max_lp_rows == b.max_lp_rows && a.max_lp_columns == b.max_lp_columns && a.colors == b.colors;
        }
    };

    struct SolveReport
    {
        ExtRational value = ExtRational::infinity();
        std::optional<std::vector<Vertex>> witness;   // present when the value is finite
        SolveStatistics statistics;

        [[nodiscard]] auto feasible() const -> bool { return value.is_finite(); }
        friend auto operator== (const SolveReport &, const SolveReport &) -> bool = default;
    };

    struct UnifResult
    {
        std::optional<Assignment> assignment;   // nullopt: the self-reduction got stuck
        ExtRational cost = ExtRational::infinity();
        SolveStatistics statistics;
    };

    /**
     * Self-reduction on SA(2,3). An infeasible relaxation gives the all-ones
     * assignment at cost inf. Otherwise, with s the relaxation optimum, variables
     * are fixed lowest index first, each to the lowest value whose pinning keeps the
     * optimum exactly s; if no value does, the result has no assignment.
     */
    auto unif_solve(const VcspInstance & instance, const SaOptions & options = SaOptions{ }) -> UnifResult;

    constexpr std::uint64_t default_subproblem_budget = 1'000'000;

    struct ValHomOptions
    {
        SaOptions sa;
        std::uint64_t subproblem_budget = default_subproblem_budget;
    };

    /**
     * Minimum-cost homomorphism by enumeration of target colorings. For k = 1, 2, ...
     * every proper coloring of H's underlying graph using exactly k colors (vertex 1
     * colored 1) is paired with every map from the non-isolated vertices of G to [k]
     * under which each arc has a target arc of matching colors; the remaining maps
     * give infeasible subproblems and are skipped. Each pair is solved by
     * unif_solve. The first target coloring whose subproblems all return an
     * assignment yields the answer. Isolated vertices of G map to vertex 1.
     *
     * With a hint only that coloring is tried; InvalidInput if some subproblem then
     * fails, or the hint is not a proper coloring. BudgetExceeded past the
     * subproblem budget.
     */
    auto valhom_solve(const ValHomInstance & instance, const std::optional<Coloring> & hint = std::nullopt,
            const ValHomOptions & options = ValHomOptions{ }) -> SolveReport;

    /// Exhaustive minimum over all h^n maps; the witness is the lexicographically
    /// first minimiser. BudgetExceeded if h^n exceeds the budget.
    auto brute_force_valhom(const ValHomInstance & instance, std::uint64_t budget = default_assignment_budget) -> SolveReport;

    /// Backtracking over maps in lexicographic order; the first homomorphism
    /// found, or nullopt. BudgetExceeded if h^n exceeds the budget.
    auto brute_force_hom(const Graph & g, const Graph & h, std::uint64_t budget = default_assignment_budget)
        -> std::optional<std::vector<Vertex>>;
    auto brute_force_hom(const DiGraph & g, const DiGraph & h, std::uint64_t budget = default_assignment_budget)
        -> std::optional<std::vector<Vertex>>;

    [[nodiscard]] auto is_homomorphism(const Graph & g, const Graph & h, const std::vector<Vertex> & map) -> bool;
    [[nodiscard]] auto is_homomorphism(const DiGraph & g, const DiGraph & h, const std::vector<Vertex> & map) -> bool;
}

#endif
