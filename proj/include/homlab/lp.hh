#ifndef HOMLAB_GUARD_HOMLAB_LP_HH
#define HOMLAB_GUARD_HOMLAB_LP_HH 1

#include <homlab/ext_rational.hh>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace homlab
{
    /**
     * min c.x subject to equality rows and x >= 0, all over the rationals. Rows are
     * sparse; a column may appear at most once per row.
     */
    class RationalLp
    {
        public:
            struct Row
            {
                std::vector<std::pair<int, Rational>> coefficients;
                Rational rhs;
            };

        private:
            std::vector<Rational> _objective;
            std::vector<std::string> _names;
            std::vector<Row> _rows;

        public:
            auto add_variable(std::string name, const Rational & cost = 0) -> int;
            auto add_equality(std::vector<std::pair<int, Rational>> coefficients, const Rational & rhs) -> void;

            [[nodiscard]] auto num_variables() const -> int { return static_cast<int>(_objective.size()); }
            [[nodiscard]] auto num_rows() const -> int { return static_cast<int>(_rows.size()); }
            [[nodiscard]] auto objective() const -> const std::vector<Rational> & { return _objective; }
            [[nodiscard]] auto rows() const -> const std::vector<Row> & { return _rows; }
            [[nodiscard]] auto name(int j) const -> const std::string & { return _names[j]; }
    };

    enum class LpStatus
    {
        Optimal,
        Infeasible,
        Unbounded
    };

    auto to_string(LpStatus status) -> std::string;

    struct LpStatistics
    {
        int presolve_fixed = 0;       // columns fixed before the simplex ran
        int reduced_rows = 0;
        int reduced_columns = 0;
        std::uint64_t pivots = 0;         // exact pivots, counted against the budget
        std::uint64_t guide_pivots = 0;   // floating-point pivots spent guessing a solution
    };

    struct LpResult
    {
        LpStatus status = LpStatus::Infeasible;
        Rational optimum;                 // meaningful only when Optimal
        std::vector<Rational> solution;   // one value per variable when Optimal
        LpStatistics statistics;
    };

    struct LpOptions
    {
        std::uint64_t pivot_budget = 50'000'000;

        /// Consecutive degenerate pivots tolerated under largest-coefficient pricing
        /// before falling back to Bland's rule.
        int degenerate_streak_limit = 64;
    };

    /**
     * Exact primal simplex: presolve (zero propagation and singleton rows), then a
     * two-phase revised simplex over the rationals with a product-form inverse.
     * A double-precision run goes first; its point and multipliers, rounded to
     * fractions, settle the problem when they check out exactly as an optimal
     * primal-dual pair or a Farkas ray. Throws BudgetExceeded past the pivot budget.
     */
    auto lp_solve_exact(const RationalLp & lp, const LpOptions & options = LpOptions{ }) -> LpResult;

    /// Exact check of every row and the sign constraints.
    [[nodiscard]] auto is_feasible_point(const RationalLp & lp, const std::vector<Rational> & x) -> bool;

    [[nodiscard]] auto objective_value(const RationalLp & lp, const std::vector<Rational> & x) -> Rational;

    /**
     * Text dump, one item per line:
     *   lp COLUMNS ROWS
     *   var J NAME COST
     *   row I: C1*xJ1 + C2*xJ2 ... = RHS
     * Coefficients and right-hand sides are exact p/q.
     */
    auto dump_lp(const RationalLp & lp, std::ostream & stream) -> void;
}

#endif
