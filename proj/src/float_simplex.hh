#ifndef HOMLAB_GUARD_SRC_FLOAT_SIMPLEX_HH
#define HOMLAB_GUARD_SRC_FLOAT_SIMPLEX_HH 1

#include <cstdint>
#include <utility>
#include <vector>

namespace homlab::detail
{
    enum class FloatOutcome
    {
        Optimal,
        Infeasible,
        Failed
    };

    struct FloatGuess
    {
        FloatOutcome outcome = FloatOutcome::Failed;
        std::vector<double> x;   // Optimal: the basic point
        std::vector<double> y;   // Optimal: simplex multipliers; Infeasible: phase-one multipliers
        std::uint64_t pivots = 0;
    };

    /**
     * Two-phase primal simplex in double precision on A x = b, x >= 0, b >= 0,
     * one artificial per row. The basis is held as a sparse LU plus a short
     * product-form update, refactorized every few dozen pivots. Answers are
     * unverified guesses.
     */
    auto float_simplex(int m, const std::vector<std::vector<std::pair<int, double>>> & columns,
            const std::vector<double> & rhs, const std::vector<double> & cost, std::uint64_t pivot_budget) -> FloatGuess;
}

#endif
