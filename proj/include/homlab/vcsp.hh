#ifndef HOMLAB_GUARD_HOMLAB_VCSP_HH
#define HOMLAB_GUARD_HOMLAB_VCSP_HH 1

#include <homlab/ext_rational.hh>

#include <cstdint>
#include <span>
#include <vector>

namespace homlab
{
    /// Domain values are 1..D; an assignment stores assignment[x-1] for variable x.
    using Assignment = std::vector<int>;

    /**
     * A dense cost table D^r -> Q ∪ {inf}. Tuples are indexed row-major with the
     * first coordinate most significant.
     */
    class CostFunction
    {
        private:
            int _domain_size = 0;
            int _arity = 0;
            std::vector<ExtRational> _table;

        public:
            CostFunction() = default;

            /// Every entry initialised to fill.
            CostFunction(int domain_size, int arity, const ExtRational & fill = ExtRational{ 0 });

            [[nodiscard]] auto domain_size() const -> int { return _domain_size; }
            [[nodiscard]] auto arity() const -> int { return _arity; }
            [[nodiscard]] auto table_size() const -> std::size_t { return _table.size(); }

            [[nodiscard]] auto index(std::span<const int> tuple) const -> std::size_t;
            [[nodiscard]] auto tuple(std::size_t index) const -> std::vector<int>;

            [[nodiscard]] auto operator() (std::span<const int> tuple) const -> const ExtRational & { return _table[index(tuple)]; }
            [[nodiscard]] auto at_index(std::size_t i) const -> const ExtRational & { return _table[i]; }
            auto set(std::span<const int> tuple, const ExtRational & value) -> void { _table[index(tuple)] = value; }
            auto set_index(std::size_t i, const ExtRational & value) -> void { _table[i] = value; }

            /// Tuples with finite cost.
            [[nodiscard]] auto feasible_tuples() const -> std::vector<std::vector<int>>;

            friend auto operator== (const CostFunction &, const CostFunction &) -> bool = default;
    };

    /// phi_a: 0 at a, infinite elsewhere.
    auto pin_function(int domain_size, int value) -> CostFunction;

    struct Term
    {
        CostFunction function;
        std::vector<int> scope;   // variables, 1-based, length = arity; repeats allowed

        friend auto operator== (const Term &, const Term &) -> bool = default;
    };

    /// Variables 1..n over domain 1..D, objective a sum of table terms.
    class VcspInstance
    {
        private:
            int _domain_size = 0;
            int _num_variables = 0;
            std::vector<Term> _terms;

        public:
            VcspInstance() = default;
            VcspInstance(int domain_size, int num_variables);

            [[nodiscard]] auto domain_size() const -> int { return _domain_size; }
            [[nodiscard]] auto num_variables() const -> int { return _num_variables; }
            [[nodiscard]] auto terms() const -> const std::vector<Term> & { return _terms; }

            /// Throws InvalidInput on arity/scope/domain mismatches.
            auto add_term(CostFunction function, std::vector<int> scope) -> void;

            [[nodiscard]] auto cost(std::span<const int> assignment) const -> ExtRational;

            friend auto operator== (const VcspInstance &, const VcspInstance &) -> bool = default;
    };

    struct OptimumResult
    {
        ExtRational value;
        Assignment assignment;
    };

    constexpr std::uint64_t default_assignment_budget = 100'000'000;

    /**
     * Exhaustive minimum over all D^n assignments. Throws BudgetExceeded if D^n is
     * above the budget. When nothing is feasible the value is infinite and the
     * assignment is all ones.
     */
    auto brute_force_opt(const VcspInstance & instance, std::uint64_t budget = default_assignment_budget) -> OptimumResult;
}

#endif
