#ifndef HOMLAB_GUARD_HOMLAB_OPERATION_HH
#define HOMLAB_GUARD_HOMLAB_OPERATION_HH 1

#include <homlab/language.hh>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homlab
{
    /// A total ternary operation on 1..D, stored densely. D is at most 255.
    class OperationTable
    {
        private:
            int _domain_size = 0;
            std::vector<std::uint8_t> _table;

            [[nodiscard]] auto offset(int a, int b, int c) const -> std::size_t
            {
                return (static_cast<std::size_t>(a - 1) * _domain_size + (b - 1)) * _domain_size + (c - 1);
            }

        public:
            OperationTable() = default;

            /// Every entry starts as the first argument.
            explicit OperationTable(int domain_size);

            [[nodiscard]] auto domain_size() const -> int { return _domain_size; }
            [[nodiscard]] auto operator() (int a, int b, int c) const -> int { return _table[offset(a, b, c)]; }
            auto set(int a, int b, int c, int value) -> void { _table[offset(a, b, c)] = static_cast<std::uint8_t>(value); }

            friend auto operator== (const OperationTable &, const OperationTable &) -> bool = default;
    };

    [[nodiscard]] auto is_majority(const OperationTable & f) -> bool;

    /// f applied componentwise maps every triple of tuples of the relation back into it.
    [[nodiscard]] auto is_polymorphism(const OperationTable & f, const Relation & relation) -> bool;

    /// Candidate persistent majority triple (f1, f2, f3) over a common domain.
    struct Triple
    {
        std::array<OperationTable, 3> f;

        Triple() = default;
        explicit Triple(int domain_size);

        [[nodiscard]] auto domain_size() const -> int { return f[0].domain_size(); }
        [[nodiscard]] auto apply(int a, int b, int c) const -> std::array<int, 3>
        {
            return { f[0](a, b, c), f[1](a, b, c), f[2](a, b, c) };
        }
        auto set(int a, int b, int c, const std::array<int, 3> & value) -> void
        {
            for (int i = 0 ; i < 3 ; ++i)
                f[i].set(a, b, c, value[i]);
        }

        friend auto operator== (const Triple &, const Triple &) -> bool = default;
    };

    /// (a1,a2,a3) -> (a_s1, a_s2, a_s3), positions 1-based.
    struct CoordinatePermutation
    {
        std::array<int, 3> sigma{ 1, 2, 3 };

        template <typename T_>
        [[nodiscard]] auto apply(const std::array<T_, 3> & a) const -> std::array<T_, 3>
        {
            return { a[sigma[0] - 1], a[sigma[1] - 1], a[sigma[2] - 1] };
        }

        friend auto operator== (const CoordinatePermutation &, const CoordinatePermutation &) -> bool = default;
    };

    /// The six coordinate permutations, identity first, then lexicographic.
    auto all_coordinate_permutations() -> std::array<CoordinatePermutation, 6>;

    struct TripleViolation
    {
        enum class Kind
        {
            NotMajority,       // f1(a,a,b), f1(a,b,a) or f1(b,a,a) differs from a
            NotPermutation,    // the three outputs are not a rearrangement of the inputs
            RelationBroken     // outputs on three tuples of a relation are not a rearrangement of them
        };

        Kind kind;
        std::array<int, 3> arguments{ };        // heads, for relation violations
        std::array<int, 3> tail_arguments{ };   // relation violations only
        std::string relation;                   // relation violations only

        [[nodiscard]] auto describe() const -> std::string;
    };

    /**
     * First failure of the three conditions, checked in order: f1 majority, the
     * outputs on every (a1,a2,a3) rearrange it, and for every relation and tuples
     * t1,t2,t3 the componentwise outputs rearrange {t1,t2,t3}. Arguments are
     * enumerated lexicographically. Throws InvalidInput on a domain mismatch.
     */
    auto find_triple_violation(const CrispLanguage & language, const Triple & triple) -> std::optional<TripleViolation>;

    [[nodiscard]] auto verify_persistent_triple(const CrispLanguage & language, const Triple & triple) -> bool;
}

#endif
