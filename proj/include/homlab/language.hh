#ifndef HOMLAB_GUARD_HOMLAB_LANGUAGE_HH
#define HOMLAB_GUARD_HOMLAB_LANGUAGE_HH 1

#include <homlab/graph.hh>

#include <string>
#include <utility>
#include <vector>

namespace homlab
{
    using Pair = std::pair<int, int>;

    struct Relation
    {
        std::string name;
        std::vector<Pair> tuples;   // sorted, distinct

        friend auto operator== (const Relation &, const Relation &) -> bool = default;
    };

    /// A finite set of named binary relations over 1..D.
    class CrispLanguage
    {
        private:
            int _domain_size = 0;
            std::vector<Relation> _relations;

        public:
            CrispLanguage() = default;
            explicit CrispLanguage(int domain_size);

            /// Sorts and deduplicates; throws InvalidInput on out-of-domain entries.
            auto add_relation(std::string name, std::vector<Pair> tuples) -> void;

            [[nodiscard]] auto domain_size() const -> int { return _domain_size; }
            [[nodiscard]] auto relations() const -> const std::vector<Relation> & { return _relations; }

            friend auto operator== (const CrispLanguage &, const CrispLanguage &) -> bool = default;
    };

    /**
     * R_ij = {(u,v) : color(u) = i, color(v) = j, uv an edge}, one relation for
     * every (i,j) in [k]^2, empty ones included, named "R_i_j". Throws
     * InvalidInput if the coloring is not proper.
     */
    auto crisp_language_of_coloring(const Graph & g, const Coloring & coloring) -> CrispLanguage;

    /// The equality relation on 1..D, named "eq".
    auto equality_relation(int domain_size) -> Relation;

    /**
     * The list family on C_{2k+1} (vertices 1..2k+1 in cycle order, 1 adjacent to 2k+1):
     * S_k = {2..2k+1}, S_k^A = odd vertices, S_k^B = even vertices and 1.
     */
    struct OddCycleFamily
    {
        int k;
        std::vector<int> all;   // S_k
        std::vector<int> odd;   // S_k^A
        std::vector<int> even;  // S_k^B

        explicit OddCycleFamily(int k);

        [[nodiscard]] auto cycle_length() const -> int { return 2 * k + 1; }
        [[nodiscard]] auto sets() const -> std::vector<const std::vector<int> *> { return { &all, &odd, &even }; }
    };

    /// Name of a family member: "S", "A" or "B".
    auto odd_cycle_set_name(int which) -> std::string;

    /**
     * The six relations R_{U1U2} = {(u,v) : u in U1, v in U2, uv an edge of C_{2k+1}}
     * for unordered pairs U1 <= U2 of the family, in the order SS, SA, SB, AA, AB, BB.
     * The remaining three ordered pairs give converse relations, which have the
     * same polymorphisms and persistent triples. Then the members themselves as
     * unary relations, each written as its diagonal {(u,u)}: U_S, U_A, U_B.
     */
    auto odd_cycle_language(int k) -> CrispLanguage;

    /// Whether {u1,u2,u3} lies inside no member of the family.
    [[nodiscard]] auto is_bad_triple(const OddCycleFamily & family, int u1, int u2, int u3) -> bool;
}

#endif
