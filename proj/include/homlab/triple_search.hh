#ifndef HOMLAB_GUARD_HOMLAB_TRIPLE_SEARCH_HH
#define HOMLAB_GUARD_HOMLAB_TRIPLE_SEARCH_HH 1

#include <homlab/language.hh>
#include <homlab/operation.hh>

#include <cstdint>
#include <optional>

namespace homlab
{
    struct TripleSearchResult
    {
        std::optional<Triple> triple;   // nullopt: no persistent majority triple exists
        std::uint64_t nodes = 0;
        int variables = 0;
        int constraints = 0;
    };

    constexpr std::uint64_t default_triple_search_budget = 50'000'000;

    /**
     * Complete search for a persistent majority triple. One variable per argument
     * triple with at least two distinct entries, valued by the output rearrangement
     * (first output the repeated value when there is one). Every three tuples of a
     * relation give a binary constraint between the heads and tails variables.
     * Arc consistency is maintained throughout; variables and values are tried in
     * lexicographic order, so the result is deterministic. Throws BudgetExceeded
     * past the node budget and InvalidInput above 255 domain values.
     */
    auto search_triple(const CrispLanguage & language, std::uint64_t budget = default_triple_search_budget) -> TripleSearchResult;
}

#endif
