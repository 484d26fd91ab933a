#ifndef HOMLAB_GUARD_HOMLAB_ODD_CYCLE_HH
#define HOMLAB_GUARD_HOMLAB_ODD_CYCLE_HH 1

#include <homlab/ext_rational.hh>
#include <homlab/graph.hh>
#include <homlab/language.hh>
#include <homlab/sherali_adams.hh>
#include <homlab/vcsp.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homlab
{
    /// alpha_k = ((2k+1)/2)^(1/(2k+1)) ((2k+1)/(2k))^(2k/(2k+1)).
    /// alpha_k^(2k+1) is rational, which makes comparisons against rationals exact.
    auto alpha_power(int k) -> Rational;

    /// Exactly decides alpha_k < bound, via alpha_k^(2k+1) < bound^(2k+1).
    [[nodiscard]] auto alpha_below(int k, const Rational & bound) -> bool;

    /// An enclosure of a real quantity, rounded outward.
    struct Interval
    {
        double lower = 0, upper = 0;
    };

    /// alpha_k, rounded outward at every step.
    auto alpha_interval(int k) -> Interval;

    /// alpha_k^(-n), rounded outward at every step.
    auto success_interval(int k, int n) -> Interval;

    struct TrialPlan
    {
        int k = 1;
        int n = 0;
        Interval alpha;
        Interval success;             // alpha_k^(-n)
        std::uint64_t trials = 1;     // ceil(ln(1/2) / ln(1 - alpha_k^(-n))) + 1, never rounded down
        std::uint64_t master_seed = 0;
    };

    /// Throws InvalidInput if k < 1 or n < 0, and BudgetExceeded if the trial count
    /// does not fit in 62 bits.
    auto plan_trials(int k, int n, std::uint64_t master_seed) -> TrialPlan;

    auto splitmix64(std::uint64_t x) -> std::uint64_t;

    /// splitmix64(master ^ splitmix64(index + 1)).
    auto trial_seed(std::uint64_t master_seed, std::uint64_t index) -> std::uint64_t;

    /// Which member of the list family a vertex was given.
    enum class ListChoice : std::uint8_t
    {
        All,    // S_k
        Odd,    // S_k^A
        Even    // S_k^B
    };

    auto to_char(ListChoice choice) -> char;

    /**
     * Independent lists with P(S_k) = (2k-1)/(2k+1) and P(S_k^A) = P(S_k^B) =
     * 1/(2k+1). Each vertex draws r uniformly from [0, 2k+1) by rejection on the
     * raw output of an mt19937_64 seeded with seed: r < 2k-1 gives S_k, r = 2k-1
     * gives S_k^A, r = 2k gives S_k^B.
     */
    auto sample_lists(int n, int k, std::uint64_t seed) -> std::vector<ListChoice>;

    /// The {0, inf} list homomorphism instance: one variable per vertex over
    /// 1..2k+1, one term per edge.
    auto list_hom_instance(const Graph & g, int k, const std::vector<ListChoice> & lists) -> VcspInstance;

    struct TrialOutcome
    {
        bool yes = false;
        std::vector<ListChoice> lists;
        std::optional<Assignment> witness;   // a list homomorphism, when SA supplied one

        friend auto operator== (const TrialOutcome &, const TrialOutcome &) -> bool = default;
    };

    /// YES iff the SA(2,3) optimum of the sampled instance is zero.
    auto algorithm_b_trial(const Graph & g, int k, std::uint64_t seed, const SaOptions & options = SaOptions{ }) -> TrialOutcome;

    struct OddCycleReport
    {
        bool yes = false;
        TrialPlan plan;
        std::uint64_t trials_run = 0;
        std::optional<std::uint64_t> first_yes;        // trial index
        std::optional<std::vector<Vertex>> witness;    // a homomorphism to C_{2k+1}, when known
        std::vector<std::string> transcript;           // one line per trial run
        double millis = 0;

        friend auto operator== (const OddCycleReport & a, const OddCycleReport & b) -> bool
        {
            return a.yes == b.yes && a.trials_run == b.trials_run && a.first_yes == b.first_yes
                && a.witness == b.witness && a.transcript == b.transcript;
        }
    };

    struct OddCycleOptions
    {
        SaOptions sa;
        std::optional<std::uint64_t> trials;   // overrides the plan
        bool stop_at_yes = true;
    };

    /// Disjunction of independent trials. A YES is always correct; a NO is wrong
    /// with probability below 1/2 when the planned trial count is used.
    auto odd_cycle_solve(const Graph & g, int k, std::uint64_t master_seed, const OddCycleOptions & options = OddCycleOptions{ })
        -> OddCycleReport;
}

#endif
