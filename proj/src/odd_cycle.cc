#include <homlab/error.hh>
#include <homlab/odd_cycle.hh>

#include <mpfr.h>

#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

using namespace homlab;

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    constexpr mpfr_prec_t precision = 256;

    /// RAII wrapper; mpfr_t has no destructor of its own.
    class Real
    {
        private:
            mpfr_t _x;

        public:
            Real() { mpfr_init2(_x, precision); }
            ~Real() { mpfr_clear(_x); }
            Real(const Real &) = delete;
            auto operator= (const Real &) -> Real & = delete;

            auto get() -> mpfr_ptr { return _x; }
            auto get() const -> mpfr_srcptr { return _x; }
    };

    auto check_k(int k) -> void
    {
        if (k < 1)
            throw InvalidInput("cycle parameter k must be at least 1, got " + to_string(k));
    }

    /// ln alpha_k with every operation rounded in direction rnd.
    auto log_alpha(int k, mpfr_rnd_t rnd, Real & out) -> void
    {
        Real a, b;
        long m = 2L * k + 1;
        mpfr_set_si(a.get(), m, rnd);
        mpfr_div_si(a.get(), a.get(), 2, rnd);
        mpfr_log(a.get(), a.get(), rnd);
        mpfr_div_si(a.get(), a.get(), m, rnd);                  // ln((2k+1)/2) / (2k+1)

        mpfr_set_si(b.get(), m, rnd);
        mpfr_div_si(b.get(), b.get(), 2L * k, rnd);
        mpfr_log(b.get(), b.get(), rnd);
        mpfr_mul_si(b.get(), b.get(), 2L * k, rnd);
        mpfr_div_si(b.get(), b.get(), m, rnd);                  // 2k ln((2k+1)/(2k)) / (2k+1)

        mpfr_add(out.get(), a.get(), b.get(), rnd);
    }
}

auto homlab::alpha_power(int k) -> Rational
{
    check_k(k);
    Rational base(2 * k + 1, 2 * k);
    base.canonicalize();
    Rational result(2 * k + 1, 2);
    result.canonicalize();
    for (int i = 0 ; i < 2 * k ; ++i)
        result *= base;
    return result;
}

auto homlab::alpha_below(int k, const Rational & bound) -> bool
{
    if (bound <= 0)
        return false;
    Rational power = 1;
    for (int i = 0 ; i < 2 * k + 1 ; ++i)
        power *= bound;
    return alpha_power(k) < power;
}

auto homlab::alpha_interval(int k) -> Interval
{
    check_k(k);
    Interval result;
    Real low, high;
    log_alpha(k, MPFR_RNDD, low);
    log_alpha(k, MPFR_RNDU, high);
    mpfr_exp(low.get(), low.get(), MPFR_RNDD);
    mpfr_exp(high.get(), high.get(), MPFR_RNDU);
    result.lower = mpfr_get_d(low.get(), MPFR_RNDD);
    result.upper = mpfr_get_d(high.get(), MPFR_RNDU);
    return result;
}

namespace
{
    /// alpha_k^(-n) rounded down (rnd = RNDD) or up (RNDU).
    auto success_bound(int k, int n, mpfr_rnd_t rnd, Real & out) -> void
    {
        // a lower bound on alpha^(-n) needs an upper bound on n ln alpha
        mpfr_rnd_t inner = (rnd == MPFR_RNDD) ? MPFR_RNDU : MPFR_RNDD;
        log_alpha(k, inner, out);
        mpfr_mul_si(out.get(), out.get(), n, inner);
        mpfr_neg(out.get(), out.get(), rnd);
        mpfr_exp(out.get(), out.get(), rnd);
    }
}

auto homlab::success_interval(int k, int n) -> Interval
{
    check_k(k);
    if (n < 0)
        throw InvalidInput("vertex count must be nonnegative");
    Real low, high;
    success_bound(k, n, MPFR_RNDD, low);
    success_bound(k, n, MPFR_RNDU, high);
    return { mpfr_get_d(low.get(), MPFR_RNDD), mpfr_get_d(high.get(), MPFR_RNDU) };
}

auto homlab::plan_trials(int k, int n, std::uint64_t master_seed) -> TrialPlan
{
    check_k(k);
    if (n < 0)
        throw InvalidInput("vertex count must be nonnegative");

    TrialPlan plan;
    plan.k = k;
    plan.n = n;
    plan.master_seed = master_seed;
    plan.alpha = alpha_interval(k);
    plan.success = success_interval(k, n);

    // ln 2 / -ln(1 - x) decreases in x, so a lower bound on x and outward
    // rounding keep the count from falling below the exact expression
    Real x, y, ln2, q;
    success_bound(k, n, MPFR_RNDD, x);
    mpfr_ui_sub(y.get(), 1, x.get(), MPFR_RNDU);
    if (mpfr_cmp_ui(y.get(), 1) >= 0)
        throw BudgetExceeded("success probability underflows; the trial count is unbounded");
    mpfr_log(y.get(), y.get(), MPFR_RNDU);
    mpfr_neg(y.get(), y.get(), MPFR_RNDD);
    if (mpfr_zero_p(y.get()))
        throw BudgetExceeded("success probability underflows; the trial count is unbounded");
    mpfr_const_log2(ln2.get(), MPFR_RNDU);
    mpfr_div(q.get(), ln2.get(), y.get(), MPFR_RNDU);
    mpfr_ceil(q.get(), q.get());
    if (mpfr_cmp_ui_2exp(q.get(), 1, 62) >= 0)
        throw BudgetExceeded("trial count exceeds 2^62");
    plan.trials = static_cast<std::uint64_t>(mpfr_get_ui(q.get(), MPFR_RNDU)) + 1;
    return plan;
}

auto homlab::splitmix64(std::uint64_t x) -> std::uint64_t
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

auto homlab::trial_seed(std::uint64_t master_seed, std::uint64_t index) -> std::uint64_t
{
    return splitmix64(master_seed ^ splitmix64(index + 1));
}

auto homlab::to_char(ListChoice choice) -> char
{
    switch (choice) {
        case ListChoice::All: return 'S';
        case ListChoice::Odd: return 'A';
        case ListChoice::Even: return 'B';
    }
    return '?';
}

auto homlab::sample_lists(int n, int k, std::uint64_t seed) -> vector<ListChoice>
{
    check_k(k);
    std::mt19937_64 rng(seed);
    std::uint64_t m = 2ULL * k + 1;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % m;
    vector<ListChoice> lists(n);
    for (auto & list : lists) {
        std::uint64_t raw;
        do
            raw = rng();
        while (raw >= limit);
        auto r = raw % m;
        list = (r + 2 < m) ? ListChoice::All : (r + 2 == m) ? ListChoice::Odd : ListChoice::Even;
    }
    return lists;
}

auto homlab::list_hom_instance(const Graph & g, int k, const vector<ListChoice> & lists) -> VcspInstance
{
    check_k(k);
    if (static_cast<int>(lists.size()) != g.size())
        throw InvalidInput("one list per vertex is needed");

    OddCycleFamily family(k);
    int m = family.cycle_length();
    auto members = [&] (ListChoice c) -> const vector<int> & {
        switch (c) {
            case ListChoice::All: return family.all;
            case ListChoice::Odd: return family.odd;
            case ListChoice::Even: return family.even;
        }
        throw std::logic_error("bad list choice");
    };

    VcspInstance instance(m, g.size());
    for (auto [u, v] : g.edges()) {
        CostFunction phi(m, 2, ExtRational::infinity());
        for (auto a : members(lists[u - 1]))
            for (auto b : members(lists[v - 1])) {
                int gap = std::abs(a - b);
                if (gap == 1 || gap == m - 1)
                    phi.set(vector<int>{ a, b }, ExtRational{ 0 });
            }
        instance.add_term(std::move(phi), { u, v });
    }
    return instance;
}

auto homlab::algorithm_b_trial(const Graph & g, int k, std::uint64_t seed, const SaOptions & options) -> TrialOutcome
{
    TrialOutcome outcome;
    outcome.lists = sample_lists(g.size(), k, seed);
    auto instance = list_hom_instance(g, k, outcome.lists);
    auto r = solve_sa(instance, 2, 3, options);
    outcome.yes = r.status == LpStatus::Optimal && r.optimum == 0;
    if (outcome.yes && r.witness) {
        if (instance.cost(*r.witness) != ExtRational{ 0 })
            throw std::logic_error("relaxation certificate is not a list homomorphism");
        outcome.witness = r.witness;
    }
    return outcome;
}

auto homlab::odd_cycle_solve(const Graph & g, int k, std::uint64_t master_seed, const OddCycleOptions & options) -> OddCycleReport
{
    auto start = std::chrono::steady_clock::now();
    OddCycleReport report;
    report.plan = plan_trials(k, g.size(), master_seed);
    std::uint64_t trials = options.trials.value_or(report.plan.trials);

    for (std::uint64_t i = 0 ; i < trials ; ++i) {
        auto seed = trial_seed(master_seed, i);
        auto outcome = algorithm_b_trial(g, k, seed, options.sa);
        ++report.trials_run;

        string line = "trial " + to_string(i) + " seed " + to_string(seed) + " lists ";
        for (auto c : outcome.lists)
            line += to_char(c);
        line += outcome.yes ? " YES" : " NO";
        report.transcript.push_back(std::move(line));

        if (outcome.yes && ! report.first_yes) {
            report.yes = true;
            report.first_yes = i;
            if (outcome.witness)
                report.witness = outcome.witness;
        }
        if (report.yes && options.stop_at_yes)
            break;
    }
    report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}
