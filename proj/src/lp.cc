#include <homlab/error.hh>
#include <homlab/lp.hh>

#include "float_simplex.hh"

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <ostream>

using namespace homlab;

using std::optional;
using std::pair;
using std::string;
using std::vector;

auto homlab::RationalLp::add_variable(string name, const Rational & cost) -> int
{
    _objective.push_back(cost);
    _objective.back().canonicalize();
    _names.push_back(std::move(name));
    return num_variables() - 1;
}

auto homlab::RationalLp::add_equality(vector<pair<int, Rational>> coefficients, const Rational & rhs) -> void
{
    std::sort(coefficients.begin(), coefficients.end(), [] (const auto & a, const auto & b) { return a.first < b.first; });
    for (std::size_t i = 0 ; i < coefficients.size() ; ++i) {
        if (coefficients[i].first < 0 || coefficients[i].first >= num_variables())
            throw InvalidInput("row refers to unknown variable " + std::to_string(coefficients[i].first));
        if (i > 0 && coefficients[i].first == coefficients[i - 1].first)
            throw InvalidInput("row mentions variable " + std::to_string(coefficients[i].first) + " twice");
    }
    for (auto & c : coefficients)
        c.second.canonicalize();
    std::erase_if(coefficients, [] (const auto & c) { return sgn(c.second) == 0; });
    _rows.push_back(Row{ std::move(coefficients), rhs });
    _rows.back().rhs.canonicalize();
}

auto homlab::to_string(LpStatus status) -> string
{
    switch (status) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

auto homlab::is_feasible_point(const RationalLp & lp, const vector<Rational> & x) -> bool
{
    if (static_cast<int>(x.size()) != lp.num_variables())
        return false;
    for (auto & v : x)
        if (sgn(v) < 0)
            return false;
    for (auto & row : lp.rows()) {
        Rational total = 0;
        for (auto & [j, a] : row.coefficients)
            total += a * x[j];
        if (total != row.rhs)
            return false;
    }
    return true;
}

auto homlab::objective_value(const RationalLp & lp, const vector<Rational> & x) -> Rational
{
    Rational total = 0;
    for (int j = 0 ; j < lp.num_variables() ; ++j)
        if (sgn(lp.objective()[j]) != 0)
            total += lp.objective()[j] * x[j];
    return total;
}

auto homlab::dump_lp(const RationalLp & lp, std::ostream & stream) -> void
{
    stream << "lp " << lp.num_variables() << " " << lp.num_rows() << "\n";
    for (int j = 0 ; j < lp.num_variables() ; ++j)
        stream << "var " << j << " " << lp.name(j) << " " << to_string(lp.objective()[j]) << "\n";
    int i = 0;
    for (auto & row : lp.rows()) {
        stream << "row " << i++ << ":";
        bool first = true;
        for (auto & [j, a] : row.coefficients) {
            stream << (first ? " " : " + ") << to_string(a) << "*x" << j;
            first = false;
        }
        if (first)
            stream << " 0";
        stream << " = " << to_string(row.rhs) << "\n";
    }
}

namespace
{
    using SparseColumn = vector<pair<int, Rational>>;

    struct Eta
    {
        int row;
        Rational pivot;
        SparseColumn column;   // entries other than the pivot row
    };

    enum class Outcome
    {
        Optimal,
        Unbounded
    };

    /**
     * Revised simplex on A x = b, x >= 0, b >= 0, with one artificial column per row
     * appended after the structural columns. Artificials may leave the basis but
     * never re-enter once phase one is over.
     */
    class Simplex
    {
        private:
            int _m, _n;
            vector<SparseColumn> _columns;   // structural only
            vector<Rational> _cost;          // current phase, length n + m
            vector<int> _basis;
            vector<int> _position;           // row of a basic column, else -1
            vector<Rational> _x_basic;
            vector<Eta> _etas;
            vector<Rational> _work, _dual;
            const LpOptions & _options;
            std::uint64_t & _pivots;
            bool _artificials_may_enter = true;

            auto load_column(int j, vector<Rational> & into) const -> void
            {
                for (auto & v : into)
                    v = 0;
                if (j < _n) {
                    for (auto & [i, a] : _columns[j])
                        into[i] = a;
                }
                else
                    into[j - _n] = 1;
            }

            auto ftran(vector<Rational> & v) const -> void
            {
                for (auto & eta : _etas) {
                    if (sgn(v[eta.row]) == 0)
                        continue;
                    v[eta.row] /= eta.pivot;
                    const Rational & t = v[eta.row];
                    for (auto & [i, a] : eta.column)
                        v[i] -= a * t;
                }
            }

            auto btran(vector<Rational> & z) const -> void
            {
                Rational s;
                for (auto e = _etas.rbegin() ; e != _etas.rend() ; ++e) {
                    s = z[e->row];
                    for (auto & [i, a] : e->column)
                        if (sgn(z[i]) != 0)
                            s -= a * z[i];
                    z[e->row] = s / e->pivot;
                }
            }

            auto reduced_cost(int j) const -> Rational
            {
                Rational d = _cost[j];
                if (j < _n) {
                    for (auto & [i, a] : _columns[j])
                        if (sgn(_dual[i]) != 0)
                            d -= _dual[i] * a;
                }
                else
                    d -= _dual[j - _n];
                return d;
            }

            auto compute_duals() -> void
            {
                for (int r = 0 ; r < _m ; ++r)
                    _dual[r] = _cost[_basis[r]];
                btran(_dual);
            }

            auto pivot(int entering, int row) -> void
            {
                if (++_pivots > _options.pivot_budget)
                    throw BudgetExceeded("simplex pivot budget of " + std::to_string(_options.pivot_budget) + " exhausted");

                // _work holds the FTRAN'd entering column
                Rational theta = _x_basic[row] / _work[row];
                if (sgn(theta) != 0)
                    for (int i = 0 ; i < _m ; ++i)
                        if (i != row && sgn(_work[i]) != 0)
                            _x_basic[i] -= theta * _work[i];
                _x_basic[row] = theta;

                Eta eta{ row, _work[row], { } };
                for (int i = 0 ; i < _m ; ++i)
                    if (i != row && sgn(_work[i]) != 0)
                        eta.column.emplace_back(i, _work[i]);
                _etas.push_back(std::move(eta));

                _position[_basis[row]] = -1;
                _basis[row] = entering;
                _position[entering] = row;
            }

            auto may_enter(int j) const -> bool
            {
                return _position[j] < 0 && (j < _n || _artificials_may_enter);
            }

        public:
            Simplex(int m, int n, vector<SparseColumn> columns, const vector<Rational> & rhs,
                    const LpOptions & options, std::uint64_t & pivots) :
                _m(m),
                _n(n),
                _columns(std::move(columns)),
                _cost(n + m),
                _basis(m),
                _position(n + m, -1),
                _x_basic(rhs),
                _work(m),
                _dual(m),
                _options(options),
                _pivots(pivots)
            {
                for (int r = 0 ; r < m ; ++r) {
                    _basis[r] = n + r;
                    _position[n + r] = r;
                }
            }

            auto set_phase_one() -> void
            {
                for (int j = 0 ; j < _n + _m ; ++j)
                    _cost[j] = j < _n ? 0 : 1;
                _artificials_may_enter = true;
            }

            auto set_phase_two(const vector<Rational> & cost) -> void
            {
                for (int j = 0 ; j < _n ; ++j)
                    _cost[j] = cost[j];
                for (int j = _n ; j < _n + _m ; ++j)
                    _cost[j] = 0;
                _artificials_may_enter = false;
            }

            auto run() -> Outcome
            {
                int degenerate_streak = 0;
                while (true) {
                    compute_duals();
                    bool bland = degenerate_streak >= _options.degenerate_streak_limit;

                    int entering = -1;
                    Rational best;
                    for (int j = 0 ; j < _n + _m ; ++j) {
                        if (! may_enter(j))
                            continue;
                        Rational d = reduced_cost(j);
                        if (sgn(d) >= 0)
                            continue;
                        if (bland) {
                            entering = j;
                            break;
                        }
                        if (entering < 0 || d < best) {
                            entering = j;
                            best = d;
                        }
                    }
                    if (entering < 0)
                        return Outcome::Optimal;

                    load_column(entering, _work);
                    ftran(_work);

                    int leaving_row = -1;
                    Rational best_ratio, ratio;
                    for (int r = 0 ; r < _m ; ++r) {
                        if (sgn(_work[r]) <= 0)
                            continue;
                        ratio = _x_basic[r] / _work[r];
                        if (leaving_row < 0 || ratio < best_ratio
                                || (ratio == best_ratio && _basis[r] < _basis[leaving_row])) {
                            leaving_row = r;
                            best_ratio = ratio;
                        }
                    }
                    if (leaving_row < 0)
                        return Outcome::Unbounded;

                    if (sgn(best_ratio) == 0)
                        ++degenerate_streak;
                    else
                        degenerate_streak = 0;
                    pivot(entering, leaving_row);
                }
            }

            /// After phase one: pivot structural columns in for artificials wherever
            /// the row of the inverse allows it. Artificials left behind sit on
            /// redundant rows.
            auto drive_out_artificials() -> void
            {
                vector<Rational> rho(_m);
                for (int r = 0 ; r < _m ; ++r) {
                    if (_basis[r] < _n)
                        continue;
                    for (int i = 0 ; i < _m ; ++i)
                        rho[i] = (i == r) ? 1 : 0;
                    btran(rho);
                    for (int j = 0 ; j < _n ; ++j) {
                        if (_position[j] >= 0)
                            continue;
                        Rational dot = 0;
                        for (auto & [i, a] : _columns[j])
                            if (sgn(rho[i]) != 0)
                                dot += rho[i] * a;
                        if (sgn(dot) == 0)
                            continue;
                        load_column(j, _work);
                        ftran(_work);
                        pivot(j, r);
                        break;
                    }
                }
            }

            /// Simplex multipliers of the current basis under the current costs.
            [[nodiscard]] auto duals() -> const vector<Rational> &
            {
                compute_duals();
                return _dual;
            }

            [[nodiscard]] auto artificial_sum() const -> Rational
            {
                Rational total = 0;
                for (int r = 0 ; r < _m ; ++r)
                    if (_basis[r] >= _n)
                        total += _x_basic[r];
                return total;
            }

            [[nodiscard]] auto values() const -> vector<Rational>
            {
                vector<Rational> result(_n);
                for (int r = 0 ; r < _m ; ++r)
                    if (_basis[r] < _n)
                        result[_basis[r]] = _x_basic[r];
                return result;
            }
    };

    struct Presolved
    {
        bool infeasible = false;
        bool unbounded = false;
        vector<optional<Rational>> fixed;
        vector<Rational> rhs;           // after substituting fixed columns
        vector<bool> row_alive;
    };

    /// Zero propagation on one-signed rows and singleton rows, to a fixpoint.
    auto presolve(const RationalLp & lp) -> Presolved
    {
        int n = lp.num_variables(), m = lp.num_rows();
        Presolved p;
        p.fixed.resize(n);
        p.rhs.resize(m);
        p.row_alive.assign(m, true);

        vector<vector<int>> rows_of(n);
        for (int i = 0 ; i < m ; ++i) {
            p.rhs[i] = lp.rows()[i].rhs;
            for (auto & [j, a] : lp.rows()[i].coefficients)
                rows_of[j].push_back(i);
        }

        std::deque<int> queue;
        vector<bool> queued(m, true);
        for (int i = 0 ; i < m ; ++i)
            queue.push_back(i);

        auto fix = [&] (int j, const Rational & value) {
            p.fixed[j] = value;
            for (auto i : rows_of[j]) {
                if (sgn(value) != 0)
                    for (auto & [jj, a] : lp.rows()[i].coefficients)
                        if (jj == j)
                            p.rhs[i] -= a * value;
                if (p.row_alive[i] && ! queued[i]) {
                    queued[i] = true;
                    queue.push_back(i);
                }
            }
        };

        while (! queue.empty() && ! p.infeasible) {
            int i = queue.front();
            queue.pop_front();
            queued[i] = false;
            if (! p.row_alive[i])
                continue;

            int free_count = 0, positive = 0, negative = 0, last_free = -1;
            Rational last_coefficient;
            for (auto & [j, a] : lp.rows()[i].coefficients) {
                if (p.fixed[j])
                    continue;
                ++free_count;
                (sgn(a) > 0 ? positive : negative)++;
                last_free = j;
                last_coefficient = a;
            }

            int rhs_sign = sgn(p.rhs[i]);
            if (free_count == 0) {
                if (rhs_sign != 0)
                    p.infeasible = true;
                p.row_alive[i] = false;
            }
            else if (free_count == 1) {
                Rational value = p.rhs[i] / last_coefficient;
                if (sgn(value) < 0) {
                    p.infeasible = true;
                    break;
                }
                p.row_alive[i] = false;
                fix(last_free, value);
            }
            else if ((rhs_sign >= 0 && positive == 0) || (rhs_sign <= 0 && negative == 0)) {
                if (rhs_sign != 0) {
                    p.infeasible = true;
                    break;
                }
                p.row_alive[i] = false;
                for (auto & [j, a] : lp.rows()[i].coefficients)
                    if (! p.fixed[j])
                        fix(j, 0);
            }
        }
        if (p.infeasible)
            return p;

        // columns left in no live row are unconstrained above
        for (int j = 0 ; j < n ; ++j) {
            if (p.fixed[j])
                continue;
            bool in_live_row = std::any_of(rows_of[j].begin(), rows_of[j].end(), [&] (int i) { return p.row_alive[i]; });
            if (in_live_row)
                continue;
            if (sgn(lp.objective()[j]) < 0) {
                p.unbounded = true;
                return p;
            }
            p.fixed[j] = Rational(0);
        }
        return p;
    }
}

namespace
{
    /// Closest fraction with a denominator of at most 2^20, if within 1e-7.
    auto rationalize(double v) -> optional<Rational>
    {
        if (! std::isfinite(v))
            return std::nullopt;
        long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
        double rest = std::abs(v);
        for (int step = 0 ; step < 40 ; ++step) {
            double whole = std::floor(rest);
            if (whole > 1e12)
                break;
            long a = static_cast<long>(whole);
            long p2 = a * p1 + p0, q2 = a * q1 + q0;
            if (q2 > (1L << 20))
                break;
            p0 = p1, q0 = q1, p1 = p2, q1 = q2;
            if (std::abs(static_cast<double>(p1) / static_cast<double>(q1) - std::abs(v)) < 1e-12 || rest - whole < 1e-12)
                break;
            rest = 1 / (rest - whole);
        }
        if (q1 == 0 || std::abs(static_cast<double>(p1) / static_cast<double>(q1) - std::abs(v)) > 1e-7)
            return std::nullopt;
        Rational r(p1, q1);
        r.canonicalize();
        return v < 0 ? Rational(-r) : r;
    }

    auto rationalize_all(const vector<double> & values) -> optional<vector<Rational>>
    {
        vector<Rational> result;
        result.reserve(values.size());
        for (double v : values) {
            auto r = rationalize(v);
            if (! r)
                return std::nullopt;
            result.push_back(*r);
        }
        return result;
    }

    auto column_dot(const SparseColumn & column, const vector<Rational> & y) -> Rational
    {
        Rational total = 0;
        for (auto & [i, a] : column)
            total += a * y[i];
        return total;
    }

    enum class Certified
    {
        Optimal,
        Infeasible,
        Unknown
    };

    /**
     * Solves in double precision, rounds the primal point and the multipliers to
     * nearby fractions and checks them exactly: primal feasibility, dual
     * feasibility and equal objectives, or a Farkas ray for infeasibility.
     */
    auto certify_from_guess(int m, int n, const vector<SparseColumn> & columns, const vector<Rational> & rhs,
            const vector<Rational> & cost, const LpOptions & options, std::uint64_t & pivots, vector<Rational> & solution) -> Certified
    {
        vector<vector<pair<int, double>>> approximate(n);
        for (int j = 0 ; j < n ; ++j)
            for (auto & [i, a] : columns[j])
                approximate[j].emplace_back(i, a.get_d());
        vector<double> approximate_rhs(m), approximate_cost(n);
        for (int i = 0 ; i < m ; ++i)
            approximate_rhs[i] = rhs[i].get_d();
        for (int j = 0 ; j < n ; ++j)
            approximate_cost[j] = cost[j].get_d();

        auto budget = std::min<std::uint64_t>(options.pivot_budget, 10 * static_cast<std::uint64_t>(m + n));
        auto guess = detail::float_simplex(m, approximate, approximate_rhs, approximate_cost, budget);
        pivots += guess.pivots;

        if (guess.outcome == detail::FloatOutcome::Infeasible) {
            auto y = rationalize_all(guess.y);
            if (! y)
                return Certified::Unknown;
            for (int j = 0 ; j < n ; ++j)
                if (sgn(column_dot(columns[j], *y)) > 0)
                    return Certified::Unknown;
            Rational yb = 0;
            for (int i = 0 ; i < m ; ++i)
                yb += (*y)[i] * rhs[i];
            return sgn(yb) > 0 ? Certified::Infeasible : Certified::Unknown;
        }
        if (guess.outcome != detail::FloatOutcome::Optimal)
            return Certified::Unknown;

        auto x = rationalize_all(guess.x);
        auto y = rationalize_all(guess.y);
        if (! x || ! y)
            return Certified::Unknown;
        vector<Rational> row_sums(m);
        Rational primal = 0, dual = 0;
        for (int j = 0 ; j < n ; ++j) {
            if (sgn((*x)[j]) < 0 || cost[j] - column_dot(columns[j], *y) < 0)
                return Certified::Unknown;
            if (sgn((*x)[j]) != 0) {
                for (auto & [i, a] : columns[j])
                    row_sums[i] += a * (*x)[j];
                primal += cost[j] * (*x)[j];
            }
        }
        for (int i = 0 ; i < m ; ++i) {
            if (row_sums[i] != rhs[i])
                return Certified::Unknown;
            dual += (*y)[i] * rhs[i];
        }
        if (primal != dual)
            return Certified::Unknown;
        solution = std::move(*x);
        return Certified::Optimal;
    }
}

auto homlab::lp_solve_exact(const RationalLp & lp, const LpOptions & options) -> LpResult
{
    LpResult result;
    int n = lp.num_variables();

    auto p = presolve(lp);
    result.statistics.presolve_fixed = static_cast<int>(std::count_if(p.fixed.begin(), p.fixed.end(), [] (auto & f) { return f.has_value(); }));
    if (p.infeasible) {
        result.status = LpStatus::Infeasible;
        return result;
    }
    if (p.unbounded) {
        result.status = LpStatus::Unbounded;
        return result;
    }

    vector<int> column_of(n, -1), original_column;
    for (int j = 0 ; j < n ; ++j)
        if (! p.fixed[j]) {
            column_of[j] = static_cast<int>(original_column.size());
            original_column.push_back(j);
        }
    int reduced_n = static_cast<int>(original_column.size());

    vector<SparseColumn> columns(reduced_n);
    vector<Rational> rhs;
    int m = 0;
    for (int i = 0 ; i < lp.num_rows() ; ++i) {
        if (! p.row_alive[i])
            continue;
        bool negate = sgn(p.rhs[i]) < 0;
        for (auto & [j, a] : lp.rows()[i].coefficients)
            if (column_of[j] >= 0)
                columns[column_of[j]].emplace_back(m, negate ? Rational(-a) : a);
        rhs.push_back(negate ? Rational(-p.rhs[i]) : p.rhs[i]);
        ++m;
    }
    result.statistics.reduced_rows = m;
    result.statistics.reduced_columns = reduced_n;

    vector<Rational> values(reduced_n);
    if (reduced_n > 0) {
        vector<Rational> cost(reduced_n);
        for (int c = 0 ; c < reduced_n ; ++c)
            cost[c] = lp.objective()[original_column[c]];

        switch (certify_from_guess(m, reduced_n, columns, rhs, cost, options, result.statistics.guide_pivots, values)) {
            case Certified::Optimal:
                break;
            case Certified::Infeasible:
                result.status = LpStatus::Infeasible;
                return result;
            case Certified::Unknown: {
                Simplex simplex(m, reduced_n, std::move(columns), rhs, options, result.statistics.pivots);
                simplex.set_phase_one();
                simplex.run();
                if (sgn(simplex.artificial_sum()) != 0) {
                    result.status = LpStatus::Infeasible;
                    return result;
                }
                simplex.drive_out_artificials();
                simplex.set_phase_two(cost);
                if (simplex.run() == Outcome::Unbounded) {
                    result.status = LpStatus::Unbounded;
                    return result;
                }
                values = simplex.values();
            }
        }
    }

    result.solution.resize(n);
    for (int j = 0 ; j < n ; ++j)
        result.solution[j] = p.fixed[j] ? *p.fixed[j] : values[column_of[j]];

    if (! is_feasible_point(lp, result.solution))
        throw std::logic_error("simplex produced a point that violates the constraints");

    result.status = LpStatus::Optimal;
    result.optimum = objective_value(lp, result.solution);
    return result;
}
