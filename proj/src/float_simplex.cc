#include "float_simplex.hh"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>

using std::pair;
using std::vector;

using namespace homlab::detail;

namespace
{
    using Column = vector<pair<int, double>>;

    constexpr double value_tolerance = 1e-9;
    constexpr double pricing_tolerance = 1e-12;
    constexpr double pivot_tolerance = 1e-7;
    constexpr double infeasibility_tolerance = 1e-6;
    constexpr int refactor_period = 64;
    constexpr int degenerate_streak_limit = 256;

    struct Failure
    {
    };

    struct Eta
    {
        int row;
        double pivot;
        Column column;   // entries other than the pivot row
    };

    class FloatSimplex
    {
        private:
            int _m, _n;
            const vector<Column> & _columns;
            vector<double> _cost;   // current phase, length n + m
            vector<double> _rhs;
            vector<int> _basis, _position;
            vector<double> _x;
            Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> _lu;
            vector<Eta> _etas;
            Eigen::VectorXd _work, _dual;
            bool _artificials_may_enter = true;
            std::uint64_t & _pivots;
            std::uint64_t _budget;

            auto factorize() -> void
            {
                vector<Eigen::Triplet<double>> entries;
                for (int r = 0 ; r < _m ; ++r) {
                    int j = _basis[r];
                    if (j < _n)
                        for (auto & [i, a] : _columns[j])
                            entries.emplace_back(i, r, a);
                    else
                        entries.emplace_back(j - _n, r, 1.0);
                }
                Eigen::SparseMatrix<double> b(_m, _m);
                b.setFromTriplets(entries.begin(), entries.end());
                b.makeCompressed();
                _lu.analyzePattern(b);
                _lu.factorize(b);
                if (_lu.info() != Eigen::Success)
                    throw Failure{ };
                _etas.clear();
            }

            auto ftran(Eigen::VectorXd & v) const -> void
            {
                v = _lu.solve(v);
                for (auto & eta : _etas) {
                    if (v[eta.row] == 0)
                        continue;
                    v[eta.row] /= eta.pivot;
                    double t = v[eta.row];
                    for (auto & [i, a] : eta.column)
                        v[i] -= a * t;
                }
            }

            auto btran(Eigen::VectorXd & z) -> void
            {
                for (auto e = _etas.rbegin() ; e != _etas.rend() ; ++e) {
                    double s = z[e->row];
                    for (auto & [i, a] : e->column)
                        s -= a * z[i];
                    z[e->row] = s / e->pivot;
                }
                z = _lu.transpose().solve(z);
            }

            auto load_column(int j, Eigen::VectorXd & into) const -> void
            {
                into.setZero();
                if (j < _n)
                    for (auto & [i, a] : _columns[j])
                        into[i] = a;
                else
                    into[j - _n] = 1;
            }

            auto compute_duals() -> void
            {
                for (int r = 0 ; r < _m ; ++r)
                    _dual[r] = _cost[_basis[r]];
                btran(_dual);
            }

            auto reduced_cost(int j) const -> double
            {
                if (j >= _n)
                    return _cost[j] - _dual[j - _n];
                double d = _cost[j];
                for (auto & [i, a] : _columns[j])
                    d -= _dual[i] * a;
                return d;
            }

            auto pivot(int entering, int row) -> void
            {
                if (++_pivots > _budget)
                    throw Failure{ };
                double theta = std::max(0.0, _x[row] / _work[row]);
                for (int i = 0 ; i < _m ; ++i)
                    if (i != row && _work[i] != 0)
                        _x[i] = std::max(0.0, _x[i] - theta * _work[i]);
                _x[row] = theta;

                Eta eta{ row, _work[row], { } };
                for (int i = 0 ; i < _m ; ++i)
                    if (i != row && std::abs(_work[i]) > 1e-14)
                        eta.column.emplace_back(i, _work[i]);
                _etas.push_back(std::move(eta));

                _position[_basis[row]] = -1;
                _basis[row] = entering;
                _position[entering] = row;
            }

        public:
            FloatSimplex(int m, const vector<Column> & columns, vector<double> rhs, std::uint64_t & pivots, std::uint64_t budget) :
                _m(m),
                _n(static_cast<int>(columns.size())),
                _columns(columns),
                _cost(_n + m),
                _rhs(std::move(rhs)),
                _basis(m),
                _position(_n + m, -1),
                _x(_rhs),
                _work(m),
                _dual(m),
                _pivots(pivots),
                _budget(budget)
            {
                for (int r = 0 ; r < m ; ++r) {
                    _basis[r] = _n + r;
                    _position[_n + r] = r;
                }
                factorize();
            }

            /// Refactorizes and recomputes the basic point for the given right-hand side.
            auto resolve(const vector<double> & rhs) -> void
            {
                factorize();
                _rhs = rhs;
                Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(rhs.data(), _m);
                ftran(v);
                for (int r = 0 ; r < _m ; ++r)
                    _x[r] = std::max(0.0, v[r]);
            }

            auto set_phase_one() -> void
            {
                for (int j = 0 ; j < _n + _m ; ++j)
                    _cost[j] = j < _n ? 0 : 1;
                _artificials_may_enter = true;
            }

            auto set_phase_two(const vector<double> & cost) -> void
            {
                for (int j = 0 ; j < _n + _m ; ++j)
                    _cost[j] = j < _n ? cost[j] : 0;
                _artificials_may_enter = false;
            }

            /// False if unbounded.
            auto run() -> bool
            {
                int degenerate_streak = 0;
                while (true) {
                    if (static_cast<int>(_etas.size()) >= refactor_period)
                        resolve(_rhs);
                    compute_duals();
                    bool bland = degenerate_streak >= degenerate_streak_limit;

                    int entering = -1;
                    double best = -pricing_tolerance;
                    for (int j = 0 ; j < _n + _m ; ++j) {
                        if (_position[j] >= 0 || (j >= _n && ! _artificials_may_enter))
                            continue;
                        double d = reduced_cost(j);
                        if (d < best) {
                            entering = j;
                            best = d;
                            if (bland)
                                break;
                        }
                    }
                    if (entering < 0)
                        return true;

                    load_column(entering, _work);
                    ftran(_work);

                    double bound = std::numeric_limits<double>::infinity();
                    for (int r = 0 ; r < _m ; ++r)
                        if (_work[r] > pivot_tolerance)
                            bound = std::min(bound, (_x[r] + value_tolerance) / _work[r]);
                    int row = -1;
                    for (int r = 0 ; r < _m ; ++r) {
                        if (_work[r] <= pivot_tolerance || _x[r] / _work[r] > bound)
                            continue;
                        if (row < 0 || (bland ? _basis[r] < _basis[row] : _work[r] > _work[row]))
                            row = r;
                    }
                    if (row < 0)
                        return false;

                    if (_x[row] / _work[row] <= value_tolerance)
                        ++degenerate_streak;
                    else
                        degenerate_streak = 0;
                    pivot(entering, row);
                }
            }

            /// Swaps structural columns in for basic artificials where possible.
            auto drive_out_artificials() -> void
            {
                Eigen::VectorXd rho(_m);
                for (int r = 0 ; r < _m ; ++r) {
                    if (_basis[r] < _n)
                        continue;
                    rho.setZero();
                    rho[r] = 1;
                    btran(rho);
                    for (int j = 0 ; j < _n ; ++j) {
                        if (_position[j] >= 0)
                            continue;
                        double dot = 0;
                        for (auto & [i, a] : _columns[j])
                            dot += rho[i] * a;
                        if (std::abs(dot) <= pivot_tolerance)
                            continue;
                        load_column(j, _work);
                        ftran(_work);
                        pivot(j, r);
                        break;
                    }
                    if (static_cast<int>(_etas.size()) >= refactor_period)
                        resolve(_rhs);
                }
            }

            [[nodiscard]] auto artificial_sum() const -> double
            {
                double total = 0;
                for (int r = 0 ; r < _m ; ++r)
                    if (_basis[r] >= _n)
                        total += _x[r];
                return total;
            }

            [[nodiscard]] auto values() const -> vector<double>
            {
                vector<double> result(_n);
                for (int r = 0 ; r < _m ; ++r)
                    if (_basis[r] < _n)
                        result[_basis[r]] = _x[r];
                return result;
            }

            [[nodiscard]] auto duals() -> vector<double>
            {
                compute_duals();
                return { _dual.data(), _dual.data() + _m };
            }
    };
}

auto homlab::detail::float_simplex(int m, const vector<Column> & columns, const vector<double> & rhs,
        const vector<double> & cost, std::uint64_t pivot_budget) -> FloatGuess
{
    FloatGuess result;
    try {
        FloatSimplex simplex(m, columns, rhs, result.pivots, pivot_budget);
        simplex.set_phase_one();
        simplex.run();
        if (simplex.artificial_sum() > infeasibility_tolerance) {
            result.outcome = FloatOutcome::Infeasible;
            result.y = simplex.duals();
            return result;
        }
        simplex.drive_out_artificials();
        simplex.set_phase_two(cost);
        if (! simplex.run())
            return result;
        simplex.resolve(rhs);
        result.outcome = FloatOutcome::Optimal;
        result.x = simplex.values();
        result.y = simplex.duals();
    }
    catch (const Failure &) {
        result.outcome = FloatOutcome::Failed;
    }
    return result;
}
