#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <homlab/error.hh>
#include <homlab/graph.hh>
#include <homlab/lp.hh>
#include <homlab/sherali_adams.hh>
#include <homlab/vcsp.hh>

#include <optional>
#include <random>
#include <sstream>

using namespace homlab;

using std::optional;
using std::vector;

namespace
{
    auto hom_instance(const Graph & g, const Graph & h) -> VcspInstance
    {
        VcspInstance result(h.size(), g.size());
        for (auto [u, v] : g.edges()) {
            CostFunction phi(h.size(), 2, ExtRational::infinity());
            for (int a = 1 ; a <= h.size() ; ++a)
                for (int b = 1 ; b <= h.size() ; ++b)
                    if (h.adjacent(a, b))
                        phi.set(vector<int>{ a, b }, 0);
            result.add_term(std::move(phi), { u, v });
        }
        return result;
    }

    /// Solves B x_B = b by Gaussian elimination; nullopt if B is singular.
    auto solve_square(vector<vector<Rational>> a, vector<Rational> b) -> optional<vector<Rational>>
    {
        int m = static_cast<int>(b.size());
        for (int c = 0 ; c < m ; ++c) {
            int p = c;
            while (p < m && sgn(a[p][c]) == 0)
                ++p;
            if (p == m)
                return std::nullopt;
            std::swap(a[p], a[c]);
            std::swap(b[p], b[c]);
            for (int r = 0 ; r < m ; ++r) {
                if (r == c || sgn(a[r][c]) == 0)
                    continue;
                Rational f = a[r][c] / a[c][c];
                for (int j = c ; j < m ; ++j)
                    a[r][j] -= f * a[c][j];
                b[r] -= f * b[c];
            }
        }
        for (int r = 0 ; r < m ; ++r)
            b[r] /= a[r][r];
        return b;
    }

    /// Oracle for tiny bounded LPs with full row rank: best basic feasible solution.
    auto vertex_enumeration(const RationalLp & lp) -> optional<Rational>
    {
        int n = lp.num_variables(), m = lp.num_rows();
        optional<Rational> best;
        vector<int> chosen(m);
        auto visit = [&] (auto & self, int start, int depth) -> void {
            if (depth == m) {
                vector<vector<Rational>> a(m, vector<Rational>(m));
                vector<Rational> b(m);
                for (int i = 0 ; i < m ; ++i) {
                    b[i] = lp.rows()[i].rhs;
                    for (auto & [j, c] : lp.rows()[i].coefficients)
                        for (int q = 0 ; q < m ; ++q)
                            if (chosen[q] == j)
                                a[i][q] = c;
                }
                auto x = solve_square(a, b);
                if (! x)
                    return;
                vector<Rational> full(n);
                for (int q = 0 ; q < m ; ++q)
                    full[chosen[q]] = (*x)[q];
                if (! is_feasible_point(lp, full))
                    return;
                auto value = objective_value(lp, full);
                if (! best || value < *best)
                    best = value;
                return;
            }
            for (int j = start ; j < n ; ++j) {
                chosen[depth] = j;
                self(self, j + 1, depth + 1);
            }
        };
        visit(visit, 0, 0);
        return best;
    }
}

TEST_CASE("lp: small optimum")
{
    // min -x - y, x + y + s = 4, x + 3y + t = 6
    RationalLp lp;
    int x = lp.add_variable("x", -1), y = lp.add_variable("y", -1), s = lp.add_variable("s"), t = lp.add_variable("t");
    lp.add_equality({ { x, 1 }, { y, 1 }, { s, 1 } }, 4);
    lp.add_equality({ { x, 1 }, { y, 3 }, { t, 1 } }, 6);
    auto r = lp_solve_exact(lp);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.optimum == -4);
    CHECK(is_feasible_point(lp, r.solution));
}

TEST_CASE("lp: fractional optimum is exact")
{
    // min -3x - 2y, 3x + y + s = 5, x + 4y + t = 7 : x = 13/11, y = 16/11
    RationalLp lp;
    int x = lp.add_variable("x", -3), y = lp.add_variable("y", -2), s = lp.add_variable("s"), t = lp.add_variable("t");
    lp.add_equality({ { x, 3 }, { y, 1 }, { s, 1 } }, 5);
    lp.add_equality({ { x, 1 }, { y, 4 }, { t, 1 } }, 7);
    auto r = lp_solve_exact(lp);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.solution[x] == Rational(13, 11));
    CHECK(r.solution[y] == Rational(16, 11));
    CHECK(r.optimum == Rational(-71, 11));
}

TEST_CASE("lp: infeasible and unbounded")
{
    RationalLp a;
    int x = a.add_variable("x"), y = a.add_variable("y");
    a.add_equality({ { x, 1 }, { y, 1 } }, 1);
    a.add_equality({ { x, 1 }, { y, 1 } }, 2);
    CHECK(lp_solve_exact(a).status == LpStatus::Infeasible);

    RationalLp b;
    x = b.add_variable("x", -1);
    y = b.add_variable("y");
    b.add_equality({ { x, 1 }, { y, -1 } }, 0);
    CHECK(lp_solve_exact(b).status == LpStatus::Unbounded);

    RationalLp c;
    x = c.add_variable("x");
    c.add_equality({ { x, 1 } }, -1);
    CHECK(lp_solve_exact(c).status == LpStatus::Infeasible);
}

TEST_CASE("lp: redundant rows")
{
    RationalLp lp;
    int x = lp.add_variable("x", 1), y = lp.add_variable("y", 2), z = lp.add_variable("z", 3);
    lp.add_equality({ { x, 1 }, { y, 1 }, { z, 1 } }, 3);
    lp.add_equality({ { x, 2 }, { y, 2 }, { z, 2 } }, 6);
    lp.add_equality({ { x, 1 }, { y, -1 } }, 0);
    auto r = lp_solve_exact(lp);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.optimum == Rational(9, 2));
}

TEST_CASE("lp: agrees with vertex enumeration on random bounded programs")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coefficient(-3, 3), cost(-4, 4), rhs(0, 5);
    int checked = 0;
    for (int round = 0 ; round < 150 ; ++round) {
        int n = 3 + round % 4, m = 1 + round % 3;
        RationalLp lp;
        for (int j = 0 ; j < n ; ++j)
            lp.add_variable("x" + std::to_string(j), cost(rng));
        // a bounding row keeps the program bounded
        vector<std::pair<int, Rational>> bound;
        for (int j = 0 ; j < n ; ++j)
            bound.emplace_back(j, 1 + (j % 2));
        lp.add_equality(bound, 6);
        for (int i = 1 ; i < m ; ++i) {
            vector<std::pair<int, Rational>> row;
            for (int j = 0 ; j < n ; ++j)
                row.emplace_back(j, coefficient(rng));
            lp.add_equality(row, rhs(rng));
        }
        auto oracle = vertex_enumeration(lp);
        auto r = lp_solve_exact(lp);
        if (! oracle) {
            // either infeasible or rank deficient; the oracle cannot tell
            if (r.status == LpStatus::Optimal)
                CHECK(is_feasible_point(lp, r.solution));
            continue;
        }
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK(r.optimum == *oracle);
        ++checked;
    }
    CHECK(checked >= 50);
}

TEST_CASE("lp: certified and fallback routes")
{
    // 13/11 and 16/11 round cleanly from doubles: no exact pivots
    RationalLp easy;
    int x = easy.add_variable("x", -3), y = easy.add_variable("y", -2), s = easy.add_variable("s"), t = easy.add_variable("t");
    easy.add_equality({ { x, 3 }, { y, 1 }, { s, 1 } }, 5);
    easy.add_equality({ { x, 1 }, { y, 4 }, { t, 1 } }, 7);
    auto r = lp_solve_exact(easy);
    CHECK(r.statistics.guide_pivots > 0);
    CHECK(r.statistics.pivots == 0);

    // a denominator past 2^20 defeats the rounding; the exact simplex decides
    RationalLp hard;
    Rational big = Rational(1 << 22) + 1;
    x = hard.add_variable("x", -1);
    s = hard.add_variable("s");
    hard.add_equality({ { x, big }, { s, 1 } }, 1);
    hard.add_equality({ { x, 3 }, { s, big } }, 1);
    r = lp_solve_exact(hard);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.statistics.pivots > 0);
    Rational expected = (big - 1) / (big * big - 3);
    expected.canonicalize();
    CHECK(r.solution[x] == expected);

    // two parallel rows with different right-hand sides: a Farkas ray
    RationalLp clash;
    x = clash.add_variable("x");
    y = clash.add_variable("y");
    clash.add_equality({ { x, 1 }, { y, 2 } }, 1);
    clash.add_equality({ { x, 2 }, { y, 4 } }, 3);
    r = lp_solve_exact(clash);
    CHECK(r.status == LpStatus::Infeasible);
    CHECK(r.statistics.pivots == 0);
}

TEST_CASE("lp: dump format")
{
    RationalLp lp;
    int x = lp.add_variable("x", Rational(1, 2));
    lp.add_equality({ { x, 2 } }, 1);
    std::ostringstream out;
    dump_lp(lp, out);
    CHECK(out.str() == "lp 1 1\nvar 0 x 1/2\nrow 0: 2*x0 = 1\n");
}

TEST_CASE("sa: trivial unary instance")
{
    VcspInstance inst(1, 1);
    inst.add_term(CostFunction(1, 1, 0), { 1 });
    auto sa = build_sa(inst);
    auto r = lp_solve_exact(sa.lp);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.optimum == 0);
    CHECK(r.solution[sa.blocks[0].first_column] == 1);
    CHECK(solve_sa(inst).status == LpStatus::Optimal);
}

TEST_CASE("sa: K3 to K2 infeasible, P2 to K2 optimum zero")
{
    auto triangle = hom_instance(complete_graph(3), complete_graph(2));
    CHECK(solve_sa(triangle).status == LpStatus::Infeasible);
    CHECK(lp_solve_exact(build_sa(triangle).lp).status == LpStatus::Infeasible);

    auto path = hom_instance(path_graph(2), complete_graph(2));
    auto r = solve_sa(path);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.optimum == 0);
    auto full = lp_solve_exact(build_sa(path).lp);
    REQUIRE(full.status == LpStatus::Optimal);
    CHECK(full.optimum == 0);
}

TEST_CASE("sa: level checks")
{
    VcspInstance inst(2, 2);
    CHECK_THROWS_AS(build_sa(inst, 3, 2), InvalidInput);
    CHECK_THROWS_AS(build_sa(inst, 0, 2), InvalidInput);
    CHECK_NOTHROW(build_sa(inst, 1, 1));
}

TEST_CASE("sa: block layout")
{
    VcspInstance inst(2, 4);
    CostFunction unary(2, 1, 1), binary(2, 2, 2), quaternary(2, 4, 0);
    inst.add_term(unary, { 3 });
    inst.add_term(binary, { 2, 1 });
    inst.add_term(binary, { 1, 2 });
    inst.add_term(quaternary, { 1, 2, 3, 4 });
    auto sa = build_sa(inst);
    // 4 singles, 6 pairs, 4 triples, one separate block for the 4-ary term
    CHECK(sa.blocks.size() == 15);
    int merged = 0;
    for (auto & b : sa.blocks)
        if (b.scope == vector<int>{ 1, 2 }) {
            CHECK(b.terms == vector<int>{ 1, 2 });
            CHECK(b.cost[0] == ExtRational{ 4 });
            ++merged;
        }
    CHECK(merged == 1);
}

namespace
{
    auto random_instance(std::mt19937_64 & rng, int d, int n, int terms, int infinity_percent) -> VcspInstance
    {
        VcspInstance inst(d, n);
        std::uniform_int_distribution<int> var(1, n), arity(1, 3), value(0, 6), percent(0, 99);
        for (int i = 0 ; i < terms ; ++i) {
            int r = arity(rng);
            vector<int> scope;
            for (int p = 0 ; p < r ; ++p)
                scope.push_back(var(rng));
            CostFunction phi(d, r);
            for (std::size_t t = 0 ; t < phi.table_size() ; ++t)
                phi.set_index(t, percent(rng) < infinity_percent ? ExtRational::infinity() : ExtRational{ Rational(value(rng), 1 + value(rng) % 3) });
            inst.add_term(std::move(phi), scope);
        }
        return inst;
    }
}

TEST_CASE("sa: both routes agree, relaxation is sound, integral points are feasible")
{
    std::mt19937_64 rng(11);
    for (int round = 0 ; round < 40 ; ++round) {
        int d = 2 + round % 2, n = 2 + round % 3;
        auto inst = random_instance(rng, d, n, 2 + round % 4, round % 3 == 0 ? 40 : 10);
        auto sa = build_sa(inst);
        auto full = lp_solve_exact(sa.lp);
        auto fast = solve_sa(inst);
        REQUIRE(full.status == fast.status);
        auto opt = brute_force_opt(inst);
        if (full.status == LpStatus::Infeasible) {
            CHECK(opt.value.is_infinite());
            continue;
        }
        REQUIRE(full.status == LpStatus::Optimal);
        CHECK(full.optimum == fast.optimum);
        REQUIRE(opt.value.is_finite());
        CHECK(full.optimum <= opt.value.value());

        auto point = integral_point(sa, opt.assignment);
        CHECK(is_feasible_point(sa.lp, point));
        CHECK(objective_value(sa.lp, point) == opt.value.value());
    }
}

TEST_CASE("sa: certificate witness is optimal")
{
    auto inst = hom_instance(cycle_graph(6), complete_graph(2));
    auto r = solve_sa(inst);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.statistics.certified);
    REQUIRE(r.witness);
    CHECK(inst.cost(*r.witness) == ExtRational{ 0 });
}
