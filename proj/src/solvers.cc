#include <homlab/error.hh>
#include <homlab/solvers.hh>

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

using namespace homlab;

using std::optional;
using std::to_string;
using std::vector;

auto homlab::SolveStatistics::absorb(const SaStatistics & sa) -> void
{
    ++sa_solves;
    lp_pivots += sa.lp.pivots;
    max_lp_rows = std::max(max_lp_rows, sa.lp.reduced_rows);
    max_lp_columns = std::max(max_lp_columns, sa.lp.reduced_columns);
}

namespace
{
    auto elapsed_millis(std::chrono::steady_clock::time_point start) -> double
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }

    auto check_power_budget(int base, int exponent, std::uint64_t budget) -> void
    {
        std::uint64_t total = 1;
        for (int i = 0 ; i < exponent ; ++i) {
            if (base != 0 && total > budget / static_cast<std::uint64_t>(base))
                throw BudgetExceeded(to_string(base) + "^" + to_string(exponent) + " maps exceed the budget of " + to_string(budget));
            total *= static_cast<std::uint64_t>(base);
        }
        if (total > budget)
            throw BudgetExceeded(to_string(base) + "^" + to_string(exponent) + " maps exceed the budget of " + to_string(budget));
    }
}

auto homlab::unif_solve(const VcspInstance & instance, const SaOptions & options) -> UnifResult
{
    UnifResult result;
    auto first = solve_sa(instance, 2, 3, options);
    result.statistics.absorb(first.statistics);
    if (first.status != LpStatus::Optimal) {
        result.assignment = Assignment(instance.num_variables(), 1);
        return result;
    }

    Rational target = first.optimum;
    VcspInstance pinned = instance;
    int d = instance.domain_size();
    Assignment assignment(instance.num_variables(), 0);
    for (int x = 1 ; x <= instance.num_variables() ; ++x) {
        bool fixed = false;
        for (int a = 1 ; a <= d && ! fixed ; ++a) {
            VcspInstance attempt = pinned;
            attempt.add_term(pin_function(d, a), { x });
            auto r = solve_sa(attempt, 2, 3, options);
            result.statistics.absorb(r.statistics);
            if (r.status == LpStatus::Optimal && r.optimum == target) {
                pinned = std::move(attempt);
                assignment[x - 1] = a;
                fixed = true;
            }
        }
        if (! fixed)
            return result;
    }

    result.cost = instance.cost(assignment);
    if (result.cost != ExtRational{ target })
        throw std::logic_error("self-reduction ended on an assignment of cost " + to_string(result.cost)
                + " but the relaxation optimum is " + to_string(ExtRational{ target }));
    result.assignment = std::move(assignment);
    return result;
}

namespace
{
    /// Proper colorings of g into exactly k colors with vertex 1 colored 1, in
    /// lexicographic order. The callback returns false to stop.
    auto for_each_coloring(const Graph & g, int k, const std::function<auto (const vector<int> &) -> bool> & visit) -> void
    {
        int n = g.size();
        vector<int> colors(n, 0);
        vector<int> used(k + 1, 0);
        int distinct = 0;
        bool stop = false;
        std::function<void (int)> go = [&] (int v) {
            if (stop)
                return;
            if (v > n) {
                if (distinct == k && ! visit(colors))
                    stop = true;
                return;
            }
            // the remaining vertices must still be able to reach k colors
            if (k - distinct > n - v + 1)
                return;
            int top = (v == 1) ? 1 : k;
            for (int c = 1 ; c <= top && ! stop ; ++c) {
                bool ok = true;
                for (auto w : g.neighbours(v))
                    if (w < v && colors[w - 1] == c) {
                        ok = false;
                        break;
                    }
                if (! ok)
                    continue;
                colors[v - 1] = c;
                if (used[c]++ == 0)
                    ++distinct;
                go(v + 1);
                if (--used[c] == 0)
                    --distinct;
                colors[v - 1] = 0;
            }
        };
        go(1);
    }

    /// Maps from the vertices of g to [k] under which every arc has a target arc
    /// with the same colors, in lexicographic order.
    auto for_each_compatible_map(const DiGraph & g, int k, const vector<vector<char>> & allowed,
            const std::function<auto (const vector<int> &) -> bool> & visit) -> void
    {
        int n = g.size();
        vector<vector<Edge>> closing(n + 1);   // arcs by their later endpoint
        for (auto [u, v] : g.arcs())
            closing[std::max(u, v)].emplace_back(u, v);
        vector<int> colors(n, 0);
        bool stop = false;
        std::function<void (int)> go = [&] (int v) {
            if (stop)
                return;
            if (v > n) {
                if (! visit(colors))
                    stop = true;
                return;
            }
            for (int c = 1 ; c <= k && ! stop ; ++c) {
                colors[v - 1] = c;
                bool ok = true;
                for (auto [a, b] : closing[v])
                    ok = ok && allowed[colors[a - 1]][colors[b - 1]];
                if (ok)
                    go(v + 1);
            }
            colors[v - 1] = 0;
        };
        go(1);
    }

    /// G without its isolated vertices, with eta carried over.
    struct Compacted
    {
        ValHomInstance instance;
        vector<Vertex> to_original;
    };

    auto compact(const ValHomInstance & instance) -> Compacted
    {
        auto & g = instance.source();
        vector<int> new_index(g.size() + 1, 0);
        vector<Vertex> to_original;
        for (auto [u, v] : g.arcs())
            for (auto w : { u, v })
                if (! new_index[w])
                    new_index[w] = 1;
        for (int v = 1 ; v <= g.size() ; ++v)
            if (new_index[v]) {
                to_original.push_back(v);
                new_index[v] = static_cast<int>(to_original.size());
            }

        vector<Edge> arcs;
        for (auto [u, v] : g.arcs())
            arcs.emplace_back(new_index[u], new_index[v]);
        DiGraph small(static_cast<int>(to_original.size()), arcs);
        ValHomInstance result(small, instance.target());
        auto & h = instance.target();
        for (std::size_t a = 0 ; a < g.arcs().size() ; ++a) {
            auto [u, v] = g.arcs()[a];
            for (std::size_t b = 0 ; b < h.arcs().size() ; ++b)
                result.set_eta({ new_index[u], new_index[v] }, h.arcs()[b], instance.eta(static_cast<int>(a), static_cast<int>(b)));
        }
        return { std::move(result), std::move(to_original) };
    }
}

auto homlab::valhom_solve(const ValHomInstance & instance, const optional<Coloring> & hint, const ValHomOptions & options) -> SolveReport
{
    auto start = std::chrono::steady_clock::now();
    auto & g = instance.source();
    auto & h = instance.target();
    auto h_graph = underlying_graph(h);

    SolveReport report;
    if (hint && (hint->size() != h.size() || ! is_proper(h_graph, *hint)))
        throw InvalidInput("coloring hint is not a proper coloring of the target's underlying graph");

    if (g.size() == 0) {
        report.value = ExtRational{ 0 };
        report.witness = vector<Vertex>{ };
        report.statistics.millis = elapsed_millis(start);
        return report;
    }
    if (h.size() == 0) {
        report.statistics.millis = elapsed_millis(start);
        return report;
    }

    auto compacted = compact(instance);
    auto & small = compacted.instance;
    auto finish = [&] (const optional<Assignment> & best) {
        if (best) {
            vector<Vertex> witness(g.size(), 1);
            for (std::size_t i = 0 ; i < best->size() ; ++i)
                witness[compacted.to_original[i] - 1] = (*best)[i];
            report.value = instance.cost(witness);
            report.witness = std::move(witness);
        }
        report.statistics.millis = elapsed_millis(start);
    };

    if (small.source().size() == 0) {
        report.statistics.colors = hint ? hint->num_colors() : 1;
        finish(Assignment{ });
        return report;
    }

    // Tries one target coloring; false if some subproblem got stuck.
    auto try_coloring = [&] (const vector<int> & target_colors, int k, optional<Assignment> & best, ExtRational & best_cost) -> bool {
        Coloring gamma_h(target_colors, k);
        vector<vector<char>> allowed(k + 1, vector<char>(k + 1, 0));
        for (auto [a, b] : h.arcs())
            allowed[gamma_h.color(a)][gamma_h.color(b)] = 1;

        bool complete = true;
        for_each_compatible_map(small.source(), k, allowed, [&] (const vector<int> & source_colors) {
            if (++report.statistics.subproblems > options.subproblem_budget)
                throw BudgetExceeded("valhom subproblem budget of " + to_string(options.subproblem_budget) + " exhausted");
            auto r = unif_solve(valhom_to_vcsp(small, source_colors, gamma_h), options.sa);
            report.statistics.sa_solves += r.statistics.sa_solves;
            report.statistics.lp_pivots += r.statistics.lp_pivots;
            report.statistics.max_lp_rows = std::max(report.statistics.max_lp_rows, r.statistics.max_lp_rows);
            report.statistics.max_lp_columns = std::max(report.statistics.max_lp_columns, r.statistics.max_lp_columns);
            if (! r.assignment) {
                complete = false;
                return false;
            }
            if (r.cost.is_finite() && (! best || r.cost < best_cost)) {
                best = r.assignment;
                best_cost = r.cost;
            }
            return true;
        });
        return complete;
    };

    if (hint) {
        optional<Assignment> best;
        ExtRational best_cost = ExtRational::infinity();
        if (! try_coloring(hint->colors(), hint->num_colors(), best, best_cost))
            throw InvalidInput("coloring hint admits a subproblem the self-reduction cannot solve");
        report.statistics.colors = hint->num_colors();
        finish(best);
        return report;
    }

    for (int k = 1 ; k <= h.size() ; ++k) {
        bool accepted = false;
        optional<Assignment> accepted_best;
        for_each_coloring(h_graph, k, [&] (const vector<int> & target_colors) {
            optional<Assignment> best;
            ExtRational best_cost = ExtRational::infinity();
            if (! try_coloring(target_colors, k, best, best_cost))
                return true;
            accepted = true;
            accepted_best = std::move(best);
            return false;
        });
        if (accepted) {
            report.statistics.colors = k;
            finish(accepted_best);
            return report;
        }
    }
    throw std::logic_error("no target coloring with at most |V(H)| colors was accepted");
}

auto homlab::brute_force_valhom(const ValHomInstance & instance, std::uint64_t budget) -> SolveReport
{
    auto start = std::chrono::steady_clock::now();
    int n = instance.source().size(), h = instance.target().size();
    check_power_budget(h, n, budget);

    SolveReport report;
    if (n == 0) {
        report.value = ExtRational{ 0 };
        report.witness = vector<Vertex>{ };
    }
    else if (h > 0) {
        vector<Vertex> map(n, 1);
        while (true) {
            auto cost = instance.cost(map);
            if (cost < report.value) {
                report.value = cost;
                report.witness = map;
            }
            int i = n - 1;
            while (i >= 0 && map[i] == h)
                map[i--] = 1;
            if (i < 0)
                break;
            ++map[i];
        }
    }
    report.statistics.millis = elapsed_millis(start);
    return report;
}

auto homlab::is_homomorphism(const Graph & g, const Graph & h, const vector<Vertex> & map) -> bool
{
    if (static_cast<int>(map.size()) != g.size())
        return false;
    for (auto v : map)
        if (v < 1 || v > h.size())
            return false;
    for (auto [u, v] : g.edges())
        if (! h.adjacent(map[u - 1], map[v - 1]))
            return false;
    return true;
}

auto homlab::is_homomorphism(const DiGraph & g, const DiGraph & h, const vector<Vertex> & map) -> bool
{
    if (static_cast<int>(map.size()) != g.size())
        return false;
    for (auto v : map)
        if (v < 1 || v > h.size())
            return false;
    for (auto [u, v] : g.arcs())
        if (! h.has_arc(map[u - 1], map[v - 1]))
            return false;
    return true;
}

namespace
{
    template <typename Fits_>
    auto backtrack_maps(int n, int h, const Fits_ & fits) -> optional<vector<Vertex>>
    {
        vector<Vertex> map(n, 0);
        std::function<auto (int) -> bool> go = [&] (int v) -> bool {
            if (v > n)
                return true;
            for (int a = 1 ; a <= h ; ++a) {
                map[v - 1] = a;
                if (fits(map, v) && go(v + 1))
                    return true;
            }
            map[v - 1] = 0;
            return false;
        };
        if (go(1))
            return map;
        return std::nullopt;
    }
}

auto homlab::brute_force_hom(const Graph & g, const Graph & h, std::uint64_t budget) -> optional<vector<Vertex>>
{
    check_power_budget(h.size(), g.size(), budget);
    return backtrack_maps(g.size(), h.size(), [&] (const vector<Vertex> & map, int v) {
        for (auto w : g.neighbours(v))
            if (w < v && ! h.adjacent(map[v - 1], map[w - 1]))
                return false;
        return true;
    });
}

auto homlab::brute_force_hom(const DiGraph & g, const DiGraph & h, std::uint64_t budget) -> optional<vector<Vertex>>
{
    check_power_budget(h.size(), g.size(), budget);
    vector<vector<Edge>> closing(g.size() + 1);
    for (auto [u, v] : g.arcs())
        closing[std::max(u, v)].emplace_back(u, v);
    return backtrack_maps(g.size(), h.size(), [&] (const vector<Vertex> & map, int v) {
        for (auto [a, b] : closing[v])
            if (! h.has_arc(map[a - 1], map[b - 1]))
                return false;
        return true;
    });
}
