#include <homlab/error.hh>
#include <homlab/sherali_adams.hh>

#include <algorithm>
#include <bit>
#include <map>
#include <string>

using namespace homlab;

using std::map;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    struct Link
    {
        int from, to;
        int projection;   // index into Structure::projections
    };

    /// Blocks without terms leave cost empty, meaning zero everywhere.
    struct Structure
    {
        int domain_size;
        vector<SaBlock> blocks;
        vector<std::size_t> entries;
        vector<Link> links;
        vector<vector<int>> projections;   // entry of `from` -> entry of `to`

        auto cost(int b, std::size_t t) const -> ExtRational
        {
            return blocks[b].cost.empty() ? ExtRational{ 0 } : blocks[b].cost[t];
        }

        auto projection(const Link & link) const -> const vector<int> &
        {
            return projections[link.projection];
        }
    };

    auto power(int base, std::size_t exponent) -> std::size_t
    {
        std::size_t result = 1;
        for (std::size_t i = 0 ; i < exponent ; ++i)
            result *= base;
        return result;
    }

    /// Digits of entry t, one per scope position, values 1..D.
    auto decode(std::size_t t, int domain_size, std::size_t length, vector<int> & digits) -> void
    {
        digits.resize(length);
        for (std::size_t p = length ; p-- > 0 ; ) {
            digits[p] = static_cast<int>(t % domain_size) + 1;
            t /= domain_size;
        }
    }

    auto for_each_combination(int n, int size, auto && callback) -> void
    {
        vector<int> chosen(size);
        for (int i = 0 ; i < size ; ++i)
            chosen[i] = i + 1;
        if (size > n)
            return;
        while (true) {
            callback(chosen);
            int i = size - 1;
            while (i >= 0 && chosen[i] == n - size + i + 1)
                --i;
            if (i < 0)
                return;
            ++chosen[i];
            for (int j = i + 1 ; j < size ; ++j)
                chosen[j] = chosen[j - 1] + 1;
        }
    }

    /// Depends only on the scope size and which positions are kept.
    auto make_projection(int size, unsigned mask, int domain_size) -> vector<int>
    {
        vector<int> positions;
        for (int p = 0 ; p < size ; ++p)
            if (mask & (1u << p))
                positions.push_back(p);

        std::size_t entries = power(domain_size, size);
        vector<int> result(entries);
        vector<int> digits;
        for (std::size_t t = 0 ; t < entries ; ++t) {
            decode(t, domain_size, size, digits);
            int s = 0;
            for (auto p : positions)
                s = s * domain_size + digits[p] - 1;
            result[t] = s;
        }
        return result;
    }

    auto make_structure(const VcspInstance & instance, int k, int l) -> Structure
    {
        if (k < 1 || k > l)
            throw InvalidInput("SA levels need 0 < k <= l, got k=" + to_string(k) + " l=" + to_string(l));

        int d = instance.domain_size(), n = instance.num_variables();
        Structure result{ d, { }, { }, { }, { } };
        map<vector<int>, int> block_of_set;
        map<std::pair<int, unsigned>, int> projection_of;

        auto add_block = [&] (vector<int> scope) {
            result.entries.push_back(power(d, scope.size()));
            result.blocks.push_back(SaBlock{ std::move(scope), { }, { }, -1 });
            return static_cast<int>(result.blocks.size()) - 1;
        };

        for (int size = 1 ; size <= std::min(l, n) ; ++size)
            for_each_combination(n, size, [&] (const vector<int> & scope) {
                block_of_set.emplace(scope, add_block(scope));
            });

        vector<int> digits, tuple;
        for (std::size_t i = 0 ; i < instance.terms().size() ; ++i) {
            auto & term = instance.terms()[i];
            vector<int> scope = term.scope;
            std::sort(scope.begin(), scope.end());
            scope.erase(std::unique(scope.begin(), scope.end()), scope.end());

            int b = (static_cast<int>(scope.size()) <= k) ? block_of_set.at(scope) : add_block(scope);
            auto & block = result.blocks[b];
            block.terms.push_back(static_cast<int>(i));
            if (block.cost.empty())
                block.cost.assign(result.entries[b], ExtRational{ 0 });

            vector<std::size_t> positions;
            for (auto x : term.scope)
                positions.push_back(std::lower_bound(scope.begin(), scope.end(), x) - scope.begin());
            tuple.resize(positions.size());
            for (std::size_t t = 0 ; t < block.cost.size() ; ++t) {
                decode(t, d, scope.size(), digits);
                for (std::size_t p = 0 ; p < positions.size() ; ++p)
                    tuple[p] = digits[positions[p]];
                block.cost[t] += term.function(tuple);
            }
        }

        for (std::size_t i = 0 ; i < result.blocks.size() ; ++i) {
            auto & scope = result.blocks[i].scope;
            int size = static_cast<int>(scope.size());
            for (unsigned mask = 1 ; mask < (1u << size) ; ++mask) {
                if (std::popcount(mask) > k)
                    continue;
                vector<int> sub_scope;
                for (int p = 0 ; p < size ; ++p)
                    if (mask & (1u << p))
                        sub_scope.push_back(scope[p]);
                int j = block_of_set.at(sub_scope);
                if (j == static_cast<int>(i))
                    continue;
                auto [it, fresh] = projection_of.emplace(std::pair{ size, mask }, static_cast<int>(result.projections.size()));
                if (fresh)
                    result.projections.push_back(make_projection(size, mask, d));
                result.links.push_back(Link{ static_cast<int>(i), j, it->second });
            }
        }
        return result;
    }

    auto entry_name(const SaBlock & block, std::size_t t, int domain_size) -> string
    {
        vector<int> digits;
        decode(t, domain_size, block.scope.size(), digits);
        string result = "L{";
        for (std::size_t p = 0 ; p < block.scope.size() ; ++p)
            result += (p ? "," : "") + to_string(block.scope[p]);
        result += "}";
        if (! block.terms.empty()) {
            result += "#";
            for (std::size_t p = 0 ; p < block.terms.size() ; ++p)
                result += (p ? "+" : "") + to_string(block.terms[p] + 1);
        }
        result += "(";
        for (std::size_t p = 0 ; p < digits.size() ; ++p)
            result += (p ? "," : "") + to_string(digits[p]);
        return result + ")";
    }

    auto entry_of(const SaBlock & block, const Assignment & assignment, int domain_size) -> std::size_t
    {
        std::size_t t = 0;
        for (auto x : block.scope)
            t = t * domain_size + assignment[x - 1] - 1;
        return t;
    }
}

auto homlab::build_sa(const VcspInstance & instance, int k, int l) -> SaLp
{
    auto structure = make_structure(instance, k, l);
    SaLp result;
    result.domain_size = structure.domain_size;
    result.k = k;
    result.l = l;
    int d = structure.domain_size;

    for (std::size_t b = 0 ; b < structure.blocks.size() ; ++b)
        if (structure.blocks[b].cost.empty())
            structure.blocks[b].cost.assign(structure.entries[b], ExtRational{ 0 });

    for (auto & block : structure.blocks) {
        block.first_column = result.lp.num_variables();
        for (std::size_t t = 0 ; t < block.cost.size() ; ++t)
            result.lp.add_variable(entry_name(block, t, d), block.cost[t].is_finite() ? block.cost[t].value() : Rational(0));
    }

    for (auto & block : structure.blocks) {
        vector<std::pair<int, Rational>> row;
        for (std::size_t t = 0 ; t < block.cost.size() ; ++t)
            row.emplace_back(block.first_column + static_cast<int>(t), 1);
        result.lp.add_equality(std::move(row), 1);
    }

    for (auto & link : structure.links) {
        auto & from = structure.blocks[link.from];
        auto & to = structure.blocks[link.to];
        vector<vector<std::pair<int, Rational>>> rows(to.cost.size());
        for (std::size_t t = 0 ; t < from.cost.size() ; ++t)
            rows[structure.projection(link)[t]].emplace_back(from.first_column + static_cast<int>(t), 1);
        for (std::size_t s = 0 ; s < to.cost.size() ; ++s) {
            rows[s].emplace_back(to.first_column + static_cast<int>(s), -1);
            result.lp.add_equality(std::move(rows[s]), 0);
        }
    }

    for (auto & block : structure.blocks)
        for (std::size_t t = 0 ; t < block.cost.size() ; ++t)
            if (block.cost[t].is_infinite())
                result.lp.add_equality({ { block.first_column + static_cast<int>(t), 1 } }, 0);

    result.blocks = std::move(structure.blocks);
    return result;
}

auto homlab::integral_point(const SaLp & sa, const Assignment & assignment) -> vector<Rational>
{
    vector<Rational> result(sa.lp.num_variables());
    for (auto & block : sa.blocks)
        result[block.first_column + entry_of(block, assignment, sa.domain_size)] = 1;
    return result;
}

namespace
{
    /// Removes entries that are zero in every feasible point. Returns false if a
    /// block loses all of its entries.
    auto propagate(const Structure & structure, vector<vector<char>> & alive, int & sweeps) -> bool
    {
        vector<int> support;
        bool changed = true;
        while (changed) {
            changed = false;
            ++sweeps;
            for (auto & link : structure.links) {
                auto & from = alive[link.from];
                auto & to = alive[link.to];
                auto & projection = structure.projection(link);
                support.assign(to.size(), 0);
                for (std::size_t t = 0 ; t < from.size() ; ++t) {
                    if (! from[t])
                        continue;
                    if (! to[projection[t]]) {
                        from[t] = 0;
                        changed = true;
                    }
                    else
                        ++support[projection[t]];
                }
                for (std::size_t s = 0 ; s < to.size() ; ++s)
                    if (to[s] && support[s] == 0) {
                        to[s] = 0;
                        changed = true;
                    }
            }
            for (auto & a : alive)
                if (std::find(a.begin(), a.end(), 1) == a.end())
                    return false;
        }
        return true;
    }

    /// Backtracking for an assignment whose labeling is alive in every block.
    class CertificateSearch
    {
        private:
            const Structure & _structure;
            const vector<vector<char>> & _alive;
            vector<vector<int>> _closing;   // blocks whose largest variable is x
            Assignment _assignment;
            std::uint64_t _budget, _nodes = 0;

            auto search(int x) -> bool
            {
                int n = static_cast<int>(_assignment.size());
                if (x > n)
                    return true;
                for (int a = 1 ; a <= _structure.domain_size ; ++a) {
                    if (++_nodes > _budget)
                        throw BudgetExceeded("certificate");
                    _assignment[x - 1] = a;
                    bool ok = true;
                    for (auto b : _closing[x - 1])
                        if (! _alive[b][entry_of(_structure.blocks[b], _assignment, _structure.domain_size)]) {
                            ok = false;
                            break;
                        }
                    if (ok && search(x + 1))
                        return true;
                }
                _assignment[x - 1] = 1;
                return false;
            }

        public:
            CertificateSearch(const Structure & structure, const vector<vector<char>> & alive, int n, std::uint64_t budget) :
                _structure(structure),
                _alive(alive),
                _closing(n),
                _assignment(n, 1),
                _budget(budget)
            {
                for (std::size_t b = 0 ; b < structure.blocks.size() ; ++b)
                    _closing[structure.blocks[b].scope.back() - 1].push_back(static_cast<int>(b));
            }

            /// An assignment, or nullopt if none exists or the budget ran out.
            auto run() -> std::optional<Assignment>
            {
                try {
                    if (search(1))
                        return _assignment;
                }
                catch (const BudgetExceeded &) {
                }
                return std::nullopt;
            }
    };
}

auto homlab::solve_sa(const VcspInstance & instance, int k, int l, const SaOptions & options) -> SaResult
{
    auto structure = make_structure(instance, k, l);
    SaResult result;

    vector<vector<char>> alive;
    bool all_zero = true;
    for (std::size_t b = 0 ; b < structure.blocks.size() ; ++b) {
        alive.emplace_back(structure.entries[b], 1);
        result.statistics.entries += structure.entries[b];
        for (std::size_t t = 0 ; t < structure.blocks[b].cost.size() ; ++t)
            alive.back()[t] = structure.blocks[b].cost[t].is_finite();
    }

    if (! propagate(structure, alive, result.statistics.propagation_sweeps)) {
        result.status = LpStatus::Infeasible;
        result.statistics.certified = true;
        return result;
    }

    for (std::size_t b = 0 ; b < structure.blocks.size() ; ++b)
        for (std::size_t t = 0 ; t < alive[b].size() ; ++t)
            if (alive[b][t]) {
                ++result.statistics.live_entries;
                if (! structure.blocks[b].cost.empty() && sgn(structure.blocks[b].cost[t].value()) != 0)
                    all_zero = false;
            }

    if (all_zero) {
        CertificateSearch search(structure, alive, instance.num_variables(), options.certificate_budget);
        if (auto witness = search.run()) {
            result.status = LpStatus::Optimal;
            result.optimum = 0;
            result.witness = std::move(witness);
            result.statistics.certified = true;
            return result;
        }
    }

    RationalLp lp;
    vector<vector<int>> column(structure.blocks.size());
    for (std::size_t b = 0 ; b < structure.blocks.size() ; ++b) {
        column[b].assign(alive[b].size(), -1);
        for (std::size_t t = 0 ; t < alive[b].size() ; ++t)
            if (alive[b][t])
                column[b][t] = lp.add_variable("", structure.cost(static_cast<int>(b), t).value());
    }
    for (std::size_t b = 0 ; b < structure.blocks.size() ; ++b) {
        vector<std::pair<int, Rational>> row;
        for (auto c : column[b])
            if (c >= 0)
                row.emplace_back(c, 1);
        lp.add_equality(std::move(row), 1);
    }
    for (auto & link : structure.links) {
        auto & to = column[link.to];
        vector<vector<std::pair<int, Rational>>> rows(to.size());
        for (std::size_t t = 0 ; t < column[link.from].size() ; ++t)
            if (column[link.from][t] >= 0)
                rows[structure.projection(link)[t]].emplace_back(column[link.from][t], 1);
        for (std::size_t s = 0 ; s < to.size() ; ++s)
            if (to[s] >= 0) {
                rows[s].emplace_back(to[s], -1);
                lp.add_equality(std::move(rows[s]), 0);
            }
    }

    auto lp_result = lp_solve_exact(lp, options.lp);
    result.statistics.lp = lp_result.statistics;
    result.status = lp_result.status;
    if (lp_result.status == LpStatus::Optimal)
        result.optimum = lp_result.optimum;
    return result;
}
