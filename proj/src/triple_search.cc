#include <homlab/error.hh>
#include <homlab/triple_search.hh>

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>

using namespace homlab;

using std::array;
using std::map;
using std::pair;
using std::vector;

namespace
{
    using Output = array<int, 3>;

    struct Constraint
    {
        int x, y;
        array<std::uint8_t, 6> x_supports{ };   // per value of x, the allowed values of y
        array<std::uint8_t, 6> y_supports{ };
    };

    class Search
    {
        private:
            int _d;
            vector<int> _variable_of;                 // argument index -> variable, or -1
            vector<Output> _arguments;                // per variable
            vector<vector<Output>> _values;           // per variable
            vector<Constraint> _constraints;
            vector<vector<pair<int, bool>>> _incident;   // (constraint, variable is x)
            std::uint64_t _budget, _nodes = 0;

            auto argument_index(int a, int b, int c) const -> int
            {
                return ((a - 1) * _d + (b - 1)) * _d + (c - 1);
            }

            /// Removes unsupported values; false on a wipe-out.
            auto propagate(vector<std::uint8_t> & domain, vector<int> queue) const -> bool
            {
                vector<char> queued(domain.size(), 0);
                for (auto v : queue)
                    queued[v] = 1;
                while (! queue.empty()) {
                    int changed = queue.back();
                    queue.pop_back();
                    queued[changed] = 0;
                    for (auto [c, changed_is_x] : _incident[changed]) {
                        auto & con = _constraints[c];
                        int other = changed_is_x ? con.y : con.x;
                        auto & other_supports = changed_is_x ? con.y_supports : con.x_supports;
                        std::uint8_t kept = 0;
                        for (int value = 0 ; value < 6 ; ++value)
                            if ((domain[other] >> value & 1) && (other_supports[value] & domain[changed]))
                                kept |= static_cast<std::uint8_t>(1u << value);
                        if (kept != domain[other]) {
                            if (kept == 0)
                                return false;
                            domain[other] = kept;
                            if (! queued[other]) {
                                queued[other] = 1;
                                queue.push_back(other);
                            }
                        }
                    }
                }
                return true;
            }

            auto solve(vector<std::uint8_t> & domain) -> bool
            {
                if (++_nodes > _budget)
                    throw BudgetExceeded("triple search node budget of " + std::to_string(_budget) + " exhausted");

                int chosen = -1;
                for (std::size_t v = 0 ; v < domain.size() ; ++v)
                    if (std::popcount(domain[v]) > 1) {
                        chosen = static_cast<int>(v);
                        break;
                    }
                if (chosen < 0)
                    return true;

                for (int value = 0 ; value < 6 ; ++value) {
                    if (! (domain[chosen] >> value & 1))
                        continue;
                    auto saved = domain;
                    domain[chosen] = static_cast<std::uint8_t>(1u << value);
                    if (propagate(domain, { chosen }) && solve(domain))
                        return true;
                    domain = std::move(saved);
                }
                return false;
            }

        public:
            Search(const CrispLanguage & language, std::uint64_t budget) :
                _d(language.domain_size()),
                _variable_of(static_cast<std::size_t>(_d) * _d * _d, -1),
                _budget(budget)
            {
                auto permutations = all_coordinate_permutations();
                for (int a = 1 ; a <= _d ; ++a)
                    for (int b = 1 ; b <= _d ; ++b)
                        for (int c = 1 ; c <= _d ; ++c) {
                            if (a == b && b == c)
                                continue;
                            Output args{ a, b, c };
                            int repeated = (a == b || a == c) ? a : (b == c) ? b : 0;
                            vector<Output> values;
                            for (auto & pi : permutations) {
                                auto out = pi.apply(args);
                                if (repeated && out[0] != repeated)
                                    continue;
                                if (std::find(values.begin(), values.end(), out) == values.end())
                                    values.push_back(out);
                            }
                            _variable_of[argument_index(a, b, c)] = static_cast<int>(_arguments.size());
                            _arguments.push_back(args);
                            _values.push_back(std::move(values));
                        }
                _incident.resize(_arguments.size());

                map<pair<int, int>, int> constraint_of;
                for (auto & relation : language.relations()) {
                    auto & r = relation.tuples;
                    for (auto & t1 : r)
                        for (auto & t2 : r)
                            for (auto & t3 : r) {
                                int h = _variable_of[argument_index(t1.first, t2.first, t3.first)];
                                int t = _variable_of[argument_index(t1.second, t2.second, t3.second)];
                                // a constant side, or both sides on one variable, restricts nothing
                                if (h < 0 || t < 0 || h == t)
                                    continue;
                                add_constraint(h, t, constraint_of);
                            }
                }
            }

            auto add_constraint(int h, int t, map<pair<int, int>, int> & constraint_of) -> void
            {
                auto & hv = _values[h];
                auto & tv = _values[t];
                array<Pair, 3> wanted;
                for (int j = 0 ; j < 3 ; ++j)
                    wanted[j] = Pair{ _arguments[h][j], _arguments[t][j] };
                std::sort(wanted.begin(), wanted.end());

                array<std::uint8_t, 6> allowed{ };
                for (std::size_t i = 0 ; i < hv.size() ; ++i)
                    for (std::size_t j = 0 ; j < tv.size() ; ++j) {
                        array<Pair, 3> got{ Pair{ hv[i][0], tv[j][0] }, Pair{ hv[i][1], tv[j][1] }, Pair{ hv[i][2], tv[j][2] } };
                        std::sort(got.begin(), got.end());
                        if (got == wanted)
                            allowed[i] |= static_cast<std::uint8_t>(1u << j);
                    }

                int x = std::min(h, t), y = std::max(h, t);
                auto [it, fresh] = constraint_of.emplace(pair{ x, y }, static_cast<int>(_constraints.size()));
                if (fresh) {
                    Constraint con{ x, y, { }, { } };
                    con.x_supports.fill(0xff);
                    con.y_supports.fill(0xff);
                    _constraints.push_back(con);
                    _incident[x].emplace_back(it->second, true);
                    _incident[y].emplace_back(it->second, false);
                }
                auto & con = _constraints[it->second];

                // transpose into the (x, y) orientation and intersect
                array<std::uint8_t, 6> xy{ }, yx{ };
                for (int i = 0 ; i < 6 ; ++i)
                    for (int j = 0 ; j < 6 ; ++j)
                        if (allowed[i] >> j & 1) {
                            int xi = (x == h) ? i : j, yj = (x == h) ? j : i;
                            xy[xi] |= static_cast<std::uint8_t>(1u << yj);
                            yx[yj] |= static_cast<std::uint8_t>(1u << xi);
                        }
                for (int i = 0 ; i < 6 ; ++i) {
                    con.x_supports[i] &= xy[i];
                    con.y_supports[i] &= yx[i];
                }
            }

            auto run(TripleSearchResult & result) -> void
            {
                result.variables = static_cast<int>(_arguments.size());
                result.constraints = static_cast<int>(_constraints.size());

                vector<std::uint8_t> domain(_arguments.size());
                vector<int> all(_arguments.size());
                for (std::size_t v = 0 ; v < _arguments.size() ; ++v) {
                    domain[v] = static_cast<std::uint8_t>((1u << _values[v].size()) - 1);
                    all[v] = static_cast<int>(v);
                }

                bool found = propagate(domain, all) && solve(domain);
                result.nodes = _nodes;
                if (! found)
                    return;

                Triple triple(_d);
                for (std::size_t v = 0 ; v < _arguments.size() ; ++v) {
                    auto & args = _arguments[v];
                    triple.set(args[0], args[1], args[2], _values[v][std::countr_zero(domain[v])]);
                }
                result.triple = std::move(triple);
            }
    };
}

auto homlab::search_triple(const CrispLanguage & language, std::uint64_t budget) -> TripleSearchResult
{
    if (language.domain_size() > 255)
        throw InvalidInput("triple search supports at most 255 domain values");

    TripleSearchResult result;
    Search search(language, budget);
    search.run(result);
    if (result.triple && ! verify_persistent_triple(language, *result.triple))
        throw std::logic_error("triple search produced a triple that fails verification");
    return result;
}
