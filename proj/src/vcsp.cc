#include <homlab/error.hh>
#include <homlab/vcsp.hh>

#include <string>

using namespace homlab;

using std::span;
using std::string;
using std::to_string;
using std::vector;

homlab::CostFunction::CostFunction(int domain_size, int arity, const ExtRational & fill) :
    _domain_size(domain_size),
    _arity(arity)
{
    if (domain_size < 1 || arity < 1)
        throw InvalidInput("cost functions need a positive domain size and arity");
    std::size_t size = 1;
    for (int i = 0 ; i < arity ; ++i)
        size *= domain_size;
    _table.assign(size, fill);
}

auto homlab::CostFunction::index(span<const int> tuple) const -> std::size_t
{
    std::size_t result = 0;
    for (auto a : tuple)
        result = result * _domain_size + (a - 1);
    return result;
}

auto homlab::CostFunction::tuple(std::size_t index) const -> vector<int>
{
    vector<int> result(_arity);
    for (int i = _arity - 1 ; i >= 0 ; --i) {
        result[i] = static_cast<int>(index % _domain_size) + 1;
        index /= _domain_size;
    }
    return result;
}

auto homlab::CostFunction::feasible_tuples() const -> vector<vector<int>>
{
    vector<vector<int>> result;
    for (std::size_t i = 0 ; i < _table.size() ; ++i)
        if (_table[i].is_finite())
            result.push_back(tuple(i));
    return result;
}

auto homlab::pin_function(int domain_size, int value) -> CostFunction
{
    CostFunction result(domain_size, 1, ExtRational::infinity());
    result.set(vector<int>{ value }, 0);
    return result;
}

homlab::VcspInstance::VcspInstance(int domain_size, int num_variables) :
    _domain_size(domain_size),
    _num_variables(num_variables)
{
    if (domain_size < 1 || num_variables < 0)
        throw InvalidInput("a VCSP instance needs a positive domain size");
}

auto homlab::VcspInstance::add_term(CostFunction function, vector<int> scope) -> void
{
    if (function.domain_size() != _domain_size)
        throw InvalidInput("term domain size " + to_string(function.domain_size()) + " does not match instance domain size "
                + to_string(_domain_size));
    if (static_cast<int>(scope.size()) != function.arity())
        throw InvalidInput("term scope has " + to_string(scope.size()) + " variables for arity " + to_string(function.arity()));
    for (auto x : scope)
        if (x < 1 || x > _num_variables)
            throw InvalidInput("term variable " + to_string(x) + " outside 1.." + to_string(_num_variables));
    _terms.push_back(Term{ std::move(function), std::move(scope) });
}

auto homlab::VcspInstance::cost(span<const int> assignment) const -> ExtRational
{
    ExtRational total{ 0 };
    vector<int> values;
    for (auto & term : _terms) {
        values.clear();
        for (auto x : term.scope)
            values.push_back(assignment[x - 1]);
        total += term.function(values);
        if (total.is_infinite())
            break;
    }
    return total;
}

auto homlab::brute_force_opt(const VcspInstance & instance, std::uint64_t budget) -> OptimumResult
{
    int n = instance.num_variables(), d = instance.domain_size();

    std::uint64_t count = 1;
    for (int i = 0 ; i < n ; ++i) {
        count *= d;
        if (count > budget)
            throw BudgetExceeded("brute force needs " + to_string(d) + "^" + to_string(n) + " assignments, budget is "
                    + to_string(budget));
    }

    OptimumResult best{ ExtRational::infinity(), Assignment(n, 1) };
    Assignment current(n, 1);
    while (true) {
        auto value = instance.cost(current);
        if (value < best.value) {
            best.value = value;
            best.assignment = current;
        }

        int i = n - 1;
        while (i >= 0 && current[i] == d)
            current[i--] = 1;
        if (i < 0)
            break;
        ++current[i];
    }
    return best;
}
