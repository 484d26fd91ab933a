#include <homlab/error.hh>
#include <homlab/operation.hh>

#include <algorithm>

using namespace homlab;

using std::to_string;
using std::array;
using std::optional;
using std::string;
using std::vector;

homlab::OperationTable::OperationTable(int domain_size) :
    _domain_size(domain_size)
{
    if (domain_size < 1 || domain_size > 255)
        throw InvalidInput("operation tables need a domain size in 1..255, got " + to_string(domain_size));
    _table.resize(static_cast<std::size_t>(domain_size) * domain_size * domain_size);
    for (int a = 1 ; a <= domain_size ; ++a)
        for (int b = 1 ; b <= domain_size ; ++b)
            for (int c = 1 ; c <= domain_size ; ++c)
                set(a, b, c, a);
}

auto homlab::is_majority(const OperationTable & f) -> bool
{
    for (int a = 1 ; a <= f.domain_size() ; ++a)
        for (int b = 1 ; b <= f.domain_size() ; ++b)
            if (f(a, a, b) != a || f(a, b, a) != a || f(b, a, a) != a)
                return false;
    return true;
}

auto homlab::is_polymorphism(const OperationTable & f, const Relation & relation) -> bool
{
    auto & r = relation.tuples;
    for (auto & t1 : r)
        for (auto & t2 : r)
            for (auto & t3 : r) {
                Pair image{ f(t1.first, t2.first, t3.first), f(t1.second, t2.second, t3.second) };
                if (! std::binary_search(r.begin(), r.end(), image))
                    return false;
            }
    return true;
}

homlab::Triple::Triple(int domain_size) :
    f{ OperationTable(domain_size), OperationTable(domain_size), OperationTable(domain_size) }
{
    for (int a = 1 ; a <= domain_size ; ++a)
        for (int b = 1 ; b <= domain_size ; ++b)
            for (int c = 1 ; c <= domain_size ; ++c)
                set(a, b, c, { a, b, c });
}

auto homlab::all_coordinate_permutations() -> array<CoordinatePermutation, 6>
{
    return { CoordinatePermutation{ { 1, 2, 3 } }, CoordinatePermutation{ { 1, 3, 2 } }, CoordinatePermutation{ { 2, 1, 3 } },
        CoordinatePermutation{ { 2, 3, 1 } }, CoordinatePermutation{ { 3, 1, 2 } }, CoordinatePermutation{ { 3, 2, 1 } } };
}

auto homlab::TripleViolation::describe() const -> string
{
    auto show = [] (const array<int, 3> & a) {
        return "(" + to_string(a[0]) + "," + to_string(a[1]) + "," + to_string(a[2]) + ")";
    };
    switch (kind) {
        case Kind::NotMajority:
            return "f1 is not majority at " + show(arguments);
        case Kind::NotPermutation:
            return "outputs at " + show(arguments) + " do not rearrange the arguments";
        case Kind::RelationBroken:
            return "relation " + relation + ": outputs on heads " + show(arguments) + " and tails " + show(tail_arguments)
                + " do not rearrange the tuples";
    }
    return "unknown violation";
}

namespace
{
    auto same_multiset(array<int, 3> a, array<int, 3> b) -> bool
    {
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }
}

auto homlab::find_triple_violation(const CrispLanguage & language, const Triple & triple) -> optional<TripleViolation>
{
    int d = triple.domain_size();
    if (d != language.domain_size())
        throw InvalidInput("triple has domain size " + to_string(d) + " but the language has " + to_string(language.domain_size()));

    auto & f1 = triple.f[0];
    for (int a = 1 ; a <= d ; ++a)
        for (int b = 1 ; b <= d ; ++b)
            for (auto args : { array<int, 3>{ a, a, b }, array<int, 3>{ a, b, a }, array<int, 3>{ b, a, a } })
                if (f1(args[0], args[1], args[2]) != a)
                    return TripleViolation{ TripleViolation::Kind::NotMajority, args, { }, { } };

    for (int a = 1 ; a <= d ; ++a)
        for (int b = 1 ; b <= d ; ++b)
            for (int c = 1 ; c <= d ; ++c)
                if (! same_multiset(triple.apply(a, b, c), { a, b, c }))
                    return TripleViolation{ TripleViolation::Kind::NotPermutation, { a, b, c }, { }, { } };

    for (auto & relation : language.relations()) {
        auto & r = relation.tuples;
        for (auto & t1 : r)
            for (auto & t2 : r)
                for (auto & t3 : r) {
                    auto heads = triple.apply(t1.first, t2.first, t3.first);
                    auto tails = triple.apply(t1.second, t2.second, t3.second);
                    array<Pair, 3> out{ Pair{ heads[0], tails[0] }, Pair{ heads[1], tails[1] }, Pair{ heads[2], tails[2] } };
                    array<Pair, 3> in{ t1, t2, t3 };
                    std::sort(out.begin(), out.end());
                    std::sort(in.begin(), in.end());
                    if (out != in)
                        return TripleViolation{ TripleViolation::Kind::RelationBroken, { t1.first, t2.first, t3.first },
                            { t1.second, t2.second, t3.second }, relation.name };
                }
    }
    return std::nullopt;
}

auto homlab::verify_persistent_triple(const CrispLanguage & language, const Triple & triple) -> bool
{
    return ! find_triple_violation(language, triple);
}
