#include <homlab/error.hh>
#include <homlab/language.hh>

#include <algorithm>

using namespace homlab;

using std::string;
using std::to_string;
using std::vector;

homlab::CrispLanguage::CrispLanguage(int domain_size) :
    _domain_size(domain_size)
{
    if (domain_size < 1)
        throw InvalidInput("a language needs a positive domain size");
}

auto homlab::CrispLanguage::add_relation(string name, vector<Pair> tuples) -> void
{
    for (auto [a, b] : tuples)
        if (a < 1 || a > _domain_size || b < 1 || b > _domain_size)
            throw InvalidInput("relation " + name + " has tuple (" + to_string(a) + "," + to_string(b)
                    + ") outside domain 1.." + to_string(_domain_size));
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    _relations.push_back(Relation{ std::move(name), std::move(tuples) });
}

auto homlab::crisp_language_of_coloring(const Graph & g, const Coloring & coloring) -> CrispLanguage
{
    if (! is_proper(g, coloring))
        throw InvalidInput("coloring is not proper");

    int k = coloring.num_colors();
    vector<vector<Pair>> relations(static_cast<std::size_t>(k) * k);
    for (auto [u, v] : g.edges()) {
        relations[(coloring.color(u) - 1) * k + coloring.color(v) - 1].emplace_back(u, v);
        relations[(coloring.color(v) - 1) * k + coloring.color(u) - 1].emplace_back(v, u);
    }

    CrispLanguage result(std::max(g.size(), 1));
    for (int i = 1 ; i <= k ; ++i)
        for (int j = 1 ; j <= k ; ++j)
            result.add_relation("R_" + to_string(i) + "_" + to_string(j), relations[(i - 1) * k + j - 1]);
    return result;
}

auto homlab::equality_relation(int domain_size) -> Relation
{
    Relation result{ "eq", { } };
    for (int a = 1 ; a <= domain_size ; ++a)
        result.tuples.emplace_back(a, a);
    return result;
}

homlab::OddCycleFamily::OddCycleFamily(int k_) :
    k(k_)
{
    if (k < 1)
        throw InvalidInput("odd cycle parameter must be at least 1");
    for (int v = 1 ; v <= 2 * k + 1 ; ++v) {
        if (v > 1)
            all.push_back(v);
        if (v % 2 == 1)
            odd.push_back(v);
        if (v % 2 == 0 || v == 1)
            even.push_back(v);
    }
}

auto homlab::odd_cycle_set_name(int which) -> string
{
    static const char * names[] = { "S", "A", "B" };
    return names[which];
}

auto homlab::odd_cycle_language(int k) -> CrispLanguage
{
    OddCycleFamily family(k);
    Graph cycle = cycle_graph(family.cycle_length());
    auto sets = family.sets();

    CrispLanguage result(family.cycle_length());
    for (int a = 0 ; a < 3 ; ++a)
        for (int b = a ; b < 3 ; ++b) {
            vector<Pair> tuples;
            for (auto u : *sets[a])
                for (auto v : *sets[b])
                    if (cycle.adjacent(u, v))
                        tuples.emplace_back(u, v);
            result.add_relation("R_" + odd_cycle_set_name(a) + odd_cycle_set_name(b), std::move(tuples));
        }
    for (int a = 0 ; a < 3 ; ++a) {
        vector<Pair> diagonal;
        for (auto u : *sets[a])
            diagonal.emplace_back(u, u);
        result.add_relation("U_" + odd_cycle_set_name(a), std::move(diagonal));
    }
    return result;
}

auto homlab::is_bad_triple(const OddCycleFamily & family, int u1, int u2, int u3) -> bool
{
    for (auto set : family.sets()) {
        auto in = [&] (int u) { return std::binary_search(set->begin(), set->end(), u); };
        if (in(u1) && in(u2) && in(u3))
            return false;
    }
    return true;
}
