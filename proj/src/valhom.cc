#include <homlab/error.hh>
#include <homlab/valhom.hh>

#include <string>

using namespace homlab;

using std::to_string;
using std::vector;

homlab::ValHomInstance::ValHomInstance(DiGraph source, DiGraph target, const ExtRational & fill) :
    _source(std::move(source)),
    _target(std::move(target)),
    _eta(_source.arcs().size() * _target.arcs().size(), fill)
{
}

auto homlab::ValHomInstance::set_eta(Edge source_arc, Edge target_arc, const ExtRational & value) -> void
{
    auto a = _source.arc_index(source_arc.first, source_arc.second);
    auto b = _target.arc_index(target_arc.first, target_arc.second);
    if (a < 0)
        throw InvalidInput("cost for missing source arc " + std::to_string(source_arc.first) + " " + std::to_string(source_arc.second));
    if (b < 0)
        throw InvalidInput("cost for missing target arc " + std::to_string(target_arc.first) + " " + std::to_string(target_arc.second));
    _eta[static_cast<std::size_t>(a) * _target.arcs().size() + b] = value;
}

auto homlab::ValHomInstance::cost(const vector<Vertex> & g) const -> ExtRational
{
    ExtRational total{ 0 };
    auto & arcs = _source.arcs();
    for (std::size_t a = 0 ; a < arcs.size() ; ++a) {
        auto b = _target.arc_index(g[arcs[a].first - 1], g[arcs[a].second - 1]);
        if (b < 0)
            return ExtRational::infinity();
        total += eta(static_cast<int>(a), b);
    }
    return total;
}

auto homlab::valhom_to_vcsp(const ValHomInstance & instance, const vector<int> & source_colors,
        const Coloring & target_coloring) -> VcspInstance
{
    auto & g = instance.source();
    auto & h = instance.target();
    if (h.size() == 0)
        throw InvalidInput("target graph has no vertices");
    if (static_cast<int>(source_colors.size()) != g.size())
        throw InvalidInput("source coloring has the wrong number of vertices");
    if (target_coloring.size() != h.size() || ! is_proper(underlying_graph(h), target_coloring))
        throw InvalidInput("target coloring is not a proper coloring of the underlying graph");

    VcspInstance result(h.size(), g.size());
    auto & target_arcs = h.arcs();
    for (std::size_t a = 0 ; a < g.arcs().size() ; ++a) {
        auto [vi, vj] = g.arcs()[a];
        CostFunction phi(h.size(), 2, ExtRational::infinity());
        for (std::size_t b = 0 ; b < target_arcs.size() ; ++b) {
            auto [u, w] = target_arcs[b];
            if (source_colors[vi - 1] == target_coloring.color(u) && source_colors[vj - 1] == target_coloring.color(w))
                phi.set(vector<int>{ u, w }, instance.eta(static_cast<int>(a), static_cast<int>(b)));
        }
        result.add_term(std::move(phi), { vi, vj });
    }
    return result;
}
