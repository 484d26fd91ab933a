#include <homlab/constructions.hh>
#include <homlab/error.hh>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

using namespace homlab;

using std::to_string;
using std::array;
using std::map;
using std::vector;

auto homlab::triple_from_track_layout(const Graph & g, const TrackLayout & layout) -> Triple
{
    if (layout.coloring().size() != g.size() || ! is_track_layout(g, layout))
        throw InvalidInput("not a track layout of the graph");

    int n = g.size();
    Triple result(std::max(n, 1));
    for (int a = 1 ; a <= n ; ++a)
        for (int b = 1 ; b <= n ; ++b)
            for (int c = 1 ; c <= n ; ++c) {
                array<int, 3> sorted{ a, b, c };
                std::sort(sorted.begin(), sorted.end(), [&] (int x, int y) { return layout.rank(x) < layout.rank(y); });
                result.set(a, b, c, { sorted[1], sorted[0], sorted[2] });
            }
    return result;
}

auto homlab::distance2_coloring(const Graph & g) -> Coloring
{
    int n = g.size();
    vector<int> colors(n, 0);
    vector<int> seen(n + 2, 0);
    for (int v = 1 ; v <= n ; ++v) {
        auto mark = [&] (Vertex u) {
            if (u != v && colors[u - 1] != 0)
                seen[colors[u - 1]] = v;
        };
        for (auto u : g.neighbours(v)) {
            mark(u);
            for (auto w : g.neighbours(u))
                mark(w);
        }
        int c = 1;
        while (seen[c] == v)
            ++c;
        colors[v - 1] = c;
    }
    return Coloring(std::move(colors));
}

auto homlab::cohen_triple(const Graph & g, const Coloring & gamma) -> Triple
{
    if (gamma.size() != g.size() || ! is_distance2_coloring(g, gamma))
        throw InvalidInput("cohen_triple needs a distance-2 coloring of the graph");

    int n = g.size();
    Triple result(std::max(n, 1));
    for (int u = 1 ; u <= n ; ++u)
        for (int v = 1 ; v <= n ; ++v)
            for (int w = 1 ; w <= n ; ++w) {
                int f1 = (v != w) ? u : w;
                int f2 = (u != w) ? v : w;
                int f3 = w;
                if (u == w && v != w)
                    f3 = v;
                else if (v == w && u != v)
                    f3 = u;
                result.set(u, v, w, { f1, f2, f3 });
            }
    return result;
}

auto homlab::extend_after_deletion(const Graph & g, const InducedSubgraph & h, const ColoredTriple & h_data) -> ColoredTriple
{
    auto & kept = h.to_parent;
    if (! std::is_sorted(kept.begin(), kept.end()) || std::adjacent_find(kept.begin(), kept.end()) != kept.end())
        throw InvalidInput("kept vertices must be sorted and distinct");
    for (auto v : kept)
        if (v < 1 || v > g.size())
            throw InvalidInput("kept vertex " + to_string(v) + " is not a vertex of the graph");
    if (induced_subgraph(g, kept).graph != h.graph)
        throw InvalidInput("the smaller graph is not the subgraph induced by the kept vertices");
    if (h_data.coloring.size() != h.graph.size())
        throw InvalidInput("coloring does not cover the smaller graph");
    if (h.graph.size() > 0 && h_data.triple.domain_size() != h.graph.size())
        throw InvalidInput("triple domain does not match the smaller graph");

    int n = g.size();
    vector<int> local(n + 1, 0);
    for (std::size_t i = 0 ; i < kept.size() ; ++i)
        local[kept[i]] = static_cast<int>(i) + 1;

    vector<int> colors(n);
    int next = h_data.coloring.num_colors();
    for (int v = 1 ; v <= n ; ++v)
        colors[v - 1] = local[v] ? h_data.coloring.color(local[v]) : ++next;

    Triple triple(std::max(n, 1));
    for (int u = 1 ; u <= n ; ++u)
        for (int v = 1 ; v <= n ; ++v)
            for (int w = 1 ; w <= n ; ++w) {
                if (local[u] && local[v] && local[w]) {
                    auto out = h_data.triple.apply(local[u], local[v], local[w]);
                    triple.set(u, v, w, { kept[out[0] - 1], kept[out[1] - 1], kept[out[2] - 1] });
                }
                else if (v != w)
                    triple.set(u, v, w, { u, v, w });
                else
                    triple.set(u, v, w, { w, v, u });
            }
    return ColoredTriple{ Coloring(std::move(colors), next), std::move(triple) };
}

auto homlab::matching_clique_permutations(const Graph & g, const Coloring & gamma, const Triple & triple,
        const array<vector<Vertex>, 3> & cliques) -> vector<CoordinatePermutation>
{
    for (auto & clique : cliques)
        if (! is_clique(g, clique))
            throw InvalidInput("clique_permutation needs three cliques");

    vector<array<int, 3>> monochromatic;
    for (auto u : cliques[0])
        for (auto v : cliques[1])
            for (auto w : cliques[2])
                if (gamma.color(u) == gamma.color(v) && gamma.color(v) == gamma.color(w))
                    monochromatic.push_back({ u, v, w });

    vector<CoordinatePermutation> result;
    for (auto & pi : all_coordinate_permutations())
        if (std::all_of(monochromatic.begin(), monochromatic.end(), [&] (const array<int, 3> & m) {
                    return triple.apply(m[0], m[1], m[2]) == pi.apply(m); }))
            result.push_back(pi);
    return result;
}

auto homlab::clique_permutation(const Graph & g, const Coloring & gamma, const Triple & triple,
        const array<vector<Vertex>, 3> & cliques) -> CoordinatePermutation
{
    auto candidates = matching_clique_permutations(g, gamma, triple, cliques);
    if (candidates.empty())
        throw std::logic_error("no coordinate permutation matches the triple on the cliques");
    return candidates.front();
}

auto homlab::shadow_combine(const Graph & g, const Layering & layering, const vector<ComponentData> & components) -> ColoredTriple
{
    int n = g.size();
    if (n == 0 || ! is_connected(g))
        throw InvalidInput("shadow_combine needs a connected graph");
    if (layering.size() != n)
        throw InvalidInput("layering does not cover the graph");
    if (auto violation = find_shadow_violation(g, layering))
        throw InvalidInput("layering is not shadow-complete: shadow of a component in layer " + to_string(violation->layer)
                + " is not a clique");

    map<vector<Vertex>, int> data_of;
    for (std::size_t i = 0 ; i < components.size() ; ++i)
        if (! data_of.emplace(components[i].vertices, static_cast<int>(i)).second)
            throw InvalidInput("component data given twice for the same vertex set");

    // per vertex: component, index inside it, local color
    vector<int> component_of(n + 1), local_index(n + 1), local_color(n + 1);
    vector<vector<Vertex>> component_vertices, parent_clique;
    vector<int> data_index;
    for (int i = 0 ; i < layering.depth() ; ++i)
        for (auto & x : connected_components(g, layering.layer(i))) {
            auto it = data_of.find(x);
            if (it == data_of.end())
                throw InvalidInput("no component data for a component of layer " + to_string(i));
            auto & data = components[it->second];
            auto sub = induced_subgraph(g, x);
            if (data.local.coloring.size() != static_cast<int>(x.size()) || ! is_proper(sub.graph, data.local.coloring))
                throw InvalidInput("local coloring of a component in layer " + to_string(i) + " is not proper");
            if (data.local.triple.domain_size() != static_cast<int>(x.size()))
                throw InvalidInput("local triple of a component in layer " + to_string(i) + " has the wrong domain size");

            int c = static_cast<int>(component_vertices.size());
            for (std::size_t p = 0 ; p < x.size() ; ++p) {
                component_of[x[p]] = c;
                local_index[x[p]] = static_cast<int>(p) + 1;
                local_color[x[p]] = data.local.coloring.color(static_cast<int>(p) + 1);
            }
            parent_clique.push_back(i == 0 ? vector<Vertex>{ } : shadow_of(g, layering, i, x));
            component_vertices.push_back(x);
            data_index.push_back(it->second);
        }
    if (component_vertices.size() != components.size())
        throw InvalidInput("component data given for vertex sets that are not layer components");

    map<std::tuple<int, int, vector<int>>, int> color_of_key;
    vector<int> colors(n);
    for (int v = 1 ; v <= n ; ++v) {
        vector<int> signature;
        for (auto u : parent_clique[component_of[v]])
            signature.push_back(local_color[u]);
        std::sort(signature.begin(), signature.end());
        signature.erase(std::unique(signature.begin(), signature.end()), signature.end());
        auto key = std::make_tuple(local_color[v], layering.layer_of(v) % 3, std::move(signature));
        auto [it, _] = color_of_key.emplace(std::move(key), static_cast<int>(color_of_key.size()) + 1);
        colors[v - 1] = it->second;
    }
    Coloring gamma(std::move(colors));

    Triple result(n);
    for (int u = 1 ; u <= n ; ++u)
        for (int v = 1 ; v <= n ; ++v)
            for (int w = 1 ; w <= n ; ++w)
                result.set(u, v, w, v != w ? array<int, 3>{ u, v, w } : array<int, 3>{ w, v, u });

    auto local_apply = [&] (int c, int u, int v, int w) {
        auto & x = component_vertices[c];
        auto out = components[data_index[c]].local.triple.apply(local_index[u], local_index[v], local_index[w]);
        return array<int, 3>{ x[out[0] - 1], x[out[1] - 1], x[out[2] - 1] };
    };

    auto & layer0 = layering.layer(0);
    for (auto u : layer0)
        for (auto v : layer0)
            for (auto w : layer0)
                if (gamma.color(u) == gamma.color(v) && gamma.color(v) == gamma.color(w))
                    result.set(u, v, w, local_apply(component_of[u], u, v, w));

    // Two equal parent cliques may hold a repeated vertex, so f1 must read from
    // one of their positions. Triples in the clique product do not always force
    // this, since the parents' own colors can differ.
    auto parent_permutation = [&] (const vector<Vertex> & ku, const vector<Vertex> & kv, const vector<Vertex> & kw) {
        auto candidates = matching_clique_permutations(g, gamma, result, { ku, kv, kw });
        int lone = (ku == kv) ? 3 : (ku == kw) ? 2 : (kv == kw) ? 1 : 0;
        for (auto & pi : candidates)
            if (lone == 0 || pi.sigma[0] != lone)
                return pi;
        throw std::logic_error("no majority-preserving coordinate permutation for parent cliques");
    };

    map<array<int, 3>, CoordinatePermutation> permutation_cache;
    vector<Vertex> below;
    for (int i = 1 ; i < layering.depth() ; ++i) {
        auto & current = layering.layer(i);
        below.insert(below.end(), layering.layer(i - 1).begin(), layering.layer(i - 1).end());
        vector<Vertex> up_to = below;
        up_to.insert(up_to.end(), current.begin(), current.end());

        for (auto u : up_to)
            for (auto v : up_to)
                for (auto w : up_to) {
                    if (layering.layer_of(u) != i && layering.layer_of(v) != i && layering.layer_of(w) != i)
                        continue;
                    if (gamma.color(u) != gamma.color(v) || gamma.color(v) != gamma.color(w))
                        continue;
                    int cu = component_of[u], cv = component_of[v], cw = component_of[w];
                    auto & ku = parent_clique[cu];
                    auto & kv = parent_clique[cv];
                    auto & kw = parent_clique[cw];
                    if (ku != kv || kv != kw) {
                        array<int, 3> key{ cu, cv, cw };
                        auto it = permutation_cache.find(key);
                        if (it == permutation_cache.end())
                            it = permutation_cache.emplace(key, parent_permutation(ku, kv, kw)).first;
                        result.set(u, v, w, it->second.apply(array<int, 3>{ u, v, w }));
                    }
                    else if (cu == cv && cv == cw)
                        result.set(u, v, w, local_apply(cu, u, v, w));
                    else {
                        // the component holding the odd position out, or u's when all differ
                        int lone = (cu == cv) ? cw : (cu == cw) ? cv : cu;
                        result.set(u, v, w, cu != lone ? array<int, 3>{ u, v, w } : array<int, 3>{ w, v, u });
                    }
                }
    }
    return ColoredTriple{ std::move(gamma), std::move(result) };
}

auto homlab::cohen_component_data(const Graph & g, const Layering & layering) -> vector<ComponentData>
{
    vector<ComponentData> result;
    for (int i = 0 ; i < layering.depth() ; ++i)
        for (auto & x : connected_components(g, layering.layer(i))) {
            auto sub = induced_subgraph(g, x);
            auto gamma = distance2_coloring(sub.graph);
            auto triple = cohen_triple(sub.graph, gamma);
            result.push_back(ComponentData{ x, ColoredTriple{ std::move(gamma), std::move(triple) } });
        }
    return result;
}

auto homlab::odd_cycle_majority(int k) -> OperationTable
{
    if (k < 1)
        throw InvalidInput("odd cycle parameter must be at least 1");
    int d = 2 * k + 1;
    OperationTable f(d);
    for (int x = 1 ; x <= d ; ++x)
        for (int y = 1 ; y <= d ; ++y)
            for (int z = 1 ; z <= d ; ++z) {
                array<int, 3> s{ x, y, z };
                std::sort(s.begin(), s.end());
                int value;
                if (s[0] % 2 == s[1] % 2 && s[1] % 2 == s[2] % 2)
                    value = s[1];
                else {
                    // c is the argument whose parity is alone, a >= b the other two
                    int c = (s[0] % 2 != s[1] % 2 && s[0] % 2 != s[2] % 2) ? s[0] : (s[1] % 2 != s[0] % 2 && s[1] % 2 != s[2] % 2) ? s[1] : s[2];
                    int a = -1, b = -1;
                    bool skipped = false;
                    for (auto t : s) {
                        if (t == c && ! skipped) {
                            skipped = true;
                            continue;
                        }
                        (b < 0 ? b : a) = t;
                    }
                    value = std::clamp(2 * k + 3 - c, b, a);
                }
                f.set(x, y, z, value);
            }
    return f;
}
