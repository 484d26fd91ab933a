#include <homlab/error.hh>
#include <homlab/graph.hh>

#include <algorithm>
#include <set>
#include <string>

using namespace homlab;

using std::string;
using std::to_string;
using std::vector;

homlab::Graph::Graph(int size) :
    _size(size),
    _neighbours(size),
    _adjacency(static_cast<std::size_t>(size) * size, false)
{
    if (size < 0)
        throw InvalidInput("negative vertex count");
}

homlab::Graph::Graph(int size, const vector<Edge> & edges) :
    Graph(size)
{
    for (auto [u, v] : edges) {
        if (u < 1 || u > size || v < 1 || v > size)
            throw InvalidInput("edge " + to_string(u) + " " + to_string(v) + " has an endpoint outside 1.." + to_string(size));
        if (u == v)
            throw InvalidInput("self-loop at vertex " + to_string(u));
        if (! add_edge(u, v))
            throw InvalidInput("duplicate edge " + to_string(u) + " " + to_string(v));
    }
}

auto homlab::Graph::add_edge(Vertex u, Vertex v) -> bool
{
    if (u == v || adjacent(u, v))
        return false;

    _adjacency[(u - 1) * _size + (v - 1)] = true;
    _adjacency[(v - 1) * _size + (u - 1)] = true;

    Edge e{ std::min(u, v), std::max(u, v) };
    _edges.insert(std::lower_bound(_edges.begin(), _edges.end(), e), e);

    auto insert_sorted = [] (vector<Vertex> & list, Vertex w) {
        list.insert(std::lower_bound(list.begin(), list.end(), w), w);
    };
    insert_sorted(_neighbours[u - 1], v);
    insert_sorted(_neighbours[v - 1], u);
    return true;
}

auto homlab::Graph::max_degree() const -> int
{
    int result = 0;
    for (Vertex v = 1 ; v <= _size ; ++v)
        result = std::max(result, degree(v));
    return result;
}

homlab::DiGraph::DiGraph(int size) :
    _size(size),
    _has_arc(static_cast<std::size_t>(size) * size, false)
{
    if (size < 0)
        throw InvalidInput("negative vertex count");
}

homlab::DiGraph::DiGraph(int size, const vector<Edge> & arcs) :
    DiGraph(size)
{
    for (auto [u, v] : arcs) {
        if (u < 1 || u > size || v < 1 || v > size)
            throw InvalidInput("arc " + to_string(u) + " " + to_string(v) + " has an endpoint outside 1.." + to_string(size));
        if (has_arc(u, v))
            throw InvalidInput("duplicate arc " + to_string(u) + " " + to_string(v));
        _has_arc[(u - 1) * _size + (v - 1)] = true;
        _arcs.emplace_back(u, v);
    }
    std::sort(_arcs.begin(), _arcs.end());
}

auto homlab::DiGraph::arc_index(Vertex u, Vertex v) const -> int
{
    auto it = std::lower_bound(_arcs.begin(), _arcs.end(), Edge{ u, v });
    if (it == _arcs.end() || *it != Edge{ u, v })
        return -1;
    return static_cast<int>(it - _arcs.begin());
}

auto homlab::underlying_graph(const DiGraph & g) -> Graph
{
    Graph result(g.size());
    for (auto [u, v] : g.arcs())
        if (u != v)
            result.add_edge(u, v);
    return result;
}

auto homlab::symmetric_digraph(const Graph & g) -> DiGraph
{
    vector<Edge> arcs;
    for (auto [u, v] : g.edges()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return DiGraph(g.size(), arcs);
}

homlab::Coloring::Coloring(vector<int> colors, int num_colors) :
    _colors(std::move(colors)),
    _num_colors(num_colors)
{
    for (auto c : _colors) {
        if (c < 1)
            throw InvalidInput("colors must be positive, got " + to_string(c));
        _num_colors = std::max(_num_colors, c);
    }
}

auto homlab::Coloring::used_colors() const -> int
{
    return static_cast<int>(std::set<int>(_colors.begin(), _colors.end()).size());
}

auto homlab::is_proper(const Graph & g, const Coloring & c) -> bool
{
    if (c.size() != g.size())
        return false;
    return std::none_of(g.edges().begin(), g.edges().end(), [&] (const Edge & e) {
            return c.color(e.first) == c.color(e.second); });
}

auto homlab::is_distance2_coloring(const Graph & g, const Coloring & c) -> bool
{
    if (! is_proper(g, c))
        return false;
    for (Vertex v = 1 ; v <= g.size() ; ++v) {
        auto & ns = g.neighbours(v);
        for (std::size_t i = 0 ; i < ns.size() ; ++i)
            for (std::size_t j = i + 1 ; j < ns.size() ; ++j)
                if (c.color(ns[i]) == c.color(ns[j]))
                    return false;
    }
    return true;
}

auto homlab::connected_components(const Graph & g, const vector<Vertex> & subset) -> vector<vector<Vertex>>
{
    vector<bool> in_subset(g.size() + 1, false), seen(g.size() + 1, false);
    for (auto v : subset)
        in_subset[v] = true;

    vector<Vertex> sorted = subset;
    std::sort(sorted.begin(), sorted.end());

    vector<vector<Vertex>> result;
    for (auto start : sorted) {
        if (seen[start])
            continue;
        vector<Vertex> component, stack{ start };
        seen[start] = true;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            component.push_back(v);
            for (auto w : g.neighbours(v))
                if (in_subset[w] && ! seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(component.begin(), component.end());
        result.push_back(std::move(component));
    }
    return result;
}

auto homlab::connected_components(const Graph & g) -> vector<vector<Vertex>>
{
    vector<Vertex> all(g.size());
    for (Vertex v = 1 ; v <= g.size() ; ++v)
        all[v - 1] = v;
    return connected_components(g, all);
}

auto homlab::is_connected(const Graph & g) -> bool
{
    return connected_components(g).size() <= 1;
}

auto homlab::is_clique(const Graph & g, const vector<Vertex> & vertices) -> bool
{
    for (std::size_t i = 0 ; i < vertices.size() ; ++i)
        for (std::size_t j = i + 1 ; j < vertices.size() ; ++j)
            if (vertices[i] == vertices[j] || ! g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

auto homlab::induced_subgraph(const Graph & g, vector<Vertex> keep) -> InducedSubgraph
{
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    vector<int> position(g.size() + 1, 0);
    for (std::size_t i = 0 ; i < keep.size() ; ++i) {
        if (keep[i] < 1 || keep[i] > g.size())
            throw InvalidInput("vertex " + to_string(keep[i]) + " not in graph");
        position[keep[i]] = static_cast<int>(i) + 1;
    }

    InducedSubgraph result{ Graph(static_cast<int>(keep.size())), keep };
    for (auto [u, v] : g.edges())
        if (position[u] && position[v])
            result.graph.add_edge(position[u], position[v]);
    return result;
}

auto homlab::path_graph(int n) -> Graph
{
    Graph g(n);
    for (int v = 1 ; v < n ; ++v)
        g.add_edge(v, v + 1);
    return g;
}

auto homlab::cycle_graph(int n) -> Graph
{
    if (n < 3)
        throw InvalidInput("cycles need at least three vertices");
    Graph g = path_graph(n);
    g.add_edge(n, 1);
    return g;
}

auto homlab::complete_graph(int n) -> Graph
{
    Graph g(n);
    for (int u = 1 ; u <= n ; ++u)
        for (int v = u + 1 ; v <= n ; ++v)
            g.add_edge(u, v);
    return g;
}

auto homlab::star_graph(int leaves) -> Graph
{
    Graph g(leaves + 1);
    for (int v = 2 ; v <= leaves + 1 ; ++v)
        g.add_edge(1, v);
    return g;
}

auto homlab::directed_cycle(int n) -> DiGraph
{
    vector<Edge> arcs;
    for (int v = 1 ; v <= n ; ++v)
        arcs.emplace_back(v, v % n + 1);
    return DiGraph(n, arcs);
}
