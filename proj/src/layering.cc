#include <homlab/error.hh>
#include <homlab/layering.hh>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

using namespace homlab;

using std::optional;
using std::to_string;
using std::vector;

homlab::Layering::Layering(int n, vector<vector<Vertex>> layers) :
    _layers(std::move(layers)),
    _layer_of(n, -1)
{
    for (std::size_t i = 0 ; i < _layers.size() ; ++i) {
        if (_layers[i].empty())
            throw InvalidInput("layer " + to_string(i) + " is empty");
        std::sort(_layers[i].begin(), _layers[i].end());
        for (auto v : _layers[i]) {
            if (v < 1 || v > n)
                throw InvalidInput("layer vertex " + to_string(v) + " outside 1.." + to_string(n));
            if (_layer_of[v - 1] != -1)
                throw InvalidInput("vertex " + to_string(v) + " appears in two layers");
            _layer_of[v - 1] = static_cast<int>(i);
        }
    }
    for (Vertex v = 1 ; v <= n ; ++v)
        if (_layer_of[v - 1] == -1)
            throw InvalidInput("vertex " + to_string(v) + " is in no layer");
}

auto homlab::Layering::at_or_above(int i) const -> vector<Vertex>
{
    vector<Vertex> result;
    for (int j = i ; j < depth() ; ++j)
        result.insert(result.end(), _layers[j].begin(), _layers[j].end());
    std::sort(result.begin(), result.end());
    return result;
}

auto homlab::is_layering(const Graph & g, const Layering & layering) -> bool
{
    if (layering.size() != g.size())
        return false;
    return std::all_of(g.edges().begin(), g.edges().end(), [&] (const Edge & e) {
            return std::abs(layering.layer_of(e.first) - layering.layer_of(e.second)) <= 1; });
}

auto homlab::bfs_layering(const Graph & g, Vertex root) -> Layering
{
    if (root < 1 || root > g.size())
        throw InvalidInput("root " + to_string(root) + " is not a vertex");

    vector<int> distance(g.size() + 1, -1);
    std::deque<Vertex> queue{ root };
    distance[root] = 0;
    vector<vector<Vertex>> layers;
    while (! queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        if (static_cast<int>(layers.size()) <= distance[v])
            layers.emplace_back();
        layers[distance[v]].push_back(v);
        for (auto w : g.neighbours(v))
            if (distance[w] == -1) {
                distance[w] = distance[v] + 1;
                queue.push_back(w);
            }
    }

    for (Vertex v = 1 ; v <= g.size() ; ++v)
        if (distance[v] == -1)
            throw InvalidInput("graph is disconnected, vertex " + to_string(v) + " unreachable from " + to_string(root));

    return Layering(g.size(), std::move(layers));
}

auto homlab::shadow_of(const Graph & g, const Layering & layering, int i, const vector<Vertex> & vertices) -> vector<Vertex>
{
    vector<Vertex> result;
    if (i == 0)
        return result;
    for (auto v : vertices)
        for (auto w : g.neighbours(v))
            if (layering.layer_of(w) == i - 1)
                result.push_back(w);
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

auto homlab::find_shadow_violation(const Graph & g, const Layering & layering) -> optional<ShadowViolation>
{
    if (! is_layering(g, layering))
        throw InvalidInput("not a layering of the graph: some edge skips a layer");

    for (int i = 1 ; i < layering.depth() ; ++i)
        for (auto & component : connected_components(g, layering.at_or_above(i))) {
            auto shadow = shadow_of(g, layering, i, component);
            if (! is_clique(g, shadow))
                return ShadowViolation{ i, component, shadow };
        }

    return std::nullopt;
}

auto homlab::is_shadow_complete(const Graph & g, const Layering & layering) -> bool
{
    return ! find_shadow_violation(g, layering).has_value();
}
