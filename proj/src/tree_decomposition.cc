#include <homlab/error.hh>
#include <homlab/tree_decomposition.hh>

#include <algorithm>
#include <climits>
#include <string>

using namespace homlab;

using std::optional;
using std::pair;
using std::string;
using std::to_string;
using std::vector;

auto homlab::TreeDecomposition::width() const -> int
{
    int result = -1;
    for (auto & b : bags)
        result = std::max(result, static_cast<int>(b.size()) - 1);
    return result;
}

auto homlab::adhesion(const TreeDecomposition & td, int x, int y) -> vector<Vertex>
{
    vector<Vertex> result;
    std::set_intersection(td.bag(x).begin(), td.bag(x).end(), td.bag(y).begin(), td.bag(y).end(),
            std::back_inserter(result));
    return result;
}

auto homlab::TreeDecomposition::max_adhesion() const -> int
{
    int result = 0;
    for (auto [x, y] : tree.edges())
        result = std::max(result, static_cast<int>(adhesion(*this, x, y).size()));
    return result;
}

auto homlab::tree_decomposition_problem(const Graph & g, const TreeDecomposition & td) -> optional<string>
{
    if (static_cast<int>(td.bags.size()) != td.tree.size())
        return "decomposition has " + to_string(td.bags.size()) + " bags but " + to_string(td.tree.size()) + " tree nodes";
    if (td.tree.size() == 0)
        return g.size() == 0 ? optional<string>{ } : optional<string>{ "decomposition has no nodes" };
    if (static_cast<int>(td.tree.edges().size()) != td.tree.size() - 1 || ! is_connected(td.tree))
        return string{ "decomposition tree is not a tree" };

    for (std::size_t x = 0 ; x < td.bags.size() ; ++x)
        for (auto v : td.bags[x])
            if (v < 1 || v > g.size())
                return "bag " + to_string(x + 1) + " contains non-vertex " + to_string(v);

    for (auto [u, v] : g.edges())
        if (std::none_of(td.bags.begin(), td.bags.end(), [&] (const vector<Vertex> & b) {
                    return std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v); }))
            return "edge " + to_string(u) + " " + to_string(v) + " is in no bag";

    for (Vertex v = 1 ; v <= g.size() ; ++v) {
        vector<Vertex> nodes;
        for (int x = 1 ; x <= td.tree.size() ; ++x)
            if (std::binary_search(td.bag(x).begin(), td.bag(x).end(), v))
                nodes.push_back(x);
        if (nodes.empty())
            return "vertex " + to_string(v) + " is in no bag";
        if (connected_components(td.tree, nodes).size() != 1)
            return "bags containing vertex " + to_string(v) + " are not connected in the tree";
    }

    return std::nullopt;
}

auto homlab::is_tree_decomposition(const Graph & g, const TreeDecomposition & td) -> bool
{
    return ! tree_decomposition_problem(g, td).has_value();
}

auto homlab::is_rich(const Graph & g, const TreeDecomposition & td, int k) -> bool
{
    if (! is_tree_decomposition(g, td))
        return false;
    for (auto [x, y] : td.tree.edges()) {
        auto a = adhesion(td, x, y);
        if (static_cast<int>(a.size()) > k || ! is_clique(g, a))
            return false;
    }
    return true;
}

auto homlab::make_rich_supergraph(const Graph & g, const TreeDecomposition & td) -> pair<Graph, TreeDecomposition>
{
    if (auto problem = tree_decomposition_problem(g, td))
        throw InvalidInput("invalid tree decomposition: " + *problem);

    Graph result = g;
    for (auto [x, y] : td.tree.edges()) {
        auto a = adhesion(td, x, y);
        for (std::size_t i = 0 ; i < a.size() ; ++i)
            for (std::size_t j = i + 1 ; j < a.size() ; ++j)
                result.add_edge(a[i], a[j]);
    }
    return { result, td };
}

auto homlab::fill_bags(const Graph & g, const TreeDecomposition & td) -> Graph
{
    Graph result = g;
    for (auto & b : td.bags)
        for (std::size_t i = 0 ; i < b.size() ; ++i)
            for (std::size_t j = i + 1 ; j < b.size() ; ++j)
                result.add_edge(b[i], b[j]);
    return result;
}

auto homlab::decomposition_from_elimination(const Graph & g, const vector<Vertex> & order) -> TreeDecomposition
{
    int n = g.size();
    if (static_cast<int>(order.size()) != n)
        throw InvalidInput("elimination order must list every vertex");
    if (n == 0)
        return TreeDecomposition{ Graph(1), { { } } };

    vector<int> position(n + 1, -1);
    for (int i = 0 ; i < n ; ++i)
        position[order[i]] = i;

    Graph filled = g;
    TreeDecomposition td{ Graph(n), vector<vector<Vertex>>(n) };
    for (int i = 0 ; i < n ; ++i) {
        auto v = order[i];
        vector<Vertex> later;
        for (auto w : filled.neighbours(v))
            if (position[w] > i)
                later.push_back(w);
        for (std::size_t a = 0 ; a < later.size() ; ++a)
            for (std::size_t b = a + 1 ; b < later.size() ; ++b)
                filled.add_edge(later[a], later[b]);

        auto bag = later;
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        td.bags[i] = bag;

        if (i + 1 < n) {
            int parent = n - 1;
            for (auto w : later)
                parent = std::min(parent, position[w]);
            td.tree.add_edge(i + 1, parent + 1);
        }
    }
    return td;
}

auto homlab::brute_force_tree_decomposition(const Graph & g) -> TreeDecomposition
{
    int n = g.size();
    if (n > 10)
        throw InvalidInput("brute-force tree decomposition is limited to 10 vertices");

    unsigned full = (1u << n) - 1;

    // vertices outside set ∪ {v} reachable from v through set
    auto q_size = [&] (unsigned set, int v) {
        unsigned seen = 1u << v, frontier = 1u << v, result = 0;
        while (frontier) {
            int u = __builtin_ctz(frontier);
            frontier &= frontier - 1;
            for (auto w1 : g.neighbours(u + 1)) {
                int w = w1 - 1;
                if (seen & (1u << w))
                    continue;
                seen |= 1u << w;
                if (set & (1u << w))
                    frontier |= 1u << w;
                else
                    result |= 1u << w;
            }
        }
        return __builtin_popcount(result);
    };

    vector<int> best(full + 1, INT_MAX), choice(full + 1, -1);
    best[0] = -1;
    for (unsigned set = 1 ; set <= full ; ++set)
        for (int v = 0 ; v < n ; ++v)
            if (set & (1u << v)) {
                unsigned rest = set & ~(1u << v);
                int value = std::max(best[rest], q_size(rest, v));
                if (value < best[set]) {
                    best[set] = value;
                    choice[set] = v;
                }
            }

    vector<Vertex> order;
    for (unsigned set = full ; set ; set &= ~(1u << choice[set]))
        order.push_back(choice[set] + 1);
    std::reverse(order.begin(), order.end());
    return decomposition_from_elimination(g, order);
}
