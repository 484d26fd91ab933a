#ifndef HOMLAB_GUARD_HOMLAB_TREE_DECOMPOSITION_HH
#define HOMLAB_GUARD_HOMLAB_TREE_DECOMPOSITION_HH 1

#include <homlab/graph.hh>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homlab
{
    /// A tree on decomposition nodes 1..N together with a sorted bag per node.
    struct TreeDecomposition
    {
        Graph tree;
        std::vector<std::vector<Vertex>> bags;   // bags[x-1] is the bag of node x

        [[nodiscard]] auto bag(int x) const -> const std::vector<Vertex> & { return bags[x - 1]; }
        [[nodiscard]] auto width() const -> int;

        /// Largest |bag(x) ∩ bag(y)| over tree edges xy.
        [[nodiscard]] auto max_adhesion() const -> int;

        friend auto operator== (const TreeDecomposition &, const TreeDecomposition &) -> bool = default;
    };

    auto adhesion(const TreeDecomposition & td, int x, int y) -> std::vector<Vertex>;

    /// nullopt if td is a valid tree decomposition of g, else a description of what is wrong.
    auto tree_decomposition_problem(const Graph & g, const TreeDecomposition & td) -> std::optional<std::string>;

    [[nodiscard]] auto is_tree_decomposition(const Graph & g, const TreeDecomposition & td) -> bool;

    /// Valid, and every adhesion induces a clique of size at most k in g.
    [[nodiscard]] auto is_rich(const Graph & g, const TreeDecomposition & td, int k) -> bool;

    /**
     * Adds every edge inside every adhesion. The decomposition is unchanged and is
     * max_adhesion()-rich for the returned supergraph. Throws InvalidInput if td
     * is not a tree decomposition of g.
     */
    auto make_rich_supergraph(const Graph & g, const TreeDecomposition & td) -> std::pair<Graph, TreeDecomposition>;

    /// The decomposition induced by eliminating vertices in the given order.
    auto decomposition_from_elimination(const Graph & g, const std::vector<Vertex> & order) -> TreeDecomposition;

    /// Minimum-width decomposition by subset dynamic programming. Only for n <= 10.
    auto brute_force_tree_decomposition(const Graph & g) -> TreeDecomposition;

    /// Completes every bag into a clique; the result is chordal.
    auto fill_bags(const Graph & g, const TreeDecomposition & td) -> Graph;
}

#endif
