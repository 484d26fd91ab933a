#ifndef HOMLAB_GUARD_HOMLAB_GRAPH_HH
#define HOMLAB_GUARD_HOMLAB_GRAPH_HH 1

#include <utility>
#include <vector>

namespace homlab
{
    /// Vertices, domain values and colors are all 1-based throughout.
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;

    /**
     * A simple undirected graph on vertices 1..n. Edges are stored normalised with
     * first < second, sorted.
     */
    class Graph
    {
        private:
            int _size = 0;
            std::vector<Edge> _edges;
            std::vector<std::vector<Vertex>> _neighbours;
            std::vector<bool> _adjacency;

        public:
            Graph() = default;
            explicit Graph(int size);

            /// Throws InvalidInput on self-loops, duplicates or out-of-range endpoints.
            Graph(int size, const std::vector<Edge> & edges);

            [[nodiscard]] auto size() const -> int { return _size; }
            [[nodiscard]] auto edges() const -> const std::vector<Edge> & { return _edges; }
            [[nodiscard]] auto adjacent(Vertex u, Vertex v) const -> bool
            {
                return _adjacency[(u - 1) * _size + (v - 1)];
            }
            [[nodiscard]] auto neighbours(Vertex v) const -> const std::vector<Vertex> & { return _neighbours[v - 1]; }
            [[nodiscard]] auto degree(Vertex v) const -> int { return static_cast<int>(_neighbours[v - 1].size()); }
            [[nodiscard]] auto max_degree() const -> int;

            /// Adds uv if absent, returns whether it was added.
            auto add_edge(Vertex u, Vertex v) -> bool;

            friend auto operator== (const Graph & a, const Graph & b) -> bool
            {
                return a._size == b._size && a._edges == b._edges;
            }
    };

    /// A directed graph; loops are allowed, arcs are distinct.
    class DiGraph
    {
        private:
            int _size = 0;
            std::vector<Edge> _arcs;
            std::vector<bool> _has_arc;

        public:
            DiGraph() = default;
            explicit DiGraph(int size);
            DiGraph(int size, const std::vector<Edge> & arcs);

            [[nodiscard]] auto size() const -> int { return _size; }
            [[nodiscard]] auto arcs() const -> const std::vector<Edge> & { return _arcs; }
            [[nodiscard]] auto has_arc(Vertex u, Vertex v) const -> bool
            {
                return _has_arc[(u - 1) * _size + (v - 1)];
            }

            /// Position of (u,v) in arcs(), or -1.
            [[nodiscard]] auto arc_index(Vertex u, Vertex v) const -> int;

            friend auto operator== (const DiGraph & a, const DiGraph & b) -> bool
            {
                return a._size == b._size && a._arcs == b._arcs;
            }
    };

    /// Loops dropped, antiparallel arcs merged.
    auto underlying_graph(const DiGraph & g) -> Graph;

    /// Each edge becomes a pair of opposite arcs.
    auto symmetric_digraph(const Graph & g) -> DiGraph;

    /// An assignment of colors 1..k to vertices 1..n.
    class Coloring
    {
        private:
            std::vector<int> _colors;
            int _num_colors = 0;

        public:
            Coloring() = default;

            /// colors[v-1] is the color of v. The color count is the largest color used,
            /// unless num_colors is given and larger.
            explicit Coloring(std::vector<int> colors, int num_colors = 0);

            [[nodiscard]] auto size() const -> int { return static_cast<int>(_colors.size()); }
            [[nodiscard]] auto color(Vertex v) const -> int { return _colors[v - 1]; }
            [[nodiscard]] auto num_colors() const -> int { return _num_colors; }
            [[nodiscard]] auto colors() const -> const std::vector<int> & { return _colors; }

            /// Number of distinct colors actually used.
            [[nodiscard]] auto used_colors() const -> int;

            friend auto operator== (const Coloring &, const Coloring &) -> bool = default;
    };

    [[nodiscard]] auto is_proper(const Graph & g, const Coloring & c) -> bool;

    /// Any two distinct vertices joined by a path of length at most two get different colors.
    [[nodiscard]] auto is_distance2_coloring(const Graph & g, const Coloring & c) -> bool;

    /// Connected components, each sorted, ordered by smallest vertex.
    auto connected_components(const Graph & g) -> std::vector<std::vector<Vertex>>;

    /// Components of the subgraph induced by a vertex subset.
    auto connected_components(const Graph & g, const std::vector<Vertex> & subset) -> std::vector<std::vector<Vertex>>;

    [[nodiscard]] auto is_connected(const Graph & g) -> bool;

    [[nodiscard]] auto is_clique(const Graph & g, const std::vector<Vertex> & vertices) -> bool;

    /// A subgraph induced by some vertices of a parent graph, relabelled to 1..|kept|.
    struct InducedSubgraph
    {
        Graph graph;
        std::vector<Vertex> to_parent;   // to_parent[v-1] is the parent vertex of v
    };

    /// Kept vertices are relabelled in increasing order.
    auto induced_subgraph(const Graph & g, std::vector<Vertex> keep) -> InducedSubgraph;

    /// Common small families, mostly for tests and the bench harness.
    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto complete_graph(int n) -> Graph;
    auto star_graph(int leaves) -> Graph;
    auto directed_cycle(int n) -> DiGraph;
}

#endif
