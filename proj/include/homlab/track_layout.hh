#ifndef HOMLAB_GUARD_HOMLAB_TRACK_LAYOUT_HH
#define HOMLAB_GUARD_HOMLAB_TRACK_LAYOUT_HH 1

#include <homlab/graph.hh>

#include <optional>
#include <utility>
#include <vector>

namespace homlab
{
    /**
     * A coloring (the tracks) plus a total order on vertices. order lists vertices
     * from least to greatest; rank(v) is the inverse.
     */
    class TrackLayout
    {
        private:
            Coloring _coloring;
            std::vector<Vertex> _order;
            std::vector<int> _rank;

        public:
            TrackLayout() = default;

            /// Throws InvalidInput unless order is a permutation of 1..n matching the coloring.
            TrackLayout(Coloring coloring, std::vector<Vertex> order);

            [[nodiscard]] auto coloring() const -> const Coloring & { return _coloring; }
            [[nodiscard]] auto order() const -> const std::vector<Vertex> & { return _order; }
            [[nodiscard]] auto rank(Vertex v) const -> int { return _rank[v - 1]; }
            [[nodiscard]] auto precedes(Vertex u, Vertex v) const -> bool { return rank(u) < rank(v); }

            friend auto operator== (const TrackLayout & a, const TrackLayout & b) -> bool
            {
                return a._coloring == b._coloring && a._order == b._order;
            }
    };

    /// Two edges, each oriented so that first endpoints share a track and second endpoints share a track.
    using CrossingPair = std::pair<Edge, Edge>;

    /// The first pair of crossing edges between a common track pair, or nullopt.
    /// Pairwise over edges, so quadratic in |E|.
    auto find_crossing(const Graph & g, const TrackLayout & layout) -> std::optional<CrossingPair>;

    /// Proper coloring and no crossing.
    [[nodiscard]] auto is_track_layout(const Graph & g, const TrackLayout & layout) -> bool;

    /**
     * Keeps the given vertex order and puts each vertex, in that order, on the
     * lowest-numbered track that keeps the partial layout valid. Always succeeds,
     * since a fresh track never creates a crossing.
     */
    auto greedy_track_layout(const Graph & g, const std::vector<Vertex> & order) -> TrackLayout;

    /// greedy_track_layout with the identity order.
    auto greedy_track_layout(const Graph & g) -> TrackLayout;
}

#endif
