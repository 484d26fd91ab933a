#ifndef HOMLAB_GUARD_HOMLAB_LAYERING_HH
#define HOMLAB_GUARD_HOMLAB_LAYERING_HH 1

#include <homlab/graph.hh>

#include <optional>
#include <vector>

namespace homlab
{
    /**
     * An ordered partition (V_0, ..., V_t) of the vertices. Whether it is a layering
     * of a particular graph (every edge inside one layer or between consecutive ones)
     * is checked separately by is_layering().
     */
    class Layering
    {
        private:
            std::vector<std::vector<Vertex>> _layers;
            std::vector<int> _layer_of;

        public:
            Layering() = default;

            /// Throws InvalidInput unless the layers partition 1..n exactly. Empty
            /// layers are rejected too.
            Layering(int n, std::vector<std::vector<Vertex>> layers);

            [[nodiscard]] auto layers() const -> const std::vector<std::vector<Vertex>> & { return _layers; }
            [[nodiscard]] auto layer(int i) const -> const std::vector<Vertex> & { return _layers[i]; }
            [[nodiscard]] auto depth() const -> int { return static_cast<int>(_layers.size()); }
            [[nodiscard]] auto layer_of(Vertex v) const -> int { return _layer_of[v - 1]; }
            [[nodiscard]] auto size() const -> int { return static_cast<int>(_layer_of.size()); }

            /// V_{>= i}
            [[nodiscard]] auto at_or_above(int i) const -> std::vector<Vertex>;

            friend auto operator== (const Layering & a, const Layering & b) -> bool
            {
                return a._layers == b._layers;
            }
    };

    [[nodiscard]] auto is_layering(const Graph & g, const Layering & layering) -> bool;

    /// BFS distance classes from root. Throws InvalidInput if g is disconnected.
    auto bfs_layering(const Graph & g, Vertex root) -> Layering;

    struct ShadowViolation
    {
        int layer;                        // i, so the shadow lives in V_{i-1}
        std::vector<Vertex> component;    // a component of G_{>= i}
        std::vector<Vertex> shadow;
    };

    /// Vertices of V_{i-1} with a neighbour in the given vertex set (which must lie in V_{>= i}).
    auto shadow_of(const Graph & g, const Layering & layering, int i, const std::vector<Vertex> & vertices) -> std::vector<Vertex>;

    /**
     * Returns nullopt if every shadow of every component of every G_{>= i} is a
     * clique, otherwise the first violation found scanning i upwards. Throws
     * InvalidInput if layering is not a layering of g.
     */
    auto find_shadow_violation(const Graph & g, const Layering & layering) -> std::optional<ShadowViolation>;

    [[nodiscard]] auto is_shadow_complete(const Graph & g, const Layering & layering) -> bool;
}

#endif
