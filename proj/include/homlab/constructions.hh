#ifndef HOMLAB_GUARD_HOMLAB_CONSTRUCTIONS_HH
#define HOMLAB_GUARD_HOMLAB_CONSTRUCTIONS_HH 1

#include <homlab/graph.hh>
#include <homlab/layering.hh>
#include <homlab/operation.hh>
#include <homlab/track_layout.hh>

#include <array>
#include <vector>

namespace homlab
{
    /// A coloring of a graph together with a triple meant for its crisp language.
    struct ColoredTriple
    {
        Coloring coloring;
        Triple triple;
    };

    /// (median, min, max) with respect to the layout order. Throws InvalidInput if
    /// the layout is not a track layout of g.
    auto triple_from_track_layout(const Graph & g, const TrackLayout & layout) -> Triple;

    /// Greedy in vertex order: each vertex takes the least color unused within
    /// distance two. At most max_degree^2 + 1 colors.
    auto distance2_coloring(const Graph & g) -> Coloring;

    /**
     * f1(u,v,w) = u if v != w, else w
     * f2(u,v,w) = v if u != w, else w
     * f3(u,v,w) = the minority element if exactly two values occur, else w
     * Throws InvalidInput if gamma is not a distance-2 coloring of g.
     */
    auto cohen_triple(const Graph & g, const Coloring & gamma) -> Triple;

    /**
     * Re-adds the vertices of g missing from h, each with a fresh color numbered
     * after h's colors in increasing vertex order. The triple agrees with h's on
     * triples inside V(h), elsewhere it is (u,v,w) when v != w and (w,v,u) when
     * v = w. Throws InvalidInput if h.graph is not the subgraph of g induced by
     * h.to_parent.
     */
    auto extend_after_deletion(const Graph & g, const InducedSubgraph & h, const ColoredTriple & h_data) -> ColoredTriple;

    /**
     * A coordinate permutation pi with F(u,v,w) = pi(u,v,w) for every
     * monochromatic (u,v,w) in the product of the three cliques; the first such pi
     * in all_coordinate_permutations() order. Throws InvalidInput if a set is not
     * a clique, and std::logic_error if no permutation fits (F is then not a
     * persistent majority triple for the coloring).
     */
    auto clique_permutation(const Graph & g, const Coloring & gamma, const Triple & triple,
            const std::array<std::vector<Vertex>, 3> & cliques) -> CoordinatePermutation;

    /// Every permutation that clique_permutation could return, in the same order.
    auto matching_clique_permutations(const Graph & g, const Coloring & gamma, const Triple & triple,
            const std::array<std::vector<Vertex>, 3> & cliques) -> std::vector<CoordinatePermutation>;

    /// Local data for one connected component of one layer: its vertices (sorted,
    /// in g's numbering) and a coloring and triple of the induced subgraph, which
    /// numbers those vertices 1..|X| in increasing order.
    struct ComponentData
    {
        std::vector<Vertex> vertices;
        ColoredTriple local;
    };

    /**
     * Combines per-component colorings of the layers of a shadow-complete layering
     * of a connected graph. Two vertices share a color iff they share local color,
     * layer index mod 3 and the set of local colors on their parent clique (the
     * shadow of their layer component, empty in layer 0); colors are numbered in
     * order of first appearance by vertex. Uses at most 3c(c+1)^s colors, c the
     * largest local color count, s the largest shadow.
     *
     * Throws InvalidInput if g is disconnected, the layering is not shadow-complete,
     * or the component data does not match the components of the layers one to one
     * with proper local colorings and matching domain sizes.
     */
    auto shadow_combine(const Graph & g, const Layering & layering, const std::vector<ComponentData> & components) -> ColoredTriple;

    /// ComponentData for every layer component from a distance-2 coloring and the
    /// matching Cohen triple.
    auto cohen_component_data(const Graph & g, const Layering & layering) -> std::vector<ComponentData>;

    /// The symmetric operation on 1..2k+1: median when all arguments share a
    /// parity, otherwise the odd one out c mapped to 2k+3-c and clamped between the
    /// other two. Throws InvalidInput if k < 1.
    auto odd_cycle_majority(int k) -> OperationTable;
}

#endif
