#ifndef HOMLAB_GUARD_HOMLAB_VALHOM_HH
#define HOMLAB_GUARD_HOMLAB_VALHOM_HH 1

#include <homlab/ext_rational.hh>
#include <homlab/graph.hh>
#include <homlab/vcsp.hh>

#include <vector>

namespace homlab
{
    /**
     * Minimum-cost homomorphism: digraphs G and H, and a cost for every pair of
     * arcs (a in A(G), b in A(H)), stored densely as eta[a * |A(H)| + b] with arcs
     * indexed by their position in arcs().
     */
    class ValHomInstance
    {
        private:
            DiGraph _source, _target;
            std::vector<ExtRational> _eta;

        public:
            ValHomInstance() = default;

            /// Every arc pair starts at fill.
            ValHomInstance(DiGraph source, DiGraph target, const ExtRational & fill = ExtRational{ 0 });

            [[nodiscard]] auto source() const -> const DiGraph & { return _source; }
            [[nodiscard]] auto target() const -> const DiGraph & { return _target; }

            [[nodiscard]] auto eta(int source_arc, int target_arc) const -> const ExtRational &
            {
                return _eta[static_cast<std::size_t>(source_arc) * _target.arcs().size() + target_arc];
            }

            /// Throws InvalidInput if either arc is absent.
            auto set_eta(Edge source_arc, Edge target_arc, const ExtRational & value) -> void;

            /// Sum of eta over the arcs of G; infinite when g is not a homomorphism.
            /// g[v-1] is the image of v.
            [[nodiscard]] auto cost(const std::vector<Vertex> & g) const -> ExtRational;
    };

    /**
     * The VCSP whose feasible assignments are the finite-cost homomorphisms
     * compliant with (source_colors, target_coloring): one variable per vertex of
     * G over domain V(H), one binary term per arc. Throws InvalidInput if
     * target_coloring is not a proper coloring of H's underlying graph, or if H
     * has no vertices.
     */
    auto valhom_to_vcsp(const ValHomInstance & instance, const std::vector<int> & source_colors,
            const Coloring & target_coloring) -> VcspInstance;
}

#endif
