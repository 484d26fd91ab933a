#ifndef HOMLAB_GUARD_HOMLAB_FORMATS_HH
#define HOMLAB_GUARD_HOMLAB_FORMATS_HH 1

#include <homlab/ext_rational.hh>
#include <homlab/graph.hh>
#include <homlab/language.hh>
#include <homlab/layering.hh>
#include <homlab/operation.hh>
#include <homlab/track_layout.hh>
#include <homlab/tree_decomposition.hh>
#include <homlab/valhom.hh>
#include <homlab/vcsp.hh>

#include <string>
#include <string_view>
#include <variant>

namespace homlab
{
    /*
     * Line-oriented ASCII formats. Tokens are whitespace separated, '#' starts a
     * comment, blank lines are ignored. Parsers throw InvalidInput naming the
     * offending line. Writers emit text that parses back to an equal structure.
     *
     *   graph N | digraph N        then   e u v | a u v
     *   coloring                   c v color        (one line per vertex 1..n)
     *   layering                   layer i v1 v2 ...  (i = 0, 1, ... in order)
     *   track layout               coloring lines plus   order v1 ... vN
     *   tree decomposition         bag x v1 ...   and   tedge x y
     *   arc costs                  cost gu gv hu hv VALUE
     *   vcsp                       vcsp D N, then per term   term r v1 ... vr
     *                              followed by rows   t d1 ... dr VALUE
     *                              (unlisted rows are inf)
     *   triple                     triple D, then   f i a b c value   (i in 1..3;
     *                              unlisted entries are projections)
     *   language                   language D, then   relation NAME   followed by
     *                              p a b   lines
     *
     * VALUE is an integer, p/q, or inf.
     */

    using AnyGraph = std::variant<Graph, DiGraph>;

    auto parse_graph(std::string_view text) -> AnyGraph;
    /// Accepts only the undirected header.
    auto parse_undirected(std::string_view text) -> Graph;
    /// Accepts both headers; an undirected graph becomes its symmetric digraph.
    auto parse_directed(std::string_view text) -> DiGraph;
    auto write_graph(const Graph & g) -> std::string;
    auto write_graph(const DiGraph & g) -> std::string;

    /// n < 0 infers the vertex count from the largest vertex listed.
    auto parse_coloring(std::string_view text, int n = -1) -> Coloring;
    auto write_coloring(const Coloring & c) -> std::string;

    auto parse_layering(std::string_view text, int n) -> Layering;
    auto write_layering(const Layering & layering) -> std::string;

    auto parse_track_layout(std::string_view text, int n) -> TrackLayout;
    auto write_track_layout(const TrackLayout & layout) -> std::string;

    auto parse_tree_decomposition(std::string_view text) -> TreeDecomposition;
    auto write_tree_decomposition(const TreeDecomposition & td) -> std::string;

    /// Arc pairs not listed get default_cost.
    auto parse_costs(std::string_view text, const DiGraph & g, const DiGraph & h, const ExtRational & default_cost) -> ValHomInstance;
    /// Every arc pair is listed.
    auto write_costs(const ValHomInstance & instance) -> std::string;

    auto parse_vcsp(std::string_view text) -> VcspInstance;
    /// Lists finite rows only.
    auto write_vcsp(const VcspInstance & instance) -> std::string;

    auto parse_triple(std::string_view text) -> Triple;
    /// Lists only entries that differ from the projections.
    auto write_triple(const Triple & triple) -> std::string;

    auto parse_language(std::string_view text) -> CrispLanguage;
    auto write_language(const CrispLanguage & language) -> std::string;

    /// Throws IoError.
    auto read_file(const std::string & path) -> std::string;
    auto write_file(const std::string & path, std::string_view contents) -> void;
}

#endif
