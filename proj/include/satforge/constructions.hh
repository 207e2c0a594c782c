#pragma once

#include <satforge/labeled_graph.hh>
#include <satforge/support.hh>

#include <cstddef>
#include <string>
#include <vector>

namespace satforge
{
    /// K_{s-2} joined to an independent set, n vertices in all. Labels "clique",
    /// "independent".
    auto ehm(unsigned s, std::size_t n) -> LabeledGraph;

    /// (K_{s-1} - e) joined to an independent set, n vertices in all. The missing
    /// edge is between vertices 0 and 1. Labels "clique" (the K_{s-1} - e part),
    /// "independent".
    auto near_clique_graph(unsigned s, std::size_t n) -> LabeledGraph;

    /// Wheel on the 5-cycle a1..a5 with its hub blown up to K_{s-3} and a1, a3, a4 blown
    /// up to independent sets of sizes m1, m3, m4. Order: hub, a1, a2, a3, a4, a5, each
    /// labelled. s = 3 leaves the hub empty and gives a blown-up 5-cycle.
    auto w_graph(unsigned s, std::size_t m1, std::size_t m3, std::size_t m4) -> LabeledGraph;

    /// The eight-vertex structure behind the h family, s = 4: a1..a4, then
    /// b123, b124, b134, b234.
    auto h_core() -> SupportStructure;

    /// Two complete (s-2)-partite graphs with parts of size 2, a_i joined to
    /// b_i..b_{i+s-3} cyclically. Order: a1..a_{2(s-2)}, then b1..b_{2(s-2)}.
    auto f_core(unsigned s) -> SupportStructure;

    /// Nine A vertices in three triangles, one per parallel class of the affine plane
    /// on points 1..9, and 27 B vertices in nine triangles; s = 5. A is ordered class
    /// by class, B as b_{1,1}, b_{1,2}, b_{1,3}, b_{2,1}, ...
    auto r_core() -> SupportStructure;

    /// The three line classes used by r_core, each as three point triples.
    auto r_core_line_classes() -> std::vector<std::vector<std::vector<unsigned>>>;

    /// Core, completion and padding for each family. Each throws PreconditionError
    /// naming the violated hypothesis.
    auto h_graph(unsigned t, std::size_t n) -> LabeledGraph;
    auto f_graph(unsigned s, unsigned t, std::size_t n) -> LabeledGraph;
    auto r_graph(unsigned t, std::size_t n) -> LabeledGraph;

    /// Identifiers "G1".."G12".
    auto appendix_ids() -> std::vector<std::string>;

    /// Gadget subgraph: x, then x1..x4, then the named y vertices. Every vertex carries
    /// its own label ("x", "x2", "y134", "z124p" for a primed z_124, ...) and "Y"
    /// collects the y vertices. Throws PreconditionError for an unknown id.
    auto appendix_graph(const std::string & id) -> LabeledGraph;

    /// Name of vertex v under the singleton labels of g, or its index when it has none.
    auto vertex_name(const LabeledGraph & g, Vertex v) -> std::string;
}
