#pragma once

#include <satforge/graph.hh>

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace satforge
{
    /// A subset of neighbour positions {1, ..., d}: bit i-1 set means position i.
    using IndexSet = unsigned;

    /// "134" for {1, 3, 4}.
    auto index_set_name(IndexSet s) -> std::string;

    /// Inverse of index_set_name. Throws PreconditionError on characters other than 1-9.
    auto parse_index_set(const std::string & name) -> IndexSet;

    /// Edges among the neighbours of x, as pairs of 1-based positions with first < second.
    using PositionEdges = std::vector<std::pair<unsigned, unsigned>>;

    /// The neighbours x_1..x_d of x, in ascending vertex order, and every vertex outside
    /// N[x] grouped by the set of positions it is adjacent to.
    struct NeighborhoodPartition
    {
        Vertex x = 0;
        std::vector<Vertex> neighbors;
        /// Only non-empty cells are stored; every vertex of Y lies in exactly one.
        std::map<IndexSet, VertexSet> cells;
        PositionEdges nx_edges;

        auto degree() const -> unsigned { return unsigned(neighbors.size()); }
        auto cell(IndexSet s) const -> VertexSet;
        auto outside() const -> VertexSet;
    };

    inline constexpr unsigned max_partition_degree = 12;

    /// Requires degree(x) = 4 unless any_degree is set, in which case any degree up to
    /// max_partition_degree is accepted.
    auto partition_neighborhood(const Graph & g, Vertex x, bool any_degree = false) -> NeighborhoodPartition;

    /// Does the set of positions contain both ends of some edge of nx_edges?
    auto contains_position_edge(IndexSet s, const PositionEdges & nx_edges) -> bool;

    /// Every T containing i that does not contain both ends of an nx edge lying inside S.
    auto lemma_targets(IndexSet s, unsigned i, const PositionEdges & nx_edges, unsigned degree = 4) -> std::set<IndexSet>;

    /// Sharper target family obtained by following where the forced edge in
    /// N(y) & N(x_i) can sit. Either one end is a neighbour x_j of x (j in S, x_j ~ x_i),
    /// so the other lies in a cell containing i and j; or both ends lie in cells T, T'
    /// with an edge between them, in which case y is adjacent to both and one of the
    /// two suffices. Cells listed in known_empty are excluded.
    auto rule_targets(IndexSet s, unsigned i, const PositionEdges & nx_edges, unsigned degree = 4,
        const std::set<IndexSet> & known_empty = {}) -> std::set<IndexSet>;

    struct RuleViolation
    {
        Vertex y;
        IndexSet s;
        unsigned i;

        auto operator== (const RuleViolation &) const -> bool = default;
    };

    enum class TargetFamily
    {
        lemma,
        refined
    };

    /// For every y in a non-empty cell V_S and every position i outside S, checks that
    /// y has a neighbour in some V_T with T among the targets. The refined family is
    /// evaluated with every empty cell of the partition marked as known empty.
    auto check_rules_lemma(const Graph & g, const NeighborhoodPartition & p, TargetFamily family = TargetFamily::lemma)
        -> std::vector<RuleViolation>;

    enum class CellRelation
    {
        complete,
        empty,
        mixed
    };

    auto to_string(CellRelation r) -> std::string;

    /// Adjacency between V_S and V_T; complete when either cell is empty.
    auto cell_relation(const Graph & g, const NeighborhoodPartition & p, IndexSet s, IndexSet t) -> CellRelation;

    /// When the nx edges form a 4-cycle, the cells V_jk for its edges jk must induce a
    /// K_4-free 4-partite graph in which every missing pair between different parts
    /// would complete a K_4 inside those parts. Throws PreconditionError for any other
    /// edge pattern.
    auto check_rule5(const Graph & g, const NeighborhoodPartition & p) -> bool;

    enum class Lb3Case
    {
        every_edge_in_triangle,
        split_edge
    };

    auto to_string(Lb3Case c) -> std::string;

    /// Evidence that a K_s-saturated graph with minimum degree t has at least
    /// C(s-2,2)(n-2) triangles.
    struct Lb3Certificate
    {
        unsigned s = 0;
        unsigned t = 0;
        std::size_t n = 0;
        std::size_t edge_count = 0;
        std::uint64_t triangles = 0;
        std::uint64_t bound = 0;
        Lb3Case kind = Lb3Case::every_edge_in_triangle;

        /// every_edge_in_triangle: an edge with the fewest triangles and that number.
        Edge min_edge = { 0, 0 };
        std::uint64_t min_edge_triangles = 0;

        /// split_edge: the triangle-free edge xy, A = N(x) - y, B = N(y) - x, C the rest,
        /// and for each vertex of A, B, C a K_{s-2} it spans triangles with (two for C).
        Edge split = { 0, 0 };
        VertexSet A, B, C;
        std::vector<std::pair<Vertex, std::vector<Vertex>>> witnesses;

        /// Distinct triangles vouched for by the certificate.
        std::uint64_t certified = 0;
    };

    /// Throws PreconditionError unless s >= 4, g is K_s-saturated with minimum degree t,
    /// t >= 6 C(s-2,2) and n >= 2s-2. Throws VerificationError if the count falls short.
    auto verify_lb3(const Graph & g, unsigned s, unsigned t) -> Lb3Certificate;

    /// Recomputes every field of the certificate against g.
    auto revalidate(const Graph & g, const Lb3Certificate & certificate) -> bool;

    enum class LowDegreeKind
    {
        ehm,
        near_clique,
        w,
        above_threshold
    };

    auto to_string(LowDegreeKind k) -> std::string;

    struct LowDegreeClass
    {
        LowDegreeKind kind = LowDegreeKind::above_threshold;
        std::size_t min_degree = 0;
        /// Blow-up sizes for the w shape, in the form (m1, 1, m3, m4, 1) with m3 <= m4
        /// and the lexicographically smallest such reading.
        std::size_t m1 = 0, m3 = 0, m4 = 0;

        auto operator== (const LowDegreeClass &) const -> bool = default;
    };

    /// Minimum degree s-2 must be the ehm graph, s-1 one of the near-clique or w shapes;
    /// anything higher is above the threshold. Throws PreconditionError if g is not
    /// K_s-saturated and VerificationError if a low-degree graph matches no shape.
    auto classify_low_degree(const Graph & g, unsigned s) -> LowDegreeClass;
}
