#pragma once

#include <satforge/vertex_set.hh>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace satforge
{
    /// Unordered vertex pair, always stored with first < second.
    using Edge = std::pair<Vertex, Vertex>;

    auto make_edge(Vertex u, Vertex v) -> Edge;

    /// Simple undirected graph on vertices 0..order()-1, one bitset row per vertex.
    /// Built single-threaded; all queries are const and safe to share.
    class Graph
    {
        public:
            static constexpr std::size_t max_order = VertexSet::capacity;

            Graph() = default;
            explicit Graph(std::size_t order);

            /// Duplicate pairs collapse. Throws PreconditionError on a loop or an
            /// endpoint outside [0, order).
            static auto from_edges(std::size_t order, std::span<const Edge> edges) -> Graph;
            static auto from_edges(std::size_t order, std::initializer_list<Edge> edges) -> Graph;

            auto order() const -> std::size_t { return _order; }
            auto vertices() const -> VertexSet { return VertexSet::first_n(_order); }
            auto neighbors(Vertex v) const -> const VertexSet & { return _rows[v]; }
            auto degree(Vertex v) const -> std::size_t { return _rows[v].count(); }
            auto adjacent(Vertex u, Vertex v) const -> bool { return _rows[u].test(v); }

            auto edge_count() const -> std::size_t;
            auto edges() const -> std::vector<Edge>;

            auto add_edge(Vertex u, Vertex v) -> void;
            auto remove_edge(Vertex u, Vertex v) -> void;

            /// Relabels vertex v as image[v]; image must be a permutation of 0..order()-1.
            auto permuted(std::span<const Vertex> image) const -> Graph;

            auto operator== (const Graph &) const -> bool = default;

        private:
            std::size_t _order = 0;
            std::vector<VertexSet> _rows;

            auto check_pair(Vertex u, Vertex v) const -> void;
    };

    struct CliqueCount
    {
        unsigned r;
        std::uint64_t count;

        auto operator== (const CliqueCount &) const -> bool = default;
    };

    /// Number of K_r. r = 0 counts the empty clique once; r = 1 gives the order.
    auto count_cliques(const Graph & g, unsigned r) -> CliqueCount;

    /// Number of K_r inside the subgraph induced by within.
    auto count_cliques_within(const Graph & g, const VertexSet & within, unsigned r) -> std::uint64_t;

    auto contains_clique(const Graph & g, const VertexSet & within, unsigned k) -> bool;
    auto find_clique(const Graph & g, const VertexSet & within, unsigned k) -> std::optional<std::vector<Vertex>>;

    auto is_clique_free(const Graph & g, unsigned s) -> bool;

    /// Would adding the missing edge uv create a K_k through u and v? True exactly when
    /// the common neighbourhood of u and v holds a K_{k-2}.
    auto addition_creates_clique(const Graph & g, Vertex u, Vertex v, unsigned k) -> bool;

    /// K_s-free, and every non-adjacent pair has a K_{s-2} in its common neighbourhood.
    auto is_saturated(const Graph & g, unsigned s) -> bool;

    auto min_degree(const Graph & g) -> std::size_t;
    auto max_degree(const Graph & g) -> std::size_t;
    auto degree_sequence(const Graph & g) -> std::vector<std::size_t>;

    auto common_neighborhood(const Graph & g, Vertex u, Vertex v) -> VertexSet;

    /// t(e) for every edge e: the number of triangles through e.
    auto triangles_per_edge(const Graph & g) -> std::map<Edge, std::uint64_t>;

    /// Vertices of g keep their indices, vertices of h are shifted by g.order().
    auto join(const Graph & g, const Graph & h) -> Graph;
    auto disjoint_union(const Graph & g, const Graph & h) -> Graph;
    auto complement(const Graph & g) -> Graph;

    /// Induced subgraph, with the members of keep renumbered in ascending order.
    auto induced_subgraph(const Graph & g, const VertexSet & keep) -> Graph;

    auto empty_graph(std::size_t n) -> Graph;
    auto complete_graph(std::size_t n) -> Graph;
    auto cycle_graph(std::size_t n) -> Graph;
    auto path_graph(std::size_t n) -> Graph;
    auto star_graph(std::size_t leaves) -> Graph;
    auto petersen_graph() -> Graph;
    auto complete_multipartite_graph(std::span<const std::size_t> part_sizes) -> Graph;
}
