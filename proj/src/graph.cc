#include <satforge/errors.hh>
#include <satforge/graph.hh>

#include <algorithm>
#include <string>

using std::map;
using std::optional;
using std::size_t;
using std::span;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace satforge
{
    namespace
    {
        auto count_extensions(const Graph & g, VertexSet candidates, unsigned k) -> uint64_t
        {
            if (k == 0)
                return 1;
            if (k == 1)
                return candidates.count();

            uint64_t total = 0;
            while (! candidates.empty()) {
                auto v = candidates.first();
                candidates.reset(v);
                if (k == 2)
                    total += candidates.intersection_count(g.neighbors(v));
                else
                    total += count_extensions(g, candidates & g.neighbors(v), k - 1);
            }
            return total;
        }

        auto extend_clique(const Graph & g, VertexSet candidates, unsigned k, vector<Vertex> & partial) -> bool
        {
            if (k == 0)
                return true;
            if (candidates.count() < k)
                return false;

            while (! candidates.empty()) {
                auto v = candidates.first();
                candidates.reset(v);
                partial.push_back(v);
                if (extend_clique(g, candidates & g.neighbors(v), k - 1, partial))
                    return true;
                partial.pop_back();
                if (candidates.count() < k)
                    return false;
            }
            return false;
        }
    }

    auto make_edge(Vertex u, Vertex v) -> Edge
    {
        return u < v ? Edge{ u, v } : Edge{ v, u };
    }

    Graph::Graph(size_t order) :
        _order(order)
    {
        if (order > max_order)
            throw PreconditionError{ "graph order " + to_string(order) + " exceeds the cap of " + to_string(max_order) };
        _rows.resize(order);
    }

    auto Graph::from_edges(size_t order, span<const Edge> edges) -> Graph
    {
        Graph result(order);
        for (auto & [u, v] : edges)
            result.add_edge(u, v);
        return result;
    }

    auto Graph::from_edges(size_t order, std::initializer_list<Edge> edges) -> Graph
    {
        return from_edges(order, span<const Edge>{ edges.begin(), edges.size() });
    }

    auto Graph::check_pair(Vertex u, Vertex v) const -> void
    {
        if (u >= _order || v >= _order)
            throw PreconditionError{ "edge endpoint out of range: (" + to_string(u) + ", " + to_string(v) + ") with order " + to_string(_order) };
        if (u == v)
            throw PreconditionError{ "loop at vertex " + to_string(u) };
    }

    auto Graph::add_edge(Vertex u, Vertex v) -> void
    {
        check_pair(u, v);
        _rows[u].set(v);
        _rows[v].set(u);
    }

    auto Graph::remove_edge(Vertex u, Vertex v) -> void
    {
        check_pair(u, v);
        _rows[u].reset(v);
        _rows[v].reset(u);
    }

    auto Graph::edge_count() const -> size_t
    {
        size_t twice = 0;
        for (auto & row : _rows)
            twice += row.count();
        return twice / 2;
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (Vertex u = 0; u < _order; ++u)
            for (auto v : _rows[u])
                if (v > u)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::permuted(span<const Vertex> image) const -> Graph
    {
        if (image.size() != _order)
            throw PreconditionError{ "permutation has the wrong length" };
        VertexSet seen;
        for (auto v : image) {
            if (v >= _order || seen.test(v))
                throw PreconditionError{ "not a permutation" };
            seen.set(v);
        }

        Graph result(_order);
        for (auto [u, v] : edges())
            result.add_edge(image[u], image[v]);
        return result;
    }

    auto count_cliques(const Graph & g, unsigned r) -> CliqueCount
    {
        return CliqueCount{ r, count_cliques_within(g, g.vertices(), r) };
    }

    auto count_cliques_within(const Graph & g, const VertexSet & within, unsigned r) -> uint64_t
    {
        return count_extensions(g, within, r);
    }

    auto contains_clique(const Graph & g, const VertexSet & within, unsigned k) -> bool
    {
        vector<Vertex> scratch;
        return extend_clique(g, within, k, scratch);
    }

    auto find_clique(const Graph & g, const VertexSet & within, unsigned k) -> optional<vector<Vertex>>
    {
        vector<Vertex> partial;
        if (extend_clique(g, within, k, partial))
            return partial;
        return std::nullopt;
    }

    auto is_clique_free(const Graph & g, unsigned s) -> bool
    {
        return ! contains_clique(g, g.vertices(), s);
    }

    auto addition_creates_clique(const Graph & g, Vertex u, Vertex v, unsigned k) -> bool
    {
        if (k < 2)
            return true;
        return contains_clique(g, g.neighbors(u) & g.neighbors(v), k - 2);
    }

    auto is_saturated(const Graph & g, unsigned s) -> bool
    {
        if (s < 2)
            throw PreconditionError{ "saturation needs a clique order of at least 2" };
        if (! is_clique_free(g, s))
            return false;
        for (Vertex u = 0; u < g.order(); ++u) {
            auto non_neighbors = g.vertices() - g.neighbors(u);
            for (auto v : non_neighbors)
                if (v > u && ! addition_creates_clique(g, u, v, s))
                    return false;
        }
        return true;
    }

    auto min_degree(const Graph & g) -> size_t
    {
        if (g.order() == 0)
            throw PreconditionError{ "minimum degree of the null graph" };
        size_t result = g.order();
        for (Vertex v = 0; v < g.order(); ++v)
            result = std::min(result, g.degree(v));
        return result;
    }

    auto max_degree(const Graph & g) -> size_t
    {
        size_t result = 0;
        for (Vertex v = 0; v < g.order(); ++v)
            result = std::max(result, g.degree(v));
        return result;
    }

    auto degree_sequence(const Graph & g) -> vector<size_t>
    {
        vector<size_t> result;
        for (Vertex v = 0; v < g.order(); ++v)
            result.push_back(g.degree(v));
        std::sort(result.begin(), result.end(), std::greater<>{});
        return result;
    }

    auto common_neighborhood(const Graph & g, Vertex u, Vertex v) -> VertexSet
    {
        if (u >= g.order() || v >= g.order())
            throw PreconditionError{ "vertex out of range" };
        if (u == v)
            throw PreconditionError{ "common neighbourhood needs two distinct vertices" };
        return g.neighbors(u) & g.neighbors(v);
    }

    auto triangles_per_edge(const Graph & g) -> map<Edge, uint64_t>
    {
        map<Edge, uint64_t> result;
        for (auto [u, v] : g.edges())
            result.emplace(Edge{ u, v }, g.neighbors(u).intersection_count(g.neighbors(v)));
        return result;
    }

    auto disjoint_union(const Graph & g, const Graph & h) -> Graph
    {
        Graph result(g.order() + h.order());
        for (auto [u, v] : g.edges())
            result.add_edge(u, v);
        auto shift = Vertex(g.order());
        for (auto [u, v] : h.edges())
            result.add_edge(u + shift, v + shift);
        return result;
    }

    auto join(const Graph & g, const Graph & h) -> Graph
    {
        auto result = disjoint_union(g, h);
        auto shift = Vertex(g.order());
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = 0; v < h.order(); ++v)
                result.add_edge(u, v + shift);
        return result;
    }

    auto complement(const Graph & g) -> Graph
    {
        Graph result(g.order());
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (! g.adjacent(u, v))
                    result.add_edge(u, v);
        return result;
    }

    auto induced_subgraph(const Graph & g, const VertexSet & keep) -> Graph
    {
        auto members = keep.to_vector();
        Graph result(members.size());
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i + 1; j < members.size(); ++j)
                if (g.adjacent(members[i], members[j]))
                    result.add_edge(Vertex(i), Vertex(j));
        return result;
    }

    auto empty_graph(size_t n) -> Graph
    {
        return Graph(n);
    }

    auto complete_graph(size_t n) -> Graph
    {
        Graph result(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                result.add_edge(u, v);
        return result;
    }

    auto cycle_graph(size_t n) -> Graph
    {
        if (n < 3)
            throw PreconditionError{ "a cycle needs at least 3 vertices" };
        Graph result(n);
        for (Vertex v = 0; v < n; ++v)
            result.add_edge(v, Vertex((v + 1) % n));
        return result;
    }

    auto path_graph(size_t n) -> Graph
    {
        Graph result(n);
        for (Vertex v = 0; v + 1 < n; ++v)
            result.add_edge(v, v + 1);
        return result;
    }

    auto star_graph(size_t leaves) -> Graph
    {
        Graph result(leaves + 1);
        for (Vertex v = 1; v <= leaves; ++v)
            result.add_edge(0, v);
        return result;
    }

    auto petersen_graph() -> Graph
    {
        Graph result(10);
        for (Vertex v = 0; v < 5; ++v) {
            result.add_edge(v, (v + 1) % 5);
            result.add_edge(v, v + 5);
            result.add_edge(v + 5, (v + 2) % 5 + 5);
        }
        return result;
    }

    auto complete_multipartite_graph(span<const size_t> part_sizes) -> Graph
    {
        size_t total = 0;
        vector<size_t> part_of;
        for (size_t p = 0; p < part_sizes.size(); ++p) {
            total += part_sizes[p];
            part_of.insert(part_of.end(), part_sizes[p], p);
        }
        Graph result(total);
        for (Vertex u = 0; u < total; ++u)
            for (Vertex v = u + 1; v < total; ++v)
                if (part_of[u] != part_of[v])
                    result.add_edge(u, v);
        return result;
    }
}
