#pragma once

// Slow, obviously-correct reference implementations that share no code with the
// library beyond Graph's adjacency queries.

#include <satforge/graph.hh>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle
{
    using satforge::Graph;
    using satforge::Vertex;

    inline auto is_clique(const Graph & g, const std::vector<Vertex> & vs) -> bool
    {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (! g.adjacent(vs[i], vs[j]))
                    return false;
        return true;
    }

    // Every r-subset, tested pair by pair.
    inline auto count_cliques(const Graph & g, unsigned r) -> std::uint64_t
    {
        auto n = g.order();
        if (r > n)
            return 0;
        std::vector<bool> chosen(n, false);
        std::fill(chosen.begin(), chosen.begin() + r, true);
        std::uint64_t total = 0;
        do {
            std::vector<Vertex> vs;
            for (Vertex v = 0; v < n; ++v)
                if (chosen[v])
                    vs.push_back(v);
            total += is_clique(g, vs);
        } while (std::prev_permutation(chosen.begin(), chosen.end()));
        return total;
    }

    // Adds each missing edge and recounts.
    inline auto is_saturated(const Graph & g, unsigned s) -> bool
    {
        if (oracle::count_cliques(g, s) != 0)
            return false;
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (! g.adjacent(u, v)) {
                    auto h = g;
                    h.add_edge(u, v);
                    if (oracle::count_cliques(h, s) == 0)
                        return false;
                }
        return true;
    }

    // Upper-triangle adjacency bits under a relabelling, as an integer.
    inline auto code_under(const Graph & g, const std::vector<Vertex> & perm) -> std::uint64_t
    {
        std::uint64_t code = 0;
        auto n = g.order();
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j)
                code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1 : 0);
        return code;
    }

    // Smallest code over all n! relabellings; n <= 8.
    inline auto min_code(const Graph & g) -> std::uint64_t
    {
        std::vector<Vertex> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        auto best = oracle::code_under(g, perm);
        while (std::next_permutation(perm.begin(), perm.end()))
            best = std::min(best, oracle::code_under(g, perm));
        return best;
    }

    inline auto isomorphic(const Graph & g, const Graph & h) -> bool
    {
        return g.order() == h.order() && g.edge_count() == h.edge_count() && oracle::min_code(g) == oracle::min_code(h);
    }

    inline auto graph_from_mask(std::size_t n, std::uint64_t mask) -> Graph
    {
        Graph g(n);
        std::size_t bit = 0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v, ++bit)
                if ((mask >> bit) & 1)
                    g.add_edge(u, v);
        return g;
    }

    // One representative per isomorphism class, by running over all labelled graphs.
    inline auto all_classes(std::size_t n) -> std::map<std::uint64_t, Graph>
    {
        std::map<std::uint64_t, Graph> classes;
        std::uint64_t pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{ 1 } << pairs); ++mask) {
            auto g = graph_from_mask(n, mask);
            classes.try_emplace(oracle::min_code(g), g);
        }
        return classes;
    }

    inline auto random_graph(std::size_t n, double p, std::mt19937_64 & rng) -> Graph
    {
        std::bernoulli_distribution edge(p);
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (edge(rng))
                    g.add_edge(u, v);
        return g;
    }

    inline auto random_permutation(std::size_t n, std::mt19937_64 & rng) -> std::vector<Vertex>
    {
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        return perm;
    }

    inline auto min_degree(const Graph & g) -> std::size_t
    {
        std::size_t best = g.order();
        for (Vertex v = 0; v < g.order(); ++v) {
            std::size_t d = 0;
            for (Vertex w = 0; w < g.order(); ++w)
                d += w != v && g.adjacent(v, w);
            best = std::min(best, d);
        }
        return best;
    }
}
