#include <satforge/canonical.hh>
#include <satforge/errors.hh>
#include <satforge/graph_io.hh>

#include <algorithm>
#include <cstdint>
#include <map>

using std::size_t;
using std::span;
using std::string;
using std::uint64_t;
using std::vector;

namespace satforge
{
    namespace
    {
        using Cells = vector<vector<Vertex>>;

        // Splits every cell by the vector of neighbour counts into each current cell,
        // until nothing splits. Sub-cells are ordered by that vector, so the result
        // depends only on the graph and the incoming ordered partition.
        auto refine(const Graph & g, Cells & cells) -> void
        {
            while (true) {
                vector<VertexSet> cell_sets(cells.size());
                for (size_t c = 0; c < cells.size(); ++c)
                    for (auto v : cells[c])
                        cell_sets[c].set(v);

                Cells next;
                next.reserve(cells.size());
                for (auto & cell : cells) {
                    if (cell.size() == 1) {
                        next.push_back(cell);
                        continue;
                    }

                    std::map<vector<size_t>, vector<Vertex>> groups;
                    for (auto v : cell) {
                        vector<size_t> signature(cells.size());
                        for (size_t c = 0; c < cells.size(); ++c)
                            signature[c] = g.neighbors(v).intersection_count(cell_sets[c]);
                        groups[signature].push_back(v);
                    }
                    for (auto & [_, members] : groups)
                        next.push_back(std::move(members));
                }

                bool changed = next.size() != cells.size();
                cells = std::move(next);
                if (! changed)
                    return;
            }
        }

        auto twins(const Graph & g, Vertex u, Vertex v) -> bool
        {
            auto nu = g.neighbors(u), nv = g.neighbors(v);
            nu.reset(v);
            nv.reset(u);
            return nu == nv;
        }

        struct Searcher
        {
            const Graph & g;
            vector<uint64_t> best_certificate;
            vector<Vertex> best_ordering;
            bool have_best = false;

            auto certificate_of(const vector<Vertex> & ordering) const -> vector<uint64_t>
            {
                auto n = ordering.size();
                auto pairs = n * (n > 0 ? n - 1 : 0) / 2;
                vector<uint64_t> words((pairs + 63) / 64, 0);
                size_t k = 0;
                for (size_t j = 1; j < n; ++j)
                    for (size_t i = 0; i < j; ++i, ++k)
                        if (g.adjacent(ordering[i], ordering[j]))
                            words[k / 64] |= uint64_t{ 1 } << (63 - k % 64);
                return words;
            }

            auto leaf(const Cells & cells) -> void
            {
                vector<Vertex> ordering;
                ordering.reserve(cells.size());
                for (auto & cell : cells)
                    ordering.push_back(cell.front());

                auto certificate = certificate_of(ordering);
                if (! have_best || certificate < best_certificate) {
                    best_certificate = std::move(certificate);
                    best_ordering = std::move(ordering);
                    have_best = true;
                }
            }

            auto explore(Cells cells) -> void
            {
                refine(g, cells);

                auto target = std::find_if(cells.begin(), cells.end(), [] (const auto & c) { return c.size() > 1; });
                if (target == cells.end()) {
                    leaf(cells);
                    return;
                }

                // Swapping two twins in the target cell is an automorphism that fixes
                // everything individualised so far, so their subtrees give the same
                // leaves and one representative suffices.
                auto target_index = size_t(target - cells.begin());
                vector<Vertex> representatives;
                for (auto v : *target)
                    if (std::none_of(representatives.begin(), representatives.end(), [&] (Vertex r) { return twins(g, r, v); }))
                        representatives.push_back(v);

                for (auto v : representatives) {
                    Cells child;
                    child.reserve(cells.size() + 1);
                    for (size_t c = 0; c < cells.size(); ++c) {
                        if (c != target_index) {
                            child.push_back(cells[c]);
                            continue;
                        }
                        child.push_back({ v });
                        vector<Vertex> rest;
                        for (auto w : cells[c])
                            if (w != v)
                                rest.push_back(w);
                        child.push_back(std::move(rest));
                    }
                    explore(std::move(child));
                }
            }
        };

        auto check_order(const Graph & g, const CanonicalOptions & options) -> void
        {
            if (g.order() > canonical_exact_cap && ! options.allow_large)
                throw PreconditionError{ "canonical forms are capped at order " + std::to_string(canonical_exact_cap) +
                    " unless large orders are explicitly allowed (order " + std::to_string(g.order()) + ")" };
        }
    }

    auto canonical_ordering(const Graph & g, span<const int> colours, const CanonicalOptions & options) -> vector<Vertex>
    {
        check_order(g, options);
        if (! colours.empty() && colours.size() != g.order())
            throw PreconditionError{ "colour vector length does not match the graph order" };
        if (g.order() == 0)
            return {};

        std::map<int, vector<Vertex>> by_colour;
        for (Vertex v = 0; v < g.order(); ++v)
            by_colour[colours.empty() ? 0 : colours[v]].push_back(v);
        Cells initial;
        for (auto & [_, members] : by_colour)
            initial.push_back(std::move(members));

        Searcher searcher{ g, {}, {}, false };
        searcher.explore(std::move(initial));
        return searcher.best_ordering;
    }

    auto canonical_form(const Graph & g, const CanonicalOptions & options) -> string
    {
        return canonical_form(g, span<const int>{}, options);
    }

    auto canonical_form(const Graph & g, span<const int> colours, const CanonicalOptions & options) -> string
    {
        auto ordering = canonical_ordering(g, colours, options);
        vector<Vertex> image(g.order());
        for (size_t i = 0; i < ordering.size(); ++i)
            image[ordering[i]] = Vertex(i);
        auto result = to_graph6(g.permuted(image));
        if (! colours.empty()) {
            result.push_back('|');
            for (auto v : ordering)
                result += std::to_string(colours[v]) + ",";
        }
        return result;
    }

    auto are_isomorphic(const Graph & g, const Graph & h, const CanonicalOptions & options) -> bool
    {
        if (g.order() != h.order() || g.edge_count() != h.edge_count())
            return false;
        if (degree_sequence(g) != degree_sequence(h))
            return false;
        return canonical_form(g, options) == canonical_form(h, options);
    }
}
