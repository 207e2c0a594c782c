#include <satforge/analysis.hh>
#include <satforge/errors.hh>

#include <algorithm>
#include <string>

using std::set;
using std::string;
using std::vector;

namespace satforge
{
    using std::to_string;

    namespace
    {
        auto bit(unsigned position) -> IndexSet
        {
            return IndexSet{ 1 } << (position - 1);
        }

        auto check_position(unsigned i, unsigned degree) -> void
        {
            if (i < 1 || i > degree)
                throw PreconditionError{ "position " + std::to_string(i) + " outside 1.." + std::to_string(degree) };
        }
    }

    auto index_set_name(IndexSet s) -> string
    {
        string result;
        for (unsigned i = 1; s >> (i - 1); ++i)
            if (s & bit(i))
                result += std::to_string(i);
        return result;
    }

    auto parse_index_set(const string & name) -> IndexSet
    {
        IndexSet result = 0;
        for (auto c : name) {
            if (c < '1' || c > '9')
                throw PreconditionError{ "index set '" + name + "' must use digits 1-9" };
            result |= bit(unsigned(c - '0'));
        }
        return result;
    }

    auto NeighborhoodPartition::cell(IndexSet s) const -> VertexSet
    {
        auto found = cells.find(s);
        return found == cells.end() ? VertexSet{} : found->second;
    }

    auto NeighborhoodPartition::outside() const -> VertexSet
    {
        VertexSet result;
        for (auto & [_, members] : cells)
            result |= members;
        return result;
    }

    auto partition_neighborhood(const Graph & g, Vertex x, bool any_degree) -> NeighborhoodPartition
    {
        if (x >= g.order())
            throw PreconditionError{ "vertex out of range" };
        auto degree = g.degree(x);
        if (! any_degree && degree != 4)
            throw PreconditionError{ "partition needs a vertex of degree 4 (vertex " + std::to_string(x) + " has degree " +
                std::to_string(degree) + ")" };
        if (degree > max_partition_degree)
            throw PreconditionError{ "partition supports degrees up to " + std::to_string(max_partition_degree) };

        NeighborhoodPartition p;
        p.x = x;
        p.neighbors = g.neighbors(x).to_vector();

        for (unsigned i = 0; i < p.neighbors.size(); ++i)
            for (unsigned j = i + 1; j < p.neighbors.size(); ++j)
                if (g.adjacent(p.neighbors[i], p.neighbors[j]))
                    p.nx_edges.emplace_back(i + 1, j + 1);

        auto closed = g.neighbors(x);
        closed.set(x);
        for (auto y : g.vertices() - closed) {
            IndexSet trace = 0;
            for (unsigned i = 0; i < p.neighbors.size(); ++i)
                if (g.adjacent(y, p.neighbors[i]))
                    trace |= bit(i + 1);
            p.cells[trace].set(y);
        }
        return p;
    }

    auto contains_position_edge(IndexSet s, const PositionEdges & nx_edges) -> bool
    {
        return std::any_of(nx_edges.begin(), nx_edges.end(), [&] (auto & e) { return (s & bit(e.first)) && (s & bit(e.second)); });
    }

    auto lemma_targets(IndexSet s, unsigned i, const PositionEdges & nx_edges, unsigned degree) -> set<IndexSet>
    {
        check_position(i, degree);
        if (s & bit(i))
            throw PreconditionError{ "position " + std::to_string(i) + " lies in S" };

        set<IndexSet> result;
        for (IndexSet t = 1; t < (IndexSet{ 1 } << degree); ++t)
            if ((t & bit(i)) && ! contains_position_edge(s & t, nx_edges))
                result.insert(t);
        return result;
    }

    auto rule_targets(IndexSet s, unsigned i, const PositionEdges & nx_edges, unsigned degree, const set<IndexSet> & known_empty)
        -> set<IndexSet>
    {
        check_position(i, degree);
        if (s & bit(i))
            throw PreconditionError{ "position " + std::to_string(i) + " lies in S" };

        // Cells that could hold a common neighbour of y and x_i: they contain i, are not
        // ruled out by an nx edge, and would not close a K_4 with y and an nx edge in S.
        vector<IndexSet> candidates;
        for (IndexSet t = 1; t < (IndexSet{ 1 } << degree); ++t)
            if ((t & bit(i)) && contains_position_edge(t, nx_edges) && ! known_empty.contains(t) &&
                    ! contains_position_edge(s & t, nx_edges))
                candidates.push_back(t);

        set<IndexSet> result;
        for (auto & [j, k] : nx_edges) {
            unsigned other = j == i ? k : k == i ? j : 0;
            if (other == 0 || ! (s & bit(other)))
                continue;
            for (auto t : candidates)
                if (t & bit(other))
                    result.insert(t);
        }

        auto from_shared_neighbor = result;
        for (size_t a = 0; a < candidates.size(); ++a)
            for (size_t b = a + 1; b < candidates.size(); ++b) {
                auto t = candidates[a], u = candidates[b];
                if (contains_position_edge(t & u, nx_edges) || (s & t & u))
                    continue;
                if (from_shared_neighbor.contains(t) || from_shared_neighbor.contains(u))
                    continue;
                result.insert(t);
                result.insert(u);
            }
        return result;
    }

    auto check_rules_lemma(const Graph & g, const NeighborhoodPartition & p, TargetFamily family) -> vector<RuleViolation>
    {
        set<IndexSet> known_empty;
        if (family == TargetFamily::refined)
            for (IndexSet t = 1; t < (IndexSet{ 1 } << p.degree()); ++t)
                if (p.cell(t).empty())
                    known_empty.insert(t);

        vector<RuleViolation> violations;
        for (auto & [s, members] : p.cells)
            for (unsigned i = 1; i <= p.degree(); ++i) {
                if (s & bit(i))
                    continue;
                auto targets = family == TargetFamily::lemma ?
                    lemma_targets(s, i, p.nx_edges, p.degree()) :
                    rule_targets(s, i, p.nx_edges, p.degree(), known_empty);
                VertexSet reachable;
                for (auto t : targets)
                    reachable |= p.cell(t);
                for (auto y : members)
                    if (! g.neighbors(y).intersects(reachable))
                        violations.push_back(RuleViolation{ y, s, i });
            }
        return violations;
    }

    auto to_string(CellRelation r) -> string
    {
        switch (r) {
            case CellRelation::complete: return "complete";
            case CellRelation::empty: return "empty";
            case CellRelation::mixed: return "mixed";
        }
        return "?";
    }

    auto cell_relation(const Graph & g, const NeighborhoodPartition & p, IndexSet s, IndexSet t) -> CellRelation
    {
        if (s == t)
            throw PreconditionError{ "cell relation needs two different cells" };
        auto left = p.cell(s), right = p.cell(t);
        if (left.empty() || right.empty())
            return CellRelation::complete;

        size_t edges = 0;
        for (auto u : left)
            edges += g.neighbors(u).intersection_count(right);
        if (edges == left.count() * right.count())
            return CellRelation::complete;
        return edges == 0 ? CellRelation::empty : CellRelation::mixed;
    }

    auto check_rule5(const Graph & g, const NeighborhoodPartition & p) -> bool
    {
        vector<unsigned> position_degree(p.degree() + 1, 0);
        for (auto & [j, k] : p.nx_edges) {
            ++position_degree[j];
            ++position_degree[k];
        }
        bool four_cycle = p.degree() == 4 && p.nx_edges.size() == 4 &&
            std::all_of(position_degree.begin() + 1, position_degree.end(), [] (unsigned d) { return d == 2; });
        if (! four_cycle)
            throw PreconditionError{ "the four-cycle rule applies only when the neighbours of x induce a 4-cycle" };

        vector<VertexSet> parts;
        VertexSet within;
        for (auto & [j, k] : p.nx_edges) {
            parts.push_back(p.cell(bit(j) | bit(k)));
            within |= parts.back();
        }

        for (auto & part : parts)
            for (auto u : part)
                if (g.neighbors(u).intersects(part))
                    return false;
        if (contains_clique(g, within, 4))
            return false;
        for (size_t a = 0; a < parts.size(); ++a)
            for (size_t b = a + 1; b < parts.size(); ++b)
                for (auto u : parts[a])
                    for (auto v : parts[b] - g.neighbors(u))
                        if (! contains_clique(g, g.neighbors(u) & g.neighbors(v) & within, 2))
                            return false;
        return true;
    }
}
