#include <satforge/constructions.hh>
#include <satforge/errors.hh>

#include <algorithm>
#include <string>
#include <utility>

using std::pair;
using std::size_t;
using std::string;
using std::vector;

namespace satforge
{
    namespace
    {
        struct Gadget
        {
            string id;
            vector<pair<unsigned, unsigned>> nx_edges;
            vector<string> ys;
            vector<pair<string, string>> yy_edges;
        };

        const vector<pair<unsigned, unsigned>> two_edges = { { 1, 2 }, { 3, 4 } };
        const vector<pair<unsigned, unsigned>> path = { { 1, 2 }, { 2, 3 }, { 3, 4 } };
        const vector<pair<unsigned, unsigned>> four_cycle = { { 1, 2 }, { 2, 3 }, { 3, 4 }, { 1, 4 } };

        auto gadgets() -> const vector<Gadget> &
        {
            static const vector<Gadget> table = {
                { "G1", two_edges, { "y123", "y124", "y134", "y234" },
                    { { "y123", "y134" }, { "y123", "y234" }, { "y124", "y134" }, { "y124", "y234" } } },
                { "G2", path, { "y23", "z124", "z134" },
                    { { "y23", "z124" }, { "y23", "z134" }, { "z124", "z134" } } },
                { "G3", path, { "y23", "z124", "z124p", "z234" },
                    { { "y23", "z124" }, { "y23", "z124p" }, { "z124", "z234" }, { "z124p", "z234" } } },
                { "G4", path, { "y123", "y134", "y234", "y124" },
                    { { "y123", "y134" }, { "y124", "y134" }, { "y124", "y234" } } },
                { "G5", path, { "y123", "y134" },
                    { { "y123", "y134" } } },
                { "G6", path, { "y124", "y134" },
                    { { "y124", "y134" } } },
                { "G7", four_cycle, { "y123", "y134" },
                    { { "y123", "y134" } } },
                { "G8", four_cycle, { "y123", "y234", "y134", "y124" },
                    { { "y123", "y134" }, { "y124", "y234" } } },
                { "G9", four_cycle, { "y12", "y234", "y134" },
                    { { "y12", "y134" }, { "y12", "y234" } } },
                { "G10", four_cycle, { "y12", "y23", "y134" },
                    { { "y12", "y134" }, { "y23", "y134" }, { "y12", "y23" } } },
                { "G11", four_cycle, { "y12", "y34", "y134", "y234", "y123", "y124" },
                    { { "y12", "y134" }, { "y12", "y234" }, { "y34", "y124" }, { "y34", "y123" },
                      { "y134", "y123" }, { "y234", "y124" } } },
                { "G12", four_cycle, { "y12", "y23", "y34", "y124" },
                    { { "y12", "y23" }, { "y23", "y34" }, { "y124", "y23" }, { "y124", "y34" }, { "y12", "y34" } } },
            };
            return table;
        }

        // "y134" and "z124p" are adjacent to x1, x3, x4 and to x1, x2, x4 respectively.
        auto trace_of(const string & name) -> vector<unsigned>
        {
            vector<unsigned> result;
            for (auto c : name)
                if (c >= '1' && c <= '4')
                    result.push_back(unsigned(c - '0'));
            return result;
        }
    }

    auto appendix_ids() -> vector<string>
    {
        vector<string> result;
        for (auto & gadget : gadgets())
            result.push_back(gadget.id);
        return result;
    }

    auto appendix_graph(const string & id) -> LabeledGraph
    {
        auto & table = gadgets();
        auto found = std::find_if(table.begin(), table.end(), [&] (const Gadget & g) { return g.id == id; });
        if (found == table.end())
            throw PreconditionError{ "unknown gadget id '" + id + "' (expected G1..G12)" };

        auto & gadget = *found;
        LabeledGraph result{ Graph(5 + gadget.ys.size()), {} };
        auto & g = result.graph;

        result.labels["x"] = VertexSet::of({ 0 });
        for (Vertex i = 1; i <= 4; ++i) {
            g.add_edge(0, i);
            result.labels["x" + std::to_string(i)] = VertexSet::of({ i });
        }
        for (auto [i, j] : gadget.nx_edges)
            g.add_edge(i, j);

        VertexSet ys;
        for (size_t k = 0; k < gadget.ys.size(); ++k) {
            auto y = Vertex(5 + k);
            ys.set(y);
            result.labels[gadget.ys[k]] = VertexSet::of({ y });
            for (auto i : trace_of(gadget.ys[k]))
                g.add_edge(y, i);
        }
        result.labels["Y"] = ys;

        for (auto & [u, v] : gadget.yy_edges)
            g.add_edge(result.label(u).first(), result.label(v).first());

        return result;
    }
}
