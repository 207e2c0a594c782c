#include <satforge/constructions.hh>
#include <satforge/errors.hh>

#include <string>

using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace satforge
{
    namespace
    {
        auto range_set(size_t from, size_t count) -> VertexSet
        {
            VertexSet result;
            for (size_t i = 0; i < count; ++i)
                result.set(Vertex(from + i));
            return result;
        }

        auto join_sets(Graph & g, const VertexSet & left, const VertexSet & right) -> void
        {
            for (auto u : left)
                for (auto v : right)
                    g.add_edge(u, v);
        }

        auto make_clique(Graph & g, const VertexSet & members) -> void
        {
            for (auto u : members)
                for (auto v : members)
                    if (u < v)
                        g.add_edge(u, v);
        }

        auto build_family(const SupportStructure & core, unsigned t, size_t n) -> LabeledGraph
        {
            auto completed = complete_to_support(core);
            auto plan = padding_plan(completed, t, n);
            return assemble(completed, plan);
        }
    }

    auto LabeledGraph::label(const string & name) const -> const VertexSet &
    {
        auto found = labels.find(name);
        if (found == labels.end())
            throw PreconditionError{ "no vertex class named '" + name + "'" };
        return found->second;
    }

    auto ehm(unsigned s, size_t n) -> LabeledGraph
    {
        if (s < 3)
            throw PreconditionError{ "ehm requires s >= 3" };
        if (n < s)
            throw PreconditionError{ "ehm requires n >= s" };
        auto result = LabeledGraph{ join(complete_graph(s - 2), empty_graph(n - s + 2)), {} };
        result.labels["clique"] = range_set(0, s - 2);
        result.labels["independent"] = range_set(s - 2, n - s + 2);
        return result;
    }

    auto near_clique_graph(unsigned s, size_t n) -> LabeledGraph
    {
        if (s < 3)
            throw PreconditionError{ "near_clique_graph requires s >= 3" };
        if (n < s)
            throw PreconditionError{ "near_clique_graph requires n >= s" };
        auto part = complete_graph(s - 1);
        part.remove_edge(0, 1);
        auto result = LabeledGraph{ join(part, empty_graph(n - s + 1)), {} };
        result.labels["clique"] = range_set(0, s - 1);
        result.labels["independent"] = range_set(s - 1, n - s + 1);
        return result;
    }

    auto w_graph(unsigned s, size_t m1, size_t m3, size_t m4) -> LabeledGraph
    {
        if (s < 3)
            throw PreconditionError{ "w_graph requires s >= 3" };
        if (m1 < 1 || m3 < 1 || m4 < 1)
            throw PreconditionError{ "w_graph requires m1, m3, m4 >= 1" };

        size_t sizes[5] = { m1, 1, m3, m4, 1 };
        size_t hub = s - 3;
        VertexSet positions[5];
        size_t next = hub;
        for (int i = 0; i < 5; ++i) {
            positions[i] = range_set(next, sizes[i]);
            next += sizes[i];
        }

        LabeledGraph result{ Graph(next), {} };
        auto hub_set = range_set(0, hub);
        make_clique(result.graph, hub_set);
        for (int i = 0; i < 5; ++i) {
            join_sets(result.graph, hub_set, positions[i]);
            join_sets(result.graph, positions[i], positions[(i + 1) % 5]);
        }

        result.labels["hub"] = hub_set;
        for (int i = 0; i < 5; ++i)
            result.labels["a" + to_string(i + 1)] = positions[i];
        return result;
    }

    auto h_core() -> SupportStructure
    {
        SupportStructure ss{ Graph(8), range_set(0, 4), range_set(4, 4), 4, {} };
        auto & g = ss.graph;
        const vector<vector<unsigned>> triples = { { 1, 2, 3 }, { 1, 2, 4 }, { 1, 3, 4 }, { 2, 3, 4 } };

        g.add_edge(0, 1);
        g.add_edge(2, 3);

        // b123 b234 b124 b134 in cyclic order.
        g.add_edge(4, 7);
        g.add_edge(7, 5);
        g.add_edge(5, 6);
        g.add_edge(6, 4);

        for (Vertex b = 0; b < 4; ++b) {
            string name = "b";
            for (auto r : triples[b]) {
                g.add_edge(r - 1, 4 + b);
                name += to_string(r);
            }
            ss.labels[name] = VertexSet::of({ 4 + b });
        }
        for (Vertex a = 0; a < 4; ++a)
            ss.labels["a" + to_string(a + 1)] = VertexSet::of({ a });
        return ss;
    }

    auto f_core(unsigned s) -> SupportStructure
    {
        if (s < 4)
            throw PreconditionError{ "f_core requires s > 3" };
        unsigned m = 2 * (s - 2);
        SupportStructure ss{ Graph(2 * m), range_set(0, m), range_set(m, m), s, {} };
        auto & g = ss.graph;

        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = i + 1; j < m; ++j)
                if (j - i != s - 2) {
                    g.add_edge(i, j);
                    g.add_edge(m + i, m + j);
                }

        for (unsigned i = 0; i < m; ++i)
            for (unsigned k = 0; k < s - 2; ++k)
                g.add_edge(i, m + (i + k) % m);

        for (unsigned i = 0; i < m; ++i) {
            ss.labels["a" + to_string(i + 1)] = VertexSet::of({ i });
            ss.labels["b" + to_string(i + 1)] = VertexSet::of({ m + i });
        }
        return ss;
    }

    auto r_core_line_classes() -> vector<vector<vector<unsigned>>>
    {
        return {
            { { 1, 4, 7 }, { 2, 5, 8 }, { 3, 6, 9 } },
            { { 1, 5, 9 }, { 2, 6, 7 }, { 3, 4, 8 } },
            { { 1, 6, 8 }, { 2, 4, 9 }, { 3, 5, 7 } }
        };
    }

    auto r_core() -> SupportStructure
    {
        SupportStructure ss{ Graph(36), range_set(0, 9), range_set(9, 27), 5, {} };
        auto & g = ss.graph;
        auto b_index = [] (unsigned m, unsigned c) { return Vertex(9 + 3 * (m - 1) + (c - 1)); };

        auto classes = r_core_line_classes();
        for (unsigned c = 0; c < 3; ++c) {
            auto members = range_set(3 * c, 3);
            make_clique(g, members);
            ss.labels["A" + to_string(c + 1)] = members;

            for (unsigned line = 0; line < 3; ++line) {
                auto a = Vertex(3 * c + line);
                string name = "a";
                for (auto m : classes[c][line]) {
                    name += to_string(m);
                    for (unsigned k = 1; k <= 3; ++k)
                        g.add_edge(a, b_index(m, k));
                }
                for (unsigned m = 1; m <= 9; ++m)
                    g.add_edge(a, b_index(m, c + 1));
                ss.labels[name] = VertexSet::of({ a });
            }
        }

        for (unsigned m = 1; m <= 9; ++m) {
            auto members = VertexSet::of({ b_index(m, 1), b_index(m, 2), b_index(m, 3) });
            make_clique(g, members);
            ss.labels["B" + to_string(m)] = members;
        }
        return ss;
    }

    auto h_graph(unsigned t, size_t n) -> LabeledGraph
    {
        if (t < 4)
            throw PreconditionError{ "h_graph requires t >= 4" };
        if (n <= 2 * size_t(t))
            throw PreconditionError{ "h_graph requires n > 2t (t = " + to_string(t) + ", n = " + to_string(n) + ")" };
        return build_family(h_core(), t, n);
    }

    auto f_graph(unsigned s, unsigned t, size_t n) -> LabeledGraph
    {
        if (s < 4)
            throw PreconditionError{ "f_graph requires s > 3" };
        if (t < 2 * (s - 2) + 1)
            throw PreconditionError{ "f_graph requires t >= 2(s-2)+1 = " + to_string(2 * (s - 2) + 1) };
        if (n < 2 * size_t(s - 2) + 2 * size_t(t))
            throw PreconditionError{ "f_graph requires n >= 2(s-2)+2t = " + to_string(2 * (s - 2) + 2 * t) };
        return build_family(f_core(s), t, n);
    }

    auto r_graph(unsigned t, size_t n) -> LabeledGraph
    {
        if (t < 10)
            throw PreconditionError{ "r_graph requires t > 9" };
        if (n <= 2 * size_t(t) + 12)
            throw PreconditionError{ "r_graph requires n > 2t+12 = " + to_string(2 * t + 12) };
        return build_family(r_core(), t, n);
    }

    auto vertex_name(const LabeledGraph & g, Vertex v) -> string
    {
        for (auto & [name, members] : g.labels)
            if (members.count() == 1 && members.test(v))
                return name;
        return to_string(v);
    }
}
