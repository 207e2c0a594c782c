#include <satforge/errors.hh>
#include <satforge/support.hh>

#include <algorithm>
#include <string>

using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace satforge
{
    namespace
    {
        auto clique_free_within(const Graph & g, const VertexSet & side, unsigned k) -> bool
        {
            return ! contains_clique(g, side, k);
        }

        // Missing pairs inside side whose addition leaves side without a new K_k.
        auto side_saturated(const Graph & g, const VertexSet & side, unsigned k) -> bool
        {
            if (! clique_free_within(g, side, k))
                return false;
            for (auto u : side)
                for (auto v : side - g.neighbors(u))
                    if (v > u && ! contains_clique(g, g.neighbors(u) & g.neighbors(v) & side, k - 2))
                        return false;
            return true;
        }

        auto same_side(const SupportStructure & ss, Vertex u, Vertex v) -> const VertexSet *
        {
            if (ss.A.test(u) && ss.A.test(v))
                return &ss.A;
            if (ss.B.test(u) && ss.B.test(v))
                return &ss.B;
            return nullptr;
        }
    }

    auto check_structure_shape(const SupportStructure & ss) -> void
    {
        if (ss.s < 3)
            throw PreconditionError{ "support structures need s >= 3" };
        if (ss.A.intersects(ss.B))
            throw PreconditionError{ "classes A and B overlap" };
        if ((ss.A | ss.B) != ss.graph.vertices())
            throw PreconditionError{ "classes A and B do not cover the vertex set" };
        if (ss.A.empty() || ss.B.empty())
            throw PreconditionError{ "classes A and B must both be non-empty" };
    }

    auto check_pre_support(const SupportStructure & ss) -> PreSupportReport
    {
        check_structure_shape(ss);
        auto & g = ss.graph;
        PreSupportReport report;

        report.sides_clique_free = clique_free_within(g, ss.A, ss.s - 1) && clique_free_within(g, ss.B, ss.s - 1);

        for (auto a : ss.A)
            if (! contains_clique(g, g.neighbors(a) & ss.B, ss.s - 2))
                report.unsupported_a.push_back(a);
        for (auto b : ss.B)
            if (! contains_clique(g, g.neighbors(b) & ss.A, ss.s - 2))
                report.unsupported_b.push_back(b);
        report.a_side_supported = report.unsupported_a.empty();
        report.b_side_supported = report.unsupported_b.empty();

        report.clique_free = is_clique_free(g, ss.s);
        return report;
    }

    auto check_support(const SupportStructure & ss) -> SupportReport
    {
        SupportReport report;
        report.pre = check_pre_support(ss);
        auto & g = ss.graph;

        report.a_side_saturated = side_saturated(g, ss.A, ss.s - 1);
        report.b_side_saturated = side_saturated(g, ss.B, ss.s - 1);

        report.sides_blocked = true;
        report.cross_saturated = true;
        for (Vertex u = 0; u < g.order(); ++u)
            for (auto v : g.vertices() - g.neighbors(u)) {
                if (v <= u)
                    continue;
                if (addition_creates_clique(g, u, v, ss.s))
                    continue;
                auto side = same_side(ss, u, v);
                if (side && contains_clique(g, g.neighbors(u) & g.neighbors(v) & *side, ss.s - 3))
                    continue;
                report.open_pairs.emplace_back(u, v);
                if (side)
                    report.sides_blocked = false;
                else
                    report.cross_saturated = false;
            }
        return report;
    }

    auto completion_blocks(const SupportStructure & ss, Vertex u, Vertex v) -> bool
    {
        auto & g = ss.graph;
        auto common = g.neighbors(u) & g.neighbors(v);
        if (auto side = same_side(ss, u, v); side && contains_clique(g, common & *side, ss.s - 3))
            return true;
        return contains_clique(g, common, ss.s - 2);
    }

    auto complete_to_support(const SupportStructure & ss, const CompletionObserver & observer) -> SupportStructure
    {
        if (! check_pre_support(ss).holds())
            throw PreconditionError{ "completion needs a pre-support structure" };

        auto result = ss;
        auto n = Vertex(result.graph.order());
        bool added = true;
        while (added) {
            added = false;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v) {
                    if (result.graph.adjacent(u, v) || completion_blocks(result, u, v))
                        continue;
                    result.graph.add_edge(u, v);
                    added = true;
                    if (observer)
                        observer(result, Edge{ u, v });
                }
        }
        return result;
    }

    auto side_min_degree(const SupportStructure & ss, const VertexSet & side) -> size_t
    {
        size_t result = ss.graph.order();
        for (auto v : side)
            result = std::min(result, ss.graph.degree(v));
        return result;
    }

    auto padding_plan(const SupportStructure & ss, unsigned t, size_t n) -> PaddingPlan
    {
        check_structure_shape(ss);
        auto a_size = ss.A.count(), b_size = ss.B.count();
        auto a_degree = side_min_degree(ss, ss.A), b_degree = side_min_degree(ss, ss.B);

        PaddingPlan plan;
        plan.t = t;
        plan.n = n;
        plan.N = long(t) - long(std::min(b_size, a_degree));
        plan.M = long(t) - long(std::min(a_size, b_degree));
        plan.n_active = b_size <= a_degree ? "|B|" : "deg(A)";
        plan.m_active = a_size <= b_degree ? "|A|" : "deg(B)";

        auto core = long(a_size + b_size);
        if (long(n) <= core + plan.N + plan.M)
            throw PreconditionError{ "padding requires n > |A| + |B| + N + M = " + to_string(core + plan.N + plan.M) +
                " (got n = " + to_string(n) + ")" };

        plan.y_count = size_t(std::max(plan.M, 0L));
        if (long(n) - core - long(plan.y_count) < 1)
            throw PreconditionError{ "padding leaves no room for X: n = " + to_string(n) + " needs at least " +
                to_string(core + long(plan.y_count) + 1) };
        plan.x_count = n - size_t(core) - plan.y_count;

        // Degrees after padding: a gains |X|, b gains |Y|, x sees A and Y, y sees B and X.
        auto predicted = std::min({ a_degree + plan.x_count, b_degree + plan.y_count, a_size + plan.y_count });
        if (plan.y_count > 0)
            predicted = std::min(predicted, b_size + plan.x_count);
        if (predicted != t)
            throw PreconditionError{ "padding gives minimum degree " + to_string(predicted) + " rather than t = " + to_string(t) };

        return plan;
    }

    auto assemble(const SupportStructure & ss, const PaddingPlan & plan) -> LabeledGraph
    {
        check_structure_shape(ss);
        auto core = ss.graph.order();
        if (core + plan.x_count + plan.y_count != plan.n)
            throw PreconditionError{ "padding plan does not match the structure" };

        LabeledGraph result{ Graph(plan.n), ss.labels };
        auto & g = result.graph;
        for (auto [u, v] : ss.graph.edges())
            g.add_edge(u, v);

        VertexSet X, Y;
        for (size_t i = 0; i < plan.y_count; ++i)
            Y.set(Vertex(core + i));
        for (size_t i = 0; i < plan.x_count; ++i)
            X.set(Vertex(core + plan.y_count + i));

        for (auto x : X) {
            for (auto a : ss.A)
                g.add_edge(x, a);
            for (auto y : Y)
                g.add_edge(x, y);
        }
        for (auto y : Y)
            for (auto b : ss.B)
                g.add_edge(y, b);

        result.labels["A"] = ss.A;
        result.labels["B"] = ss.B;
        result.labels["X"] = X;
        result.labels["Y"] = Y;

        if (! is_saturated(g, ss.s))
            throw VerificationError{ "assembled graph is not K_" + to_string(ss.s) + "-saturated" };
        if (auto delta = min_degree(g); delta != plan.t)
            throw VerificationError{ "assembled graph has minimum degree " + to_string(delta) + ", expected " + to_string(plan.t) };
        return result;
    }
}
