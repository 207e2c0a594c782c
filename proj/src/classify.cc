#include <satforge/analysis.hh>
#include <satforge/errors.hh>

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace satforge
{
    using std::to_string;

    namespace
    {
        // Classes of vertices with identical neighbourhoods, in order of first member,
        // and the quotient graph on those classes.
        struct TwinQuotient
        {
            vector<VertexSet> classes;
            Graph quotient;
        };

        auto twin_quotient(const Graph & g) -> TwinQuotient
        {
            TwinQuotient result;
            vector<Vertex> class_of(g.order());
            for (Vertex v = 0; v < g.order(); ++v) {
                auto found = std::find_if(result.classes.begin(), result.classes.end(),
                    [&] (const VertexSet & c) { return g.neighbors(c.first()) == g.neighbors(v); });
                if (found == result.classes.end()) {
                    class_of[v] = Vertex(result.classes.size());
                    result.classes.push_back(VertexSet::of({ v }));
                }
                else {
                    class_of[v] = Vertex(found - result.classes.begin());
                    found->set(v);
                }
            }
            result.quotient = Graph(result.classes.size());
            for (auto [u, v] : g.edges())
                if (class_of[u] != class_of[v])
                    result.quotient.add_edge(class_of[u], class_of[v]);
            return result;
        }

        // Reads the class sizes around a quotient 5-cycle in every rotation and
        // direction, keeping readings of the form (m1, 1, m3, m4, 1) with m3 <= m4.
        auto read_w_shape(const TwinQuotient & tq) -> optional<std::tuple<size_t, size_t, size_t>>
        {
            auto & q = tq.quotient;
            if (q.order() != 5 || q.edge_count() != 5 || min_degree(q) != 2 || max_degree(q) != 2)
                return std::nullopt;

            vector<Vertex> cycle{ 0 };
            while (cycle.size() < 5) {
                for (auto w : q.neighbors(cycle.back()))
                    if (std::find(cycle.begin(), cycle.end(), w) == cycle.end()) {
                        cycle.push_back(w);
                        break;
                    }
            }

            optional<std::tuple<size_t, size_t, size_t>> best;
            for (int direction : { 1, -1 })
                for (int start = 0; start < 5; ++start) {
                    size_t sizes[5];
                    for (int k = 0; k < 5; ++k)
                        sizes[k] = tq.classes[cycle[((start + direction * k) % 5 + 5) % 5]].count();
                    if (sizes[1] != 1 || sizes[4] != 1 || sizes[2] > sizes[3])
                        continue;
                    auto reading = std::make_tuple(sizes[0], sizes[2], sizes[3]);
                    if (! best || reading < *best)
                        best = reading;
                }
            return best;
        }
    }

    auto to_string(LowDegreeKind k) -> string
    {
        switch (k) {
            case LowDegreeKind::ehm: return "EHM";
            case LowDegreeKind::near_clique: return "near-clique";
            case LowDegreeKind::w: return "W";
            case LowDegreeKind::above_threshold: return "above-threshold";
        }
        return "?";
    }

    auto classify_low_degree(const Graph & g, unsigned s) -> LowDegreeClass
    {
        if (s < 3)
            throw PreconditionError{ "classification needs s >= 3" };
        if (g.order() < s)
            throw PreconditionError{ "classification needs at least s vertices" };
        if (! is_saturated(g, s))
            throw PreconditionError{ "classification needs a K_" + std::to_string(s) + "-saturated graph" };

        LowDegreeClass result;
        result.min_degree = min_degree(g);
        if (result.min_degree >= s) {
            result.kind = LowDegreeKind::above_threshold;
            return result;
        }

        VertexSet universal;
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) + 1 == g.order())
                universal.set(v);
        auto rest = induced_subgraph(g, g.vertices() - universal);

        if (result.min_degree + 2 == s) {
            if (universal.count() == s - 2 && rest.edge_count() == 0) {
                result.kind = LowDegreeKind::ehm;
                return result;
            }
            throw VerificationError{ "minimum degree s-2 but not the ehm graph" };
        }

        if (result.min_degree + 1 == s) {
            auto tq = twin_quotient(rest);
            // Two non-adjacent vertices both joined to an independent set: K_{2,m}.
            if (universal.count() + 3 == s && tq.quotient.order() == 2 && tq.quotient.edge_count() == 1 &&
                    std::any_of(tq.classes.begin(), tq.classes.end(), [] (const VertexSet & c) { return c.count() == 2; })) {
                result.kind = LowDegreeKind::near_clique;
                return result;
            }
            if (universal.count() + 3 == s)
                if (auto shape = read_w_shape(tq)) {
                    result.kind = LowDegreeKind::w;
                    std::tie(result.m1, result.m3, result.m4) = *shape;
                    return result;
                }
            throw VerificationError{ "minimum degree s-1 but neither the near-clique nor the w shape" };
        }

        throw VerificationError{ "a K_s-saturated graph cannot have minimum degree below s-2" };
    }
}
