#include <satforge/analysis.hh>
#include <satforge/errors.hh>

#include <algorithm>
#include <array>
#include <set>
#include <string>

using std::array;
using std::set;
using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace satforge
{
    using std::to_string;

    namespace
    {
        auto choose2(uint64_t m) -> uint64_t
        {
            return m * (m - 1) / 2;
        }

        auto triangle_key(Vertex a, Vertex b, Vertex c) -> array<Vertex, 3>
        {
            array<Vertex, 3> key{ a, b, c };
            std::sort(key.begin(), key.end());
            return key;
        }

        auto is_clique(const Graph & g, const vector<Vertex> & members) -> bool
        {
            for (size_t i = 0; i < members.size(); ++i)
                for (size_t j = i + 1; j < members.size(); ++j)
                    if (members[i] == members[j] || ! g.adjacent(members[i], members[j]))
                        return false;
            return true;
        }

        // The triangles a spans with the edges of a clique inside its neighbourhood.
        auto add_triangles(const Graph & g, Vertex a, const vector<Vertex> & clique, set<array<Vertex, 3>> & out) -> bool
        {
            for (size_t i = 0; i < clique.size(); ++i) {
                if (clique[i] == a || ! g.adjacent(a, clique[i]))
                    return false;
                for (size_t j = i + 1; j < clique.size(); ++j)
                    out.insert(triangle_key(a, clique[i], clique[j]));
            }
            return true;
        }

        auto check_hypotheses(const Graph & g, unsigned s, unsigned t) -> void
        {
            if (s < 4)
                throw PreconditionError{ "the triangle lower bound needs s > 3" };
            if (t < 6 * choose2(s - 2))
                throw PreconditionError{ "the triangle lower bound needs t >= 6 C(s-2,2) = " + to_string(6 * choose2(s - 2)) };
            if (g.order() < 2 * size_t(s) - 2)
                throw PreconditionError{ "the triangle lower bound needs n >= 2s-2 = " + to_string(2 * s - 2) };
            if (min_degree(g) != t)
                throw PreconditionError{ "graph has minimum degree " + to_string(min_degree(g)) + ", not t = " + to_string(t) };
            if (! is_saturated(g, s))
                throw PreconditionError{ "graph is not K_" + to_string(s) + "-saturated" };
        }
    }

    auto to_string(Lb3Case c) -> string
    {
        return c == Lb3Case::every_edge_in_triangle ? "every-edge-in-triangle" : "split-edge";
    }

    auto verify_lb3(const Graph & g, unsigned s, unsigned t) -> Lb3Certificate
    {
        check_hypotheses(g, s, t);

        Lb3Certificate cert;
        cert.s = s;
        cert.t = t;
        cert.n = g.order();
        cert.edge_count = g.edge_count();
        cert.triangles = count_cliques(g, 3).count;
        cert.bound = choose2(s - 2) * (cert.n - 2);

        auto per_edge = triangles_per_edge(g);
        auto lightest = std::min_element(per_edge.begin(), per_edge.end(),
            [] (auto & a, auto & b) { return a.second < b.second; });

        if (lightest == per_edge.end() || lightest->second > 0) {
            cert.kind = Lb3Case::every_edge_in_triangle;
            if (lightest != per_edge.end()) {
                cert.min_edge = lightest->first;
                cert.min_edge_triangles = lightest->second;
            }
            cert.certified = cert.triangles;
        }
        else {
            cert.kind = Lb3Case::split_edge;
            auto [x, y] = lightest->first;
            cert.split = lightest->first;
            cert.A = g.neighbors(x);
            cert.A.reset(y);
            cert.B = g.neighbors(y);
            cert.B.reset(x);
            cert.C = g.vertices() - cert.A - cert.B - VertexSet::of({ x, y });

            set<array<Vertex, 3>> vouched;
            auto witness = [&] (Vertex v, Vertex anchor) {
                auto clique = find_clique(g, g.neighbors(v) & g.neighbors(anchor), s - 2);
                if (! clique)
                    throw VerificationError{ "vertex " + to_string(v) + " lacks a K_" + to_string(s - 2) + " with " + to_string(anchor) };
                add_triangles(g, v, *clique, vouched);
                cert.witnesses.emplace_back(v, *clique);
            };
            for (auto a : cert.A)
                witness(a, y);
            for (auto b : cert.B)
                witness(b, x);
            for (auto c : cert.C) {
                witness(c, x);
                witness(c, y);
            }
            cert.certified = vouched.size();
        }

        if (cert.certified < cert.bound || cert.triangles < cert.certified)
            throw VerificationError{ "certified " + to_string(cert.certified) + " triangles, below the bound " + to_string(cert.bound) };
        return cert;
    }

    auto revalidate(const Graph & g, const Lb3Certificate & cert) -> bool
    {
        if (g.order() != cert.n || g.edge_count() != cert.edge_count || count_cliques(g, 3).count != cert.triangles)
            return false;
        if (cert.s < 4 || cert.bound != choose2(cert.s - 2) * (cert.n - 2) || cert.certified < cert.bound || cert.triangles < cert.certified)
            return false;
        if (min_degree(g) != cert.t || ! is_saturated(g, cert.s))
            return false;

        auto per_edge = triangles_per_edge(g);
        if (cert.kind == Lb3Case::every_edge_in_triangle) {
            if (per_edge.empty())
                return cert.certified == cert.triangles;
            auto found = per_edge.find(cert.min_edge);
            if (found == per_edge.end() || found->second != cert.min_edge_triangles)
                return false;
            for (auto & [_, count] : per_edge)
                if (count < cert.min_edge_triangles || count == 0)
                    return false;
            return cert.certified == cert.triangles;
        }

        auto [x, y] = cert.split;
        if (x >= g.order() || y >= g.order() || ! g.adjacent(x, y) || g.neighbors(x).intersects(g.neighbors(y)))
            return false;
        auto A = g.neighbors(x), B = g.neighbors(y);
        A.reset(y);
        B.reset(x);
        if (A != cert.A || B != cert.B || cert.C != g.vertices() - A - B - VertexSet::of({ x, y }))
            return false;

        // Each vertex of A and B needs one clique, each vertex of C two, anchored at the
        // right end of the split edge.
        std::map<Vertex, vector<Vertex>> anchors_needed;
        for (auto a : A)
            anchors_needed[a] = { y };
        for (auto b : B)
            anchors_needed[b] = { x };
        for (auto c : cert.C)
            anchors_needed[c] = { x, y };

        set<array<Vertex, 3>> vouched;
        std::map<Vertex, vector<Vertex>> anchors_seen;
        for (auto & [v, clique] : cert.witnesses) {
            if (v >= g.order() || clique.size() != cert.s - 2 || ! is_clique(g, clique))
                return false;
            auto & needed = anchors_needed[v];
            bool in_x = std::all_of(clique.begin(), clique.end(), [&] (Vertex w) { return g.adjacent(w, x); });
            bool in_y = std::all_of(clique.begin(), clique.end(), [&] (Vertex w) { return g.adjacent(w, y); });
            auto anchor = in_x ? x : in_y ? y : g.order();
            if (std::find(needed.begin(), needed.end(), anchor) == needed.end())
                return false;
            anchors_seen[v].push_back(Vertex(anchor));
            if (! add_triangles(g, v, clique, vouched))
                return false;
        }
        for (auto & [v, needed] : anchors_needed) {
            auto seen = anchors_seen[v];
            std::sort(seen.begin(), seen.end());
            auto want = needed;
            std::sort(want.begin(), want.end());
            if (seen != want)
                return false;
        }
        return vouched.size() == cert.certified;
    }
}
