#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <satforge/analysis.hh>
#include <satforge/constructions.hh>
#include <satforge/errors.hh>

using namespace satforge;

TEST_CASE("certificates on the r and f families")
{
    for (auto g : { r_graph(18, 50).graph, f_graph(5, 18, 50).graph }) {
        auto c = verify_lb3(g, 5, 18);
        CHECK(c.bound == 144);
        CHECK(c.triangles >= 144);
        CHECK(c.certified >= c.bound);
        CHECK(c.triangles == count_cliques(g, 3).count);
        CHECK(revalidate(g, c));
    }
}

TEST_CASE("the split case partitions the other vertices")
{
    auto g = f_graph(5, 18, 50).graph;
    auto c = verify_lb3(g, 5, 18);
    REQUIRE(c.kind == Lb3Case::split_edge);
    auto [x, y] = c.split;
    CHECK(g.adjacent(x, y));
    CHECK(common_neighborhood(g, x, y).empty());
    CHECK((c.A & c.B).empty());
    CHECK((c.A & c.C).empty());
    CHECK((c.A | c.B | c.C | VertexSet::of({ x, y })) == g.vertices());
    CHECK(c.witnesses.size() == c.A.count() + c.B.count() + 2 * c.C.count());
    for (auto & [v, clique] : c.witnesses) {
        CHECK(clique.size() == 3);
        for (auto w : clique)
            CHECK(g.adjacent(v, w));
    }
}

TEST_CASE("every edge in a triangle")
{
    std::vector<std::size_t> parts{ 3, 3, 3 };
    auto g = complete_multipartite_graph(parts);
    auto c = verify_lb3(g, 4, 6);
    CHECK(c.kind == Lb3Case::every_edge_in_triangle);
    CHECK(c.min_edge_triangles == 3);
    CHECK(c.triangles == 27);
    CHECK(c.bound == 7);
    CHECK(revalidate(g, c));
    CHECK(to_string(c.kind) == "every-edge-in-triangle");
}

TEST_CASE("tampering invalidates a certificate")
{
    auto g = r_graph(18, 50).graph;
    auto c = verify_lb3(g, 5, 18);

    auto inflated = c;
    inflated.triangles += 1;
    CHECK_FALSE(revalidate(g, inflated));

    if (! c.witnesses.empty()) {
        auto swapped = c;
        swapped.witnesses.front().second.front() = swapped.witnesses.front().first;
        CHECK_FALSE(revalidate(g, swapped));
    }

    auto h = g;
    auto [u, v] = g.edges().front();
    h.remove_edge(u, v);
    CHECK_FALSE(revalidate(h, c));
}

TEST_CASE("preconditions")
{
    CHECK_THROWS_AS(verify_lb3(complete_graph(4), 5, 3), PreconditionError);
    CHECK_THROWS_AS(verify_lb3(h_graph(4, 14).graph, 4, 4), PreconditionError);
    CHECK_THROWS_AS(verify_lb3(r_graph(18, 50).graph, 5, 17), PreconditionError);
    CHECK_THROWS_AS(verify_lb3(r_graph(18, 50).graph, 3, 18), PreconditionError);
}
