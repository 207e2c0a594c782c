#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <satforge/analysis.hh>
#include <satforge/canonical.hh>
#include <satforge/constructions.hh>
#include <satforge/errors.hh>
#include <satforge/search.hh>

using namespace satforge;

TEST_CASE("named shapes")
{
    auto e = classify_low_degree(ehm(4, 9).graph, 4);
    CHECK(e.kind == LowDegreeKind::ehm);
    CHECK(to_string(e.kind) == "EHM");

    auto w = classify_low_degree(w_graph(4, 2, 1, 2).graph, 4);
    CHECK(w.kind == LowDegreeKind::w);
    CHECK(w.m1 == 2);
    CHECK(w.m3 == 1);
    CHECK(w.m4 == 2);

    CHECK(classify_low_degree(near_clique_graph(4, 8).graph, 4).kind == LowDegreeKind::near_clique);
    CHECK(classify_low_degree(near_clique_graph(5, 9).graph, 5).kind == LowDegreeKind::near_clique);

    auto h = classify_low_degree(h_graph(4, 14).graph, 4);
    CHECK(h.kind == LowDegreeKind::above_threshold);
    CHECK(h.min_degree == 4);
    CHECK(to_string(h.kind) == "above-threshold");
}

TEST_CASE("w parameters are recovered up to relabelling")
{
    for (unsigned s = 4; s <= 5; ++s)
        for (std::size_t m1 = 1; m1 <= 3; ++m1)
            for (std::size_t m3 = 1; m3 <= 3; ++m3)
                for (std::size_t m4 = 1; m4 <= 3; ++m4) {
                    auto g = w_graph(s, m1, m3, m4).graph;
                    auto c = classify_low_degree(g, s);
                    REQUIRE(c.kind == LowDegreeKind::w);
                    CHECK(c.m3 <= c.m4);
                    CHECK(are_isomorphic(w_graph(s, c.m1, c.m3, c.m4).graph, g, CanonicalOptions{ true }));
                }
}

TEST_CASE("every small K4-saturated graph of low minimum degree has a named shape")
{
    for (std::size_t n = 5; n <= 8; ++n)
        enumerate_saturated(n, 4, std::nullopt, DegreeFilter::exact, [&] (const Graph & g) {
            auto c = classify_low_degree(g, 4);
            auto delta = min_degree(g);
            CHECK(c.min_degree == delta);
            if (delta == 2) {
                CHECK(c.kind == LowDegreeKind::ehm);
                CHECK(are_isomorphic(g, ehm(4, n).graph));
            }
            else if (delta == 3) {
                CHECK((c.kind == LowDegreeKind::near_clique || c.kind == LowDegreeKind::w));
                auto named = c.kind == LowDegreeKind::w ? w_graph(4, c.m1, c.m3, c.m4).graph : near_clique_graph(4, n).graph;
                CHECK(are_isomorphic(g, named));
            }
            else
                CHECK(c.kind == LowDegreeKind::above_threshold);
        });
}

TEST_CASE("non-saturated input is rejected")
{
    CHECK_THROWS_AS(classify_low_degree(path_graph(5), 3), PreconditionError);
    CHECK_THROWS_AS(classify_low_degree(complete_graph(3), 4), PreconditionError);
}
