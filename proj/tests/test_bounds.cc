#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <satforge/bounds.hh>
#include <satforge/constructions.hh>
#include <satforge/errors.hh>

#include <set>

using namespace satforge;

TEST_CASE("evaluation examples")
{
    CHECK(evaluate_bound("h-family-triangles", { 14, {}, {}, 4 }) == 24);
    CHECK(evaluate_bound("ehm-cliques", { 9, 3, 5, {} }) == 19);
    CHECK(evaluate_bound("ehm-cliques", { 10, 3, 5, {} }) == 22);
    CHECK(evaluate_bound("three-edge-neighborhood-triangles", { 12, {}, {}, {} }) == 18);
    CHECK(evaluate_bound("ehm-edges", { 6, {}, 3, {} }) == 5);
    CHECK(evaluate_bound("k4sat-triangles", { 10, {}, {}, {} }) == 8);
    CHECK(evaluate_bound("k3sat-degree2-edges", { 7, {}, {}, {} }) == 9);
    CHECK(evaluate_bound("k3sat-degree3-edges", { 10, {}, {}, {} }) == 15);
    CHECK(evaluate_bound("degree4-triangles", { 14, {}, {}, {} }) == 24);
    CHECK(evaluate_bound("four-edge-neighborhood-triangles", { 15, {}, {}, {} }) == 27);
    CHECK(evaluate_bound("f-family-linear", { 20, 3, 4, 5 }) == 80);
    CHECK(evaluate_bound("triangle-lower-bound", { 50, {}, 5, 18 }) == 144);
}

TEST_CASE("parameters outside the hypotheses are reported")
{
    CHECK_THROWS_AS(evaluate_bound("no-such-bound", {}), PreconditionError);
    CHECK_THROWS_AS(evaluate_bound("h-family-triangles", { 14, {}, {}, {} }), PreconditionError);
    CHECK_THROWS_AS(evaluate_bound("h-family-triangles", { 6, {}, {}, 4 }), PreconditionError);
    CHECK_THROWS_AS(evaluate_bound("degree4-triangles", { 13, {}, {}, {} }), PreconditionError);
    CHECK_THROWS_AS(evaluate_bound("ehm-cliques", { 9, 5, 5, {} }), PreconditionError);
    CHECK_THROWS_AS(evaluate_bound("triangle-lower-bound", { 50, {}, 5, 17 }), PreconditionError);
}

TEST_CASE("binomial")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 3) == 1);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(30, 15) == 155117520);
}

TEST_CASE("bound table is well formed")
{
    std::set<std::string> names;
    for (auto & spec : bound_specs()) {
        CHECK(names.insert(spec.name).second);
        CHECK_FALSE(spec.formula.empty());
        CHECK_FALSE(spec.hypotheses.empty());
        for (char c : spec.uses)
            CHECK(std::string("nrst").find(c) != std::string::npos);
    }
}

TEST_CASE("formulas agree with the constructions they describe")
{
    for (unsigned t = 4; t <= 8; ++t)
        for (auto n = 2 * std::size_t(t) + 1; n <= 2 * std::size_t(t) + 10; ++n)
            CHECK(long(count_cliques(h_graph(t, n).graph, 3).count) == evaluate_bound("h-family-triangles", { long(n), {}, {}, long(t) }));
    for (std::size_t n = 5; n <= 20; ++n)
        for (unsigned s = 3; s <= 5; ++s)
            if (n >= s)
                CHECK(long(ehm(s, n).graph.edge_count()) == evaluate_bound("ehm-edges", { long(n), {}, long(s), {} }));
    auto slope = evaluate_bound("f-family-linear", { 21, 3, 5, 7 }) - evaluate_bound("f-family-linear", { 20, 3, 5, 7 });
    CHECK(long(count_cliques(f_graph(5, 7, 21).graph, 3).count - count_cliques(f_graph(5, 7, 20).graph, 3).count) == slope);
}
