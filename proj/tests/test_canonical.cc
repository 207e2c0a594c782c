#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hh"

#include <satforge/canonical.hh>
#include <satforge/constructions.hh>
#include <satforge/errors.hh>
#include <satforge/graph_io.hh>

#include <set>

using namespace satforge;

TEST_CASE("canonical_form examples")
{
    auto c5 = cycle_graph(5);
    std::vector<Vertex> image{ 2, 0, 4, 1, 3 };
    CHECK(canonical_form(c5) == canonical_form(c5.permuted(image)));
    CHECK(canonical_form(c5) != canonical_form(path_graph(5)));
    CHECK(canonical_form(join(complete_graph(2), empty_graph(5))) != canonical_form(star_graph(6)));
}

TEST_CASE("forms are invariant under random relabelling")
{
    std::mt19937_64 rng(20240601);
    std::vector<Graph> graphs{ petersen_graph(), cycle_graph(10), complete_graph(7), empty_graph(9), ehm(4, 10).graph,
        w_graph(4, 2, 1, 2).graph, h_graph(4, 10).graph };
    for (int i = 0; i < 12; ++i)
        graphs.push_back(oracle::random_graph(4 + i % 7, 0.2 + 0.05 * i, rng));
    for (auto & g : graphs) {
        auto form = canonical_form(g);
        for (int round = 0; round < 100; ++round)
            CHECK(canonical_form(g.permuted(oracle::random_permutation(g.order(), rng))) == form);
    }
}

TEST_CASE("forms separate exactly the isomorphism classes up to six vertices")
{
    for (std::size_t n = 1; n <= 6; ++n) {
        auto classes = oracle::all_classes(n);
        std::set<std::string> forms;
        for (auto & [code, g] : classes)
            forms.insert(canonical_form(g));
        CHECK(forms.size() == classes.size());
    }
}

TEST_CASE("are_isomorphic agrees with the permutation oracle")
{
    std::mt19937_64 rng(8);
    for (int round = 0; round < 300; ++round) {
        auto g = oracle::random_graph(7, 0.5, rng);
        auto h = oracle::random_graph(7, 0.5, rng);
        CHECK(are_isomorphic(g, h) == oracle::isomorphic(g, h));
    }
}

TEST_CASE("the form is the graph6 of the relabelled graph")
{
    auto g = w_graph(4, 1, 2, 3).graph;
    auto order = canonical_ordering(g);
    std::vector<Vertex> image(g.order());
    for (std::size_t i = 0; i < order.size(); ++i)
        image[order[i]] = Vertex(i);
    CHECK(to_graph6(g.permuted(image)) == canonical_form(g));
    CHECK(std::set<Vertex>(order.begin(), order.end()).size() == g.order());
}

TEST_CASE("colours restrict the allowed relabellings")
{
    auto p = path_graph(3);
    std::vector<int> end_marked{ 1, 0, 0 };
    std::vector<int> other_end_marked{ 0, 0, 1 };
    std::vector<int> middle_marked{ 0, 1, 0 };
    CHECK(canonical_form(p, end_marked) == canonical_form(p, other_end_marked));
    CHECK(canonical_form(p, end_marked) != canonical_form(p, middle_marked));

    auto order = canonical_ordering(p, middle_marked);
    CHECK(order.back() == 1);
    CHECK_THROWS_AS(canonical_form(p, std::vector<int>{ 0, 1 }), PreconditionError);
}

TEST_CASE("orders above the exact cap need opting in")
{
    auto g = cycle_graph(13);
    CHECK_THROWS_AS(canonical_form(g), PreconditionError);
    CanonicalOptions large;
    large.allow_large = true;
    std::mt19937_64 rng(4);
    auto form = canonical_form(g, large);
    CHECK(canonical_form(g.permuted(oracle::random_permutation(13, rng)), large) == form);
    auto r = r_graph(10, 38).graph;
    CHECK(canonical_form(r, large) == canonical_form(r.permuted(oracle::random_permutation(r.order(), rng)), large));
}
