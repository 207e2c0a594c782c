#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hh"

#include <satforge/errors.hh>
#include <satforge/graph_io.hh>

using namespace satforge;

TEST_CASE("graph6 reference strings")
{
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(to_graph6(cycle_graph(5)) == "Dhc");
    CHECK(to_graph6(petersen_graph()) == "IheA@GUAo");
    CHECK(from_graph6("IheA@GUAo") == petersen_graph());
    CHECK(from_graph6(">>graph6<<Dhc\n") == cycle_graph(5));
}

TEST_CASE("graph6 round trip across the long order field")
{
    std::mt19937_64 rng(99);
    for (std::size_t n : { 1, 2, 7, 62, 63, 64, 130, 300 }) {
        auto g = oracle::random_graph(n, 0.3, rng);
        auto text = to_graph6(g);
        if (n >= 63)
            CHECK(text[0] == '~');
        CHECK(from_graph6(text) == g);
    }
}

TEST_CASE("malformed graph6 is rejected")
{
    CHECK_THROWS_AS(from_graph6(""), PreconditionError);
    CHECK_THROWS_AS(from_graph6(":Fa@x^"), PreconditionError);
    CHECK_THROWS_AS(from_graph6("&DI?AO?"), PreconditionError);
    CHECK_THROWS_AS(from_graph6("Dh"), PreconditionError);
    CHECK_THROWS_AS(from_graph6("Dhcc"), PreconditionError);
    CHECK_THROWS_AS(from_graph6("D h"), PreconditionError);
}

TEST_CASE("reading several lines")
{
    auto graphs = read_graph6_lines("C~\n\nDhc\n  \n");
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == complete_graph(4));
    CHECK(graphs[1] == cycle_graph(5));
}

TEST_CASE("dot export")
{
    DotOptions options;
    options.name = "tri";
    options.vertex_labels[0] = "hub";
    auto dot = to_dot(complete_graph(3), options);
    CHECK(dot.find("graph tri {") != std::string::npos);
    CHECK(dot.find("hub") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("1 -- 2") != std::string::npos);
}
