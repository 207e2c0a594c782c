#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <satforge/vertex_set.hh>

#include <random>
#include <set>

using satforge::Vertex;
using satforge::VertexSet;

TEST_CASE("set, reset and test")
{
    VertexSet s;
    CHECK(s.empty());
    s.set(0);
    s.set(63);
    s.set(64);
    s.set(511);
    CHECK(s.count() == 4);
    CHECK(s.test(63));
    CHECK(s.test(64));
    CHECK(s.contains(511));
    CHECK_FALSE(s.contains(512));
    s.reset(63);
    CHECK_FALSE(s.test(63));
    CHECK(s.first() == 0);
    CHECK(s.next(0) == 64);
    CHECK(s.next(64) == 511);
    CHECK(s.next(511) == VertexSet::capacity);
}

TEST_CASE("first_n covers exactly the first n vertices")
{
    for (std::size_t n : { 0, 1, 63, 64, 65, 200, 512 }) {
        auto s = VertexSet::first_n(n);
        CHECK(s.count() == n);
        if (n > 0)
            CHECK(s.test(Vertex(n - 1)));
        if (n < VertexSet::capacity)
            CHECK_FALSE(s.contains(Vertex(n)));
    }
}

TEST_CASE("set algebra agrees with std::set")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Vertex> pick(0, 511);
    for (int round = 0; round < 50; ++round) {
        VertexSet a, b;
        std::set<Vertex> sa, sb;
        for (int i = 0; i < 60; ++i) {
            auto u = pick(rng), v = pick(rng);
            a.set(u);
            sa.insert(u);
            b.set(v);
            sb.insert(v);
        }
        std::set<Vertex> both, either, only_a;
        for (auto v : sa) {
            if (sb.count(v))
                both.insert(v);
            else
                only_a.insert(v);
        }
        either = sa;
        either.insert(sb.begin(), sb.end());

        auto as_set = [] (const VertexSet & s) {
            auto v = s.to_vector();
            return std::set<Vertex>(v.begin(), v.end());
        };
        CHECK(as_set(a & b) == both);
        CHECK(as_set(a | b) == either);
        CHECK(as_set(a - b) == only_a);
        CHECK(a.intersection_count(b) == both.size());
        CHECK(a.intersects(b) == ! both.empty());
        CHECK((a & b).is_subset_of(a));
        CHECK(a.count() == sa.size());
    }
}

TEST_CASE("iteration is ascending")
{
    auto s = VertexSet::of({ 400, 3, 70, 9 });
    std::vector<Vertex> seen(s.begin(), s.end());
    CHECK(seen == std::vector<Vertex>{ 3, 9, 70, 400 });
}

TEST_CASE("ordering compares members in ascending order")
{
    CHECK(VertexSet::of({ 1, 5 }) < VertexSet::of({ 2 }));
    CHECK(VertexSet::of({ 1 }) < VertexSet::of({ 1, 2 }));
    CHECK(VertexSet::of({ 3 }) == VertexSet::of({ 3 }));
}
