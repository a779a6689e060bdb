#include <doctest.h>

#include <ekrlab/errors.hpp>
#include <ekrlab/graph.hpp>

using namespace ekrlab;

namespace
{
    auto edge_count_and_order_match(const Graph & a, const Graph & b) -> bool
    {
        return a.order() == b.order() && a.edges() == b.edges();
    }
}

TEST_CASE("make_cycle")
{
    auto k3 = make_cycle(3);
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);

    auto c8 = make_cycle(8);
    CHECK(c8.order() == 8);
    CHECK(c8.size() == 8);
    CHECK(girth(c8) == Girth::of(8));

    auto c6 = make_cycle(6);
    for (unsigned v = 0; v < 6; ++v)
        CHECK(c6.degree(v) == 2);
    CHECK(c6.adjacent(5, 0));

    CHECK_THROWS_AS(make_cycle(2), InvalidParameter);
}

TEST_CASE("make_sun")
{
    auto s41 = make_sun(4, 1);
    CHECK(s41.order() == 8);
    CHECK(s41.size() == 8);
    CHECK(s41.kind() == GraphKind::sun);

    // v_i^j is i(t+1)+j.
    CHECK(sun_vertex(1, 2, 1) == 5);
    CHECK(s41.adjacent(sun_vertex(1, 2, 0), sun_vertex(1, 2, 1)));
    CHECK(s41.adjacent(sun_vertex(1, 3, 0), sun_vertex(1, 0, 0)));
    CHECK(s41.labels()[5] == StructuredLabel{StructuredLabel::Kind::sun_vertex, 2, 1});

    CHECK(edge_count_and_order_match(make_sun(5, 0), make_cycle(5)));
    CHECK(girth(make_sun(5, 2)) == Girth::of(5));

    CHECK_THROWS_AS(make_sun(2, 1), InvalidParameter);
}

TEST_CASE("make_theta")
{
    auto k3 = make_theta({1, 2});
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);
    CHECK(girth(k3) == Girth::of(3));

    CHECK(girth(make_theta({2, 2, 3})) == Girth::of(4));

    auto t233 = make_theta({2, 3, 3});
    CHECK(t233.order() == 7);
    CHECK(t233.size() == 8);
    CHECK(t233.degree(0) == 3);
    CHECK(t233.degree(1) == 3);
    CHECK(t233.labels()[0].kind == StructuredLabel::Kind::theta_hub_u);
    CHECK(t233.labels()[1].kind == StructuredLabel::Kind::theta_hub_v);
    // Strand 1 has one interior vertex, id 2.
    CHECK(t233.labels()[2] == StructuredLabel{StructuredLabel::Kind::theta_interior, 1, 1});

    CHECK_THROWS_AS(make_theta({1, 1, 2}), InvalidParameter);
    CHECK_THROWS_AS(make_theta({3, 2}), InvalidParameter);
    CHECK_THROWS_AS(make_theta({4}), InvalidParameter);
}

TEST_CASE("two-strand theta is a cycle")
{
    for (unsigned a1 = 1; a1 <= 4; ++a1)
        for (unsigned a2 = std::max(a1, 2u); a2 <= 6; ++a2) {
            auto g = make_theta({a1, a2});
            CHECK(g.order() == a1 + a2);
            CHECK(g.size() == a1 + a2);
            for (unsigned v = 0; v < g.order(); ++v)
                CHECK(g.degree(v) == 2);
            CHECK(g.is_connected());
            CHECK(girth(g) == Girth::of(a1 + a2));
        }
}

TEST_CASE("girth identities")
{
    for (unsigned n = 3; n <= 9; ++n)
        for (unsigned t = 0; t <= 2; ++t)
            CHECK(girth(make_sun(n, t)) == Girth::of(n));
    CHECK(girth(make_theta({2, 5, 5})) == Girth::of(7));
    CHECK(girth(make_theta({3, 3, 3})) == Girth::of(6));
    CHECK(girth(make_complete(4)) == Girth::of(3));
    CHECK(girth(subdivide(make_complete(4), 3)) == Girth::of(9));
}

TEST_CASE("random trees")
{
    auto one = make_random_tree(1, 5);
    CHECK(one.order() == 1);
    CHECK(one.size() == 0);
    CHECK(girth(one).is_infinite());

    auto two = make_random_tree(2, 5);
    CHECK(two.size() == 1);

    auto t9 = make_random_tree(9, 7);
    CHECK(t9.size() == 8);
    CHECK(t9.is_connected());
    CHECK(girth(t9).is_infinite());

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        unsigned n = 1 + static_cast<unsigned>(seed % 12);
        auto t = make_random_tree(n, seed);
        CHECK(t.is_connected());
        CHECK(t.size() == n - 1);
        CHECK(girth(t).is_infinite());
    }

    CHECK(make_random_tree(10, 42).edges() == make_random_tree(10, 42).edges());
    CHECK_THROWS_AS(make_random_tree(0, 1), InvalidParameter);
}

TEST_CASE("subdivide")
{
    auto k4 = make_complete(4);
    auto s = subdivide(k4, 3);
    CHECK(s.order() == 4 + 6 * 2);
    CHECK(s.size() == 18);
    CHECK(edge_count_and_order_match(subdivide(k4, 1), k4));
    CHECK_THROWS_AS(subdivide(k4, 0), InvalidParameter);
}

TEST_CASE("graph validation")
{
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidParameter);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidParameter);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidParameter);
    Graph g(3, {{2, 0}, {1, 0}});
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(2, 0));
    CHECK(g.neighbours(0) == std::vector<Vertex>{1, 2});
}

TEST_CASE("parse and emit")
{
    auto k3 = parse_graph("3 3\n0 1\n1 2\n2 0\n");
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);
    CHECK(emit_graph(k3) == "3 3\n0 1\n0 2\n1 2\n");
    CHECK(emit_graph(parse_graph(emit_graph(k3))) == emit_graph(k3));

    auto sun = make_sun(5, 2);
    CHECK(parse_graph(emit_graph(sun)).edges() == sun.edges());

    try {
        parse_graph("2 1\n0 2\n");
        FAIL("expected a parse error");
    }
    catch (const ParseError & e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("x 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
}
