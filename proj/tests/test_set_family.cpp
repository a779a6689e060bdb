#include <doctest.h>

#include "naive.hpp"

#include <ekrlab/errors.hpp>
#include <ekrlab/paths.hpp>
#include <ekrlab/projective.hpp>
#include <ekrlab/set_family.hpp>

using namespace ekrlab;

namespace
{
    auto fam(unsigned ground, std::vector<std::vector<unsigned>> sets) -> SetFamily
    {
        std::vector<ElementSet> v;
        for (auto & s : sets) {
            ElementSet e;
            for (auto x : s)
                e.set(x);
            v.push_back(e);
        }
        return SetFamily(ground, v);
    }

    auto fano() -> SetFamily { return build_pg(make_field(2, 1)).lines(); }
}

TEST_CASE("element set order")
{
    ElementSet a{0, 1, 2}, b{0, 1}, c{0, 2}, d{1};
    CHECK(b < a);
    CHECK(a < c);
    CHECK(c < d);
    CHECK(ElementSet{} < d);
    CHECK(a.count() == 3);
    CHECK(a.intersection_count(c) == 2);
    CHECK(b.subset_of(a));
    CHECK(! c.subset_of(b));
}

TEST_CASE("family normalisation")
{
    auto f = fam(4, {{2, 3}, {0, 1}, {2, 3}});
    CHECK(f.size() == 2);
    CHECK(f[0] == ElementSet{0, 1});
    CHECK_THROWS_AS(fam(3, {{0, 3}}), InvalidParameter);
}

TEST_CASE("is_s_intersecting")
{
    CHECK(is_s_intersecting(fano(), 1));
    CHECK(! is_s_intersecting(fano(), 2));
    CHECK(is_s_intersecting(SetFamily(5, {}), 1));
    CHECK(is_s_intersecting(SetFamily(5, {}), 4));
    CHECK(is_s_intersecting(fam(3, {{0}}), 3));
}

TEST_CASE("is_exactly_s_intersecting")
{
    CHECK(is_exactly_s_intersecting(build_pg(make_field(3, 1)).lines(), 1));
    CHECK(! is_exactly_s_intersecting(fam(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}), 1));
    CHECK(is_exactly_s_intersecting(fam(5, {{0, 1, 2}}), 1));
    CHECK(is_exactly_s_intersecting(fam(5, {{0, 1, 2}}), 7));
}

TEST_CASE("full_star")
{
    auto p3 = to_setfamily(enumerate_paths_r(make_cycle(8), 3));
    CHECK(full_star(p3, ElementSet{0}).size() == 3);
    CHECK(full_star(p3, ElementSet{}).size() == p3.size());
    CHECK(full_star(fano(), ElementSet{0, 1}).size() == 1);

    // Antitone in X.
    CHECK(full_star(p3, ElementSet{0, 1}).size() <= full_star(p3, ElementSet{0}).size());
}

TEST_CASE("stats")
{
    auto st = stats(fano(), 3);
    CHECK(st.m == 7);
    CHECK(st.delta == 3);
    CHECK(st.delta_s[1] == 3);
    CHECK(st.delta_s[2] == 1);
    CHECK(st.min_size == 3);

    CHECK(stats(rotational_family(4, {0, 1, 2}), 1).delta == 3);

    auto one = stats(fam(8, {{0, 1, 2, 3, 4}}), 2);
    CHECK(one.delta == 1);
    CHECK(one.min_size == 5);
    CHECK(one.common == ElementSet{0, 1, 2, 3, 4});

    CHECK(! stats(SetFamily(4, {}), 1).common.has_value());
}

TEST_CASE("delta_s is non-increasing and matches a direct count")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto f = naive::random_intersecting(rng, 9, 10);
        auto st = stats(f, 3);
        CHECK(st.delta_s[1] == st.delta);
        CHECK(st.delta_s[1] == naive::max_degree(f));
        CHECK(st.delta_s[2] <= st.delta_s[1]);
        CHECK(st.delta_s[3] <= st.delta_s[2]);

        unsigned direct2 = 0;
        for (unsigned a = 0; a < 9; ++a)
            for (unsigned b = a + 1; b < 9; ++b)
                direct2 = std::max<unsigned>(direct2, static_cast<unsigned>(full_star(f, ElementSet{a, b}).size()));
        CHECK(st.delta_s[2] == direct2);
    }
}

TEST_CASE("is_triangular")
{
    auto pg3 = build_pg(make_field(3, 1));
    CHECK(is_triangular(triangular_odd(pg3)));
    CHECK(! is_triangular(rotational_family(4, {0, 1, 2})));
    CHECK(is_triangular(fam(3, {{0, 1}, {0, 2}})));
    CHECK(is_triangular(fam(3, {{0}})));
    CHECK(is_triangular(SetFamily(3, {})));
}

TEST_CASE("triangular iff max degree 2 on intersecting families")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto f = trial % 2 ? naive::random_intersecting(rng, 10, 8)
                           : naive::random_triangular(rng, 2 + static_cast<unsigned>(rng() % 5), 16);
        if (f.size() < 2)
            continue;
        REQUIRE(is_s_intersecting(f, 1));

        bool direct = true;
        for (std::size_t a = 0; a < f.size(); ++a)
            for (std::size_t b = a + 1; b < f.size(); ++b)
                for (std::size_t c = b + 1; c < f.size(); ++c)
                    direct = direct && (f[a] & f[b] & f[c]).none();
        CHECK(is_triangular(f) == direct);
        CHECK(is_triangular(f) == (stats(f, 1).delta == 2));
        if (direct)
            CHECK(f.size() <= 1 + stats(f, 1).min_size);
    }
}

TEST_CASE("is_sperner")
{
    CHECK(is_sperner(fano()));
    CHECK(! is_sperner(fam(2, {{0}, {0, 1}})));
    CHECK(! is_sperner(to_setfamily(enumerate_paths_upto(make_cycle(6), 3))));
}

TEST_CASE("is_s_star")
{
    auto c6 = make_cycle(6);
    auto star = fam(6, {{4, 5, 0}, {5, 0, 1}, {0, 1, 2}});
    auto r = is_s_star(star, 1);
    CHECK(r.is_star);
    CHECK(r.common == ElementSet{0});

    auto triangle = fam(6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
    CHECK(! is_s_star(triangle, 1).is_star);
    CHECK(is_s_star(triangle, 1).common.none());

    auto empty = is_s_star(SetFamily(6, {}), 1);
    CHECK(! empty.is_star);
    CHECK(empty.empty_family);
}

TEST_CASE("best_star")
{
    auto p3 = to_setfamily(enumerate_paths_r(make_cycle(8), 3));
    auto b = best_star(p3, 1);
    CHECK(b.size == 3);
    CHECK(b.center == ElementSet{0});

    auto b2 = best_star(p3, 2);
    CHECK(b2.size == 2);
    CHECK(b2.center == ElementSet{0, 1});

    CHECK(best_star(SetFamily(3, {}), 1).size == 0);
}

TEST_CASE("family text format")
{
    auto f = fam(6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
    auto text = emit_family(f);
    CHECK(text.rfind("# ground=6 count=3\n", 0) == 0);
    auto back = parse_family(text);
    CHECK(back.ground() == 6);
    CHECK(back.sets() == f.sets());

    CHECK(parse_family("# ground=3 count=2\n0 1\n# comment\n1 2\n").size() == 2);
    CHECK_THROWS_AS(parse_family("0 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_family("# ground=3 count=2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_family("# ground=2 count=1\n0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_family("# ground=3 count=1\n0 x\n"), ParseError);
}
