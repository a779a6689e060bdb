#include <doctest.h>

#include "naive.hpp"

#include <ekrlab/paths.hpp>
#include <ekrlab/projective.hpp>
#include <ekrlab/solvers.hpp>

using namespace ekrlab;

namespace
{
    auto paths_of(const Graph & g, unsigned r) -> SetFamily { return to_setfamily(enumerate_paths_r(g, r)); }

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

    auto common_count(const SetFamily & f, const std::vector<unsigned> & ids) -> unsigned
    {
        ElementSet c;
        for (std::size_t k = 0; k < ids.size(); ++k)
            c = k ? (c & f[ids[k]]) : f[ids[k]];
        return c.count();
    }

    auto pairwise(const SetFamily & f, const std::vector<unsigned> & ids, unsigned s) -> bool
    {
        for (auto a : ids)
            for (auto b : ids)
                if (a != b && f[a].intersection_count(f[b]) < s)
                    return false;
        return true;
    }

    auto random_family(std::mt19937_64 & rng, unsigned ground, unsigned m) -> SetFamily
    {
        std::vector<ElementSet> sets;
        for (unsigned i = 0; i < m; ++i) {
            ElementSet a;
            auto k = 1 + rng() % 4;
            while (a.count() < k)
                a.set(static_cast<unsigned>(rng() % ground));
            sets.push_back(a);
        }
        return SetFamily(ground, sets);
    }
}

TEST_CASE("compatibility graph")
{
    auto f = fam(6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}, {1, 3}});
    auto g = CompatibilityGraph::s_intersecting(f, 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(! g.adjacent(i, i));
        for (std::size_t j = 0; j < f.size(); ++j)
            CHECK(g.adjacent(i, j) == (i != j && f[i].intersects(f[j])));
    }
}

TEST_CASE("max_s_intersecting reference values")
{
    CHECK(max_s_intersecting(paths_of(make_cycle(8), 3), 1).value == 3);
    CHECK(max_s_intersecting(paths_of(make_sun(8, 1), 3), 1).value == 7);
    auto p4 = paths_of(make_sun(8, 1), 4);
    auto r = max_s_intersecting(p4, 1);
    CHECK(r.value == 12);
    CHECK(r.witness.size() == 12);
    CHECK(pairwise(p4, r.witness, 1));
    CHECK(! r.limits_hit);
}

TEST_CASE("max_s_intersecting equals the all-subsets scan")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        unsigned m = 4 + static_cast<unsigned>(rng() % 15);
        auto f = random_family(rng, 8, m);
        for (unsigned s = 1; s <= 2; ++s) {
            auto expect = naive::max_s_intersecting(f, s);
            auto got = max_s_intersecting(f, s);
            CHECK(got.value == expect.value);
            CHECK(got.witness.size() == got.value);
            CHECK(pairwise(f, got.witness, s));
            // Least optimal index list.
            CHECK(got.witness == *std::min_element(expect.optima.begin(), expect.optima.end()));

            auto all = enumerate_maximum_s_intersecting(f, s);
            REQUIRE(all.all_optima);
            auto sorted = *all.all_optima;
            std::sort(sorted.begin(), sorted.end());
            auto naive_sorted = expect.optima;
            std::sort(naive_sorted.begin(), naive_sorted.end());
            CHECK(sorted == naive_sorted);
        }
    }
}

TEST_CASE("path families against the all-subsets scan")
{
    std::vector<SetFamily> fs{paths_of(make_sun(4, 1), 3), paths_of(make_theta({2, 3, 3}), 3),
        paths_of(make_cycle(10), 4), paths_of(make_sun(6, 1), 3)};
    for (auto & f : fs) {
        REQUIRE(f.size() <= 20);
        CHECK(max_s_intersecting(f, 1).value == naive::max_s_intersecting(f, 1).value);
        CHECK(max_s_intersecting(f, 2).value == naive::max_s_intersecting(f, 2).value);
        CHECK(max_nonstar_s_intersecting(f, 1).value == naive::max_nonstar(f, 1).value);
    }
}

TEST_CASE("enumerate_maximum_s_intersecting reference values")
{
    auto c8 = paths_of(make_cycle(8), 3);
    auto r8 = enumerate_maximum_s_intersecting(c8, 1);
    REQUIRE(r8.all_optima);
    for (auto & opt : *r8.all_optima)
        CHECK(common_count(c8, opt) >= 1);

    auto c6 = paths_of(make_cycle(6), 3);
    auto r6 = enumerate_maximum_s_intersecting(c6, 1);
    REQUIRE(r6.all_optima);
    bool found = false;
    for (auto & opt : *r6.all_optima)
        if (common_count(c6, opt) == 0) {
            std::set<std::string> labels;
            for (auto i : opt)
                labels.insert(c6.label(i));
            found = found || labels == std::set<std::string>{"0-1-2", "2-3-4", "0-5-4"};
        }
    CHECK(found);

    auto k3 = paths_of(make_cycle(3), 2);
    auto rk = enumerate_maximum_s_intersecting(k3, 1);
    CHECK(rk.value == 3);
    REQUIRE(rk.all_optima);
    CHECK(rk.all_optima->size() == 1);
    CHECK(common_count(k3, rk.all_optima->front()) == 0);
}

TEST_CASE("optima cap")
{
    // 12 pairwise disjoint singletons: 12 optima of size 1.
    std::vector<std::vector<unsigned>> sets;
    for (unsigned i = 0; i < 12; ++i)
        sets.push_back({i});
    Limits l;
    l.max_optima = 5;
    auto r = enumerate_maximum_s_intersecting(fam(12, sets), 1, l);
    CHECK(r.limits_hit);
    CHECK(r.value == 1);
}

TEST_CASE("node budget")
{
    Limits l;
    l.max_nodes = 3;
    auto r = max_s_intersecting(paths_of(make_sun(8, 2), 4), 1, l);
    CHECK(r.limits_hit);
}

TEST_CASE("max_nonstar_s_intersecting")
{
    CHECK(max_nonstar_s_intersecting(paths_of(make_cycle(12), 5), 1).value == 3);
    CHECK(max_nonstar_s_intersecting(paths_of(make_cycle(9), 4), 1).value == 3);

    auto all4 = to_setfamily(enumerate_all_paths(make_cycle(4)));
    auto r = max_nonstar_s_intersecting(all4, 1);
    CHECK(r.value == 10);
    CHECK(common_count(all4, r.witness) == 0);
    CHECK(pairwise(all4, r.witness, 1));

    auto none = max_nonstar_s_intersecting(paths_of(make_cycle(10), 3), 1);
    CHECK(none.infeasible);
    CHECK(none.value == 0);

    auto e = max_nonstar_s_intersecting(paths_of(make_cycle(12), 5), 1, {}, true);
    REQUIRE(e.all_optima);
    for (auto & opt : *e.all_optima) {
        CHECK(opt.size() == 3);
        CHECK(pairwise(paths_of(make_cycle(12), 5), opt, 1));
    }
}

TEST_CASE("max_nonstar equals the all-subsets scan")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        auto f = random_family(rng, 7, 4 + static_cast<unsigned>(rng() % 14));
        for (unsigned s = 1; s <= 2; ++s) {
            auto expect = naive::max_nonstar(f, s);
            auto got = max_nonstar_s_intersecting(f, s);
            CHECK(got.value == expect.value);
            CHECK(got.infeasible == (expect.value == 0));
            if (got.value) {
                CHECK(pairwise(f, got.witness, s));
                CHECK(common_count(f, got.witness) < s);
            }
        }
    }
}

TEST_CASE("min_transversal")
{
    CHECK(min_transversal(build_pg(make_field(2, 1)).lines()).value == 3);
    CHECK(min_transversal(rotational_family(4, {0, 1, 2})).value == 2);
    CHECK(min_transversal(fam(5, {{1, 3, 4}})).value == 1);
    CHECK(min_transversal(SetFamily(3, {})).value == 0);

    auto bad = min_transversal(SetFamily(3, {ElementSet{}, ElementSet{1}}));
    CHECK(bad.infeasible);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 80; ++trial) {
        auto f = random_family(rng, 9, 1 + static_cast<unsigned>(rng() % 14));
        auto r = min_transversal(f);
        CHECK(r.value == naive::transversal(f));
        ElementSet hit;
        for (auto x : r.witness)
            hit.set(x);
        CHECK(hit.count() == r.value);
        for (auto & a : f)
            CHECK(a.intersects(hit));
    }
}

TEST_CASE("transversal sandwich on intersecting families")
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 150; ++trial) {
        auto f = naive::random_intersecting(rng, 12, 12);
        if (f.empty())
            continue;
        auto m = static_cast<unsigned>(f.size());
        auto st = stats(f, 1);
        auto tau = min_transversal(f).value;
        CHECK(tau >= (m + st.delta - 1) / st.delta);
        CHECK(tau <= (m + 1) / 2);
        CHECK(tau <= st.min_size);
    }
}

TEST_CASE("max_triangular_intersecting")
{
    CHECK(max_triangular_intersecting(build_pg(make_field(3, 1)).lines()).value == 4);
    CHECK(max_triangular_intersecting(build_pg(make_field(2, 1)).lines()).value == 4);
    CHECK(max_triangular_intersecting(build_pg(make_field(2, 2)).lines()).value == 6);

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        auto f = random_family(rng, 7, 4 + static_cast<unsigned>(rng() % 14));
        auto got = max_triangular_intersecting(f);
        CHECK(got.value == naive::max_triangular(f).value);
        CHECK(is_triangular(f.subfamily(got.witness)));
        CHECK(pairwise(f, got.witness, 1));
    }
}

TEST_CASE("max_intersecting_sperner")
{
    auto uniform = paths_of(make_cycle(8), 3);
    CHECK(max_intersecting_sperner(uniform).result.value == max_s_intersecting(uniform, 1).value);

    auto chain = fam(2, {{0}, {0, 1}});
    CHECK(max_intersecting_sperner(chain).result.value == 1);

    auto small = to_setfamily(enumerate_paths_upto(make_cycle(5), 3));
    REQUIRE(small.size() <= 20);
    CHECK(max_intersecting_sperner(small).result.value == naive::max_sperner(small).value);

    auto sp = max_intersecting_sperner(to_setfamily(enumerate_paths_upto(make_cycle(8), 4)));
    CHECK(! sp.result.limits_hit);
    CHECK(sp.all_optima_uniform.has_value());

    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        auto f = random_family(rng, 6, 4 + static_cast<unsigned>(rng() % 14));
        CHECK(max_intersecting_sperner(f).result.value == naive::max_sperner(f).value);
    }
}

TEST_CASE("helly_triple_check")
{
    auto c6 = paths_of(make_cycle(6), 3);
    auto h = helly_triple_check(c6);
    CHECK(! h.holds);
    REQUIRE(h.counterexample);
    auto [a, b, c] = *h.counterexample;
    CHECK(c6[a].intersects(c6[b]));
    CHECK(c6[a].intersects(c6[c]));
    CHECK(c6[b].intersects(c6[c]));
    CHECK((c6[a] & c6[b] & c6[c]).none());

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto t = make_random_tree(9, seed);
        for (unsigned r = 1; r <= 9; ++r)
            CHECK(helly_triple_check(paths_of(t, r)).holds);
    }
    CHECK(helly_triple_check(fam(3, {{0}, {1}})).holds);
}
