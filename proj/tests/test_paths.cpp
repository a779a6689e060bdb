#include <doctest.h>

#include "naive.hpp"

#include <ekrlab/errors.hpp>
#include <ekrlab/paths.hpp>
#include <ekrlab/oracles.hpp>

#include <map>

using namespace ekrlab;

namespace
{
    auto sequences(const PathFamily & pf) -> std::set<std::vector<unsigned>>
    {
        std::set<std::vector<unsigned>> out;
        for (auto & p : pf.paths)
            out.insert(p.seq);
        return out;
    }

    void check_against_naive(const Graph & g, unsigned r)
    {
        auto pf = enumerate_paths_r(g, r);
        CHECK(sequences(pf) == naive::paths(g, r));
        CHECK(sequences(pf).size() == pf.size());
    }
}

TEST_CASE("canonical orientation")
{
    auto p = canonical_path({3, 1, 0});
    CHECK(p.seq == std::vector<Vertex>{0, 1, 3});
    CHECK(p.vset == ElementSet{0, 1, 3});
    CHECK(p.r() == 3);
    CHECK(p.label() == "0-1-3");
    CHECK(canonical_path({2}).seq == std::vector<Vertex>{2});
}

TEST_CASE("enumerate_paths_r reference values")
{
    CHECK(enumerate_paths_r(make_cycle(8), 3).size() == 8);
    CHECK(enumerate_paths_r(make_sun(4, 1), 3).size() == 12);
    for (unsigned n = 3; n <= 12; ++n) {
        std::size_t total = 0;
        for (unsigned r = 1; r <= n; ++r) {
            auto c = enumerate_paths_r(make_cycle(n), r).size();
            CHECK(c == n);
            total += c;
        }
        CHECK(total == n * n);
    }
    CHECK(enumerate_paths_r(make_cycle(5), 6).size() == 0);
}

TEST_CASE("enumeration agrees with the permutation oracle")
{
    for (unsigned r = 1; r <= 5; ++r) {
        check_against_naive(make_sun(4, 1), r);
        check_against_naive(make_theta({2, 3, 3}), r);
        check_against_naive(make_complete(5), r);
        check_against_naive(make_random_tree(8, 3), r);
    }
    check_against_naive(make_sun(5, 2), 4);
    check_against_naive(subdivide(make_complete(4), 2), 5);
}

TEST_CASE("paths are sorted, canonical and simple")
{
    auto g = make_theta({2, 3, 3});
    auto pf = enumerate_paths_r(g, 4);
    CHECK(std::is_sorted(pf.paths.begin(), pf.paths.end()));
    for (auto & p : pf.paths) {
        CHECK(p.vset.count() == p.r());
        auto rev = p.seq;
        std::reverse(rev.begin(), rev.end());
        CHECK(p.seq <= rev);
        for (std::size_t i = 0; i + 1 < p.seq.size(); ++i)
            CHECK(g.adjacent(p.seq[i], p.seq[i + 1]));
    }
}

TEST_CASE("reversal stability")
{
    std::vector<Graph> graphs{make_sun(5, 2), make_theta({2, 5, 5}), make_complete(5), make_random_tree(11, 9)};
    for (auto & g : graphs)
        for (unsigned r = 1; r <= 6; ++r) {
            auto a = enumerate_paths_r(g, r);
            auto b = enumerate_paths_r(g, r, {true});
            CHECK(a.paths == b.paths);
        }
}

TEST_CASE("enumerate_paths_upto")
{
    CHECK(enumerate_paths_upto(make_cycle(5), 2).size() == 10);
    CHECK(enumerate_paths_upto(make_cycle(7), 7).size() == 49);
    CHECK(enumerate_paths_upto(make_sun(4, 1), 2).size() == 16);
    auto pf = enumerate_paths_upto(make_sun(4, 1), 3);
    CHECK(pf.size() == 8 + 8 + 12);
    CHECK(std::is_sorted(pf.paths.begin(), pf.paths.end()));
}

TEST_CASE("to_setfamily")
{
    auto f = to_setfamily(enumerate_paths_r(make_cycle(8), 3));
    CHECK(f.size() == 8);
    for (auto & a : f)
        CHECK(a.count() == 3);
    CHECK(! f.multiplicity_note());

    auto k3 = to_setfamily(enumerate_paths_r(make_cycle(3), 2));
    CHECK(k3.size() == 3);

    auto t = enumerate_paths_r(make_theta({2, 3, 3}), 4);
    auto tf = to_setfamily(t);
    CHECK(tf.size() == t.size());
    CHECK(tf.size() == naive::paths(make_theta({2, 3, 3}), 4).size());

    // K_3 has three 3-paths on one vertex set; all are kept and flagged.
    auto tri = to_setfamily(enumerate_paths_r(make_cycle(3), 3));
    CHECK(tri.size() == 3);
    REQUIRE(tri.multiplicity_note());
    CHECK(tri.label(0) != tri.label(1));
}

TEST_CASE("size cap")
{
    CHECK_THROWS_AS(enumerate_paths_r(make_cycle(129), 2), InvalidParameter);
    CHECK_NOTHROW(enumerate_paths_r(make_cycle(128), 2));
}

TEST_CASE("image_on_cycle")
{
    auto s41 = make_sun(4, 1);
    auto p = canonical_path({sun_vertex(1, 0, 1), sun_vertex(1, 0, 0), sun_vertex(1, 1, 0), sun_vertex(1, 1, 1)});
    auto im = image_on_cycle(p, s41);
    REQUIRE(im);
    CHECK(im->seq == std::vector<Vertex>{sun_vertex(1, 0, 0), sun_vertex(1, 1, 0)});

    auto on_cycle = canonical_path({sun_vertex(1, 1, 0), sun_vertex(1, 2, 0), sun_vertex(1, 3, 0)});
    CHECK(image_on_cycle(on_cycle, s41)->seq == on_cycle.seq);

    CHECK(! image_on_cycle(canonical_path({sun_vertex(1, 2, 1)}), s41));

    CHECK_THROWS_AS(image_on_cycle(on_cycle, make_theta({2, 3, 3})), HostMismatch);
    CHECK_THROWS_AS(image_on_cycle(canonical_path({1, 3}), s41), HostMismatch);
}

TEST_CASE("sun images are paths and lifts have the stated sizes")
{
    for (unsigned n = 3; n <= 8; ++n)
        for (unsigned t = 0; t <= 2; ++t) {
            auto g = make_sun(n, t);
            auto cycle = make_cycle(n);
            std::map<std::vector<Vertex>, std::size_t> lifts;
            std::size_t pendant_only = 0;
            for (auto & p : enumerate_all_paths(g).paths) {
                auto im = image_on_cycle(p, g);
                if (! im) {
                    ++pendant_only;
                    continue;
                }
                // Image must be a path of the cycle, written in cycle ids.
                std::vector<Vertex> cyc;
                for (auto v : im->seq) {
                    CHECK(v % (t + 1) == 0);
                    cyc.push_back(v / (t + 1));
                }
                for (std::size_t i = 0; i + 1 < cyc.size(); ++i)
                    CHECK(cycle.adjacent(cyc[i], cyc[i + 1]));
                ++lifts[im->seq];
            }
            CHECK(pendant_only == n * t);
            CHECK(lifts.size() == n * n);
            for (auto & [seq, count] : lifts) {
                if (seq.size() == 1)
                    CHECK(count == static_cast<std::size_t>(binomial(t + 1, 2) + 1));
                else
                    CHECK(count == (t + 1) * (t + 1));
            }
        }
}
