#include <doctest.h>

#include <algorithm>
#include <set>

#include "geometry_helpers.hpp"
#include "pierce/arrangement.hpp"
#include "pierce/errors.hpp"
#include "pierce/rng.hpp"

using namespace pierce;
using namespace testgeom;
using geom::Arrangement;

namespace {

std::set<std::vector<bool>> signature_set(const Arrangement& arr) {
    std::set<std::vector<bool>> sigs;
    for (const geom::Face& face : arr.faces()) {
        std::vector<bool> bits(face.signature.size());
        for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = face.signature.test(i);
        sigs.insert(bits);
    }
    return sigs;
}

} // namespace

TEST_CASE("single square arrangement") {
    const auto arr = Arrangement::build(family({{"A", rect(0, 0, 10, 10), {}}}));
    REQUIRE(arr.faces().size() == 2);
    const geom::Face& outside = arr.faces()[arr.unbounded_face()];
    CHECK_FALSE(outside.bounded);
    CHECK(outside.signature.none());
    const geom::Face& inside = arr.faces()[1 - arr.unbounded_face()];
    CHECK(inside.bounded);
    CHECK(inside.signature.test(0));
    CHECK(inside.adjacent == std::vector<int>{arr.unbounded_face()});
    // the representative must really be interior
    CHECK(geom::point_in_region({"A", rect(0, 0, 10, 10), {}}, inside.representative));
}

TEST_CASE("two crossing squares realize all four patterns") {
    const auto arr = Arrangement::build(
        family({{"A", rect(0, 0, 2, 2), {}}, {"B", rect(1, 1, 3, 3), {}}}));
    CHECK(arr.faces().size() == 4);
    CHECK(signature_set(arr) ==
          std::set<std::vector<bool>>{{false, false},
                                      {true, false},
                                      {false, true},
                                      {true, true}});
}

TEST_CASE("adjacent faces differ in exactly one region") {
    const auto arr = Arrangement::build(
        family({{"A", rect(0, 0, 4, 4), {}},
                {"B", rect(1, 1, 5, 5), {}},
                {"C", rect(2, -1, 3, 6), {}}}));
    for (std::size_t f = 0; f < arr.faces().size(); ++f)
        for (int g : arr.faces()[f].adjacent) {
            auto diff = arr.faces()[f].signature ^ arr.faces()[g].signature;
            CHECK(diff.count() == 1);
        }
}

TEST_CASE("difference components") {
    SUBCASE("crossing bars sever each other") {
        const auto arr = Arrangement::build(crossing_bars());
        CHECK(geom::difference_components(arr, 0, 1) == 2);
        CHECK(geom::difference_components(arr, 1, 0) == 2);
        const auto [ok, offenders] = geom::check_non_piercing(arr);
        CHECK_FALSE(ok);
        CHECK(offenders == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
    }
    SUBCASE("nested squares: annulus is connected, inner minus outer is empty") {
        const auto arr = Arrangement::build(
            family({{"A", rect(0, 0, 10, 10), {}}, {"B", rect(3, 3, 7, 7), {}}}));
        CHECK(geom::difference_components(arr, 0, 1) == 1);
        CHECK(geom::difference_components(arr, 1, 0) == 0);
        CHECK(geom::check_non_piercing(arr).first);
    }
    SUBCASE("two generically crossing 32-gon disks") {
        const auto arr = Arrangement::build(
            family({{"A", regular_gon(0, 0, 50000, 32), {}},
                    {"B", regular_gon(60000, 9000, 50000, 32), {}}}));
        CHECK(geom::difference_components(arr, 0, 1) == 1);
        CHECK(geom::difference_components(arr, 1, 0) == 1);
        CHECK(geom::check_non_piercing(arr).first);
    }
    SUBCASE("single region family is vacuously non-piercing") {
        const auto arr = Arrangement::build(family({{"A", rect(0, 0, 3, 3), {}}}));
        CHECK(geom::check_non_piercing(arr).first);
        CHECK_THROWS_AS(geom::difference_components(arr, 0, 0), InvalidIndex);
    }
}

TEST_CASE("build rejects general-position violations") {
    CHECK_THROWS_AS(Arrangement::build(family({{"A", rect(0, 0, 10, 10), {}},
                                               {"B", rect(10, 10, 20, 20), {}}})),
                    GeneralPositionViolation);
}

TEST_CASE("differences through holed regions") {
    // expected counts verified against an independent polygon library
    geom::RegionFamily fam = family(
        {{"annulus", rect(0, 0, 40, 40), {{{10, 10}, {10, 30}, {30, 30}, {30, 10}}}},
         {"inner", rect(14, 14, 26, 26), {}},
         {"straddle", rect(24, 17, 37, 23), {}},
         {"bar", {{-5, 18}, {45, 19}, {45, 21}, {-5, 22}}, {}}});
    const auto arr = Arrangement::build(fam);
    const int annulus = 0, inner = 1, straddle = 2, bar = 3;
    CHECK(geom::difference_components(arr, annulus, inner) == 1);
    CHECK(geom::difference_components(arr, inner, annulus) == 1);
    CHECK(geom::difference_components(arr, annulus, bar) == 2);
    CHECK(geom::difference_components(arr, bar, annulus) == 3);
    CHECK(geom::difference_components(arr, bar, inner) == 2);
    CHECK(geom::difference_components(arr, straddle, bar) == 2);
    CHECK(geom::difference_components(arr, straddle, annulus) == 1);
    CHECK_FALSE(geom::check_non_piercing(arr).first);
}

TEST_CASE("region with a hole produces an empty-signature pocket") {
    const auto arr = Arrangement::build(family(
        {{"A", rect(0, 0, 10, 10), {{{2, 2}, {2, 8}, {8, 8}, {8, 2}}}}}));
    // faces: outside, the ring-shaped region, the pocket inside the hole
    REQUIRE(arr.faces().size() == 3);
    int bounded_empty = 0, bounded_full = 0;
    for (const geom::Face& face : arr.faces()) {
        if (!face.bounded) continue;
        face.signature.none() ? ++bounded_empty : ++bounded_full;
    }
    CHECK(bounded_empty == 1);
    CHECK(bounded_full == 1);
}

TEST_CASE("locate agrees with direct containment tests") {
    SplitMix64 rng(77);
    const RegionFamily fam =
        family({{"A", regular_gon(0, 0, 40000, 12), {}},
                {"B", regular_gon(30000, 10000, 35000, 12, 0.4), {}},
                {"C", rect(-50000, -20000, 20000, 5000), {}}});
    REQUIRE(geom::check_general_position(fam).ok);
    const auto arr = Arrangement::build(fam);
    int located = 0;
    for (int i = 0; i < 300; ++i) {
        const geom::RPoint p{Rational(rng.range(-80000, 80000)),
                             Rational(rng.range(-80000, 80000))};
        bool on_boundary = false;
        for (const auto& region : fam.regions)
            on_boundary = on_boundary || geom::point_on_boundary(region, p);
        const int face = arr.locate(p);
        if (on_boundary) {
            CHECK(face == -1);
            continue;
        }
        REQUIRE(face >= 0);
        ++located;
        for (std::size_t r = 0; r < fam.regions.size(); ++r)
            CHECK(arr.faces()[face].signature.test(r) ==
                  geom::point_in_region(fam.regions[r], p));
    }
    CHECK(located >= 290);
    // representatives locate back to their own faces
    for (std::size_t f = 0; f < arr.faces().size(); ++f)
        CHECK(arr.locate(arr.faces()[f].representative) == static_cast<int>(f));
}

TEST_CASE("arrangement is deterministic") {
    const RegionFamily fam = family({{"A", regular_gon(0, 0, 40000, 16), {}},
                                     {"B", regular_gon(25000, 5000, 30000, 16), {}}});
    const auto a = Arrangement::build(fam);
    const auto b = Arrangement::build(fam);
    REQUIRE(a.faces().size() == b.faces().size());
    for (std::size_t f = 0; f < a.faces().size(); ++f) {
        CHECK(a.faces()[f].signature == b.faces()[f].signature);
        CHECK(a.faces()[f].representative == b.faces()[f].representative);
        CHECK(a.faces()[f].adjacent == b.faces()[f].adjacent);
        CHECK(a.faces()[f].bounded == b.faces()[f].bounded);
    }
}

TEST_CASE("difference counts are invariant under translation and scaling") {
    const RegionFamily base =
        family({{"A", regular_gon(0, 0, 3000, 10), {}},
                {"B", regular_gon(2500, 800, 2600, 10, 0.37), {}},
                {"C", rect(-4000, -2500, 1500, -500), {}}});
    REQUIRE(geom::check_general_position(base).ok);
    const auto transform = [&](std::int64_t scale, std::int64_t dx, std::int64_t dy) {
        RegionFamily f = base;
        for (auto& region : f.regions)
            for (auto& p : region.outer) p = {p.x * scale + dx, p.y * scale + dy};
        return f;
    };
    const auto reference = Arrangement::build(base);
    for (const auto& [scale, dx, dy] :
         std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>>{
             {1, 7777, -3333}, {3, 0, 0}, {5, -100000, 250000}}) {
        const auto moved = Arrangement::build(transform(scale, dx, dy));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                CHECK(geom::difference_components(moved, i, j) ==
                      geom::difference_components(reference, i, j));
            }
    }
}

TEST_CASE("every region contributes a face and signatures stay within faces") {
    const RegionFamily fam = family({{"A", regular_gon(0, 0, 40000, 12), {}},
                                     {"B", regular_gon(26000, 9000, 33000, 12), {}},
                                     {"C", regular_gon(-31000, 4000, 28000, 12), {}}});
    const auto arr = Arrangement::build(fam);
    CHECK(signature_set(arr).size() <= arr.faces().size());
    for (std::size_t r = 0; r < fam.regions.size(); ++r) {
        bool contributes = false;
        for (const geom::Face& face : arr.faces())
            contributes = contributes || (face.bounded && face.signature.test(r));
        CHECK(contributes);
    }
}
