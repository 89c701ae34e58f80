#include <doctest.h>

#include "geometry_helpers.hpp"
#include "pierce/arrangement.hpp"
#include "pierce/errors.hpp"
#include "pierce/families.hpp"
#include "pierce/json_io.hpp"
#include "pierce/setsystem.hpp"

using namespace pierce;
using namespace testgeom;

TEST_CASE("fig1 family certifies") {
    const geom::RegionFamily fam = families::fig1_family();
    REQUIRE(fam.regions.size() == 4);
    CHECK(fam.regions[0].name == "F1");
    CHECK(fam.regions[3].name == "F4");

    REQUIRE(geom::check_general_position(fam).ok);
    const auto arr = geom::Arrangement::build(fam);
    CHECK(geom::check_non_piercing(arr).first);

    // all six pairwise-only containment patterns appear among the faces
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            bool found = false;
            for (const geom::Face& face : arr.faces()) {
                if (!face.bounded) continue;
                geom::Signature expected(4);
                expected.set(i).set(j);
                found = found || (face.signature == expected);
            }
            CHECK_MESSAGE(found, "pair cell {", i, ",", j, "} missing");
        }

    const sets::SetSystem system = families::to_set_system(fam);
    CHECK(system.labels == std::vector<std::string>{"F1", "F2", "F3", "F4"});
    auto [lambda, cert] = sets::dyadic_dual_vc(system);
    CHECK(lambda == 4);
    REQUIRE(cert.has_value());
    CHECK(sets::certificate_valid(system, *cert));

    CHECK(families::fig1_family() == fam);
}

TEST_CASE("set-system conversion of simple families") {
    const sets::SetSystem one =
        families::to_set_system(family({{"A", rect(0, 0, 10, 10), {}}}));
    CHECK(one.ground_size == 1);
    CHECK(one.sets == std::vector<std::vector<int>>{{0}});

    const sets::SetSystem venn = families::to_set_system(
        family({{"A", rect(0, 0, 2, 2), {}}, {"B", rect(1, 1, 3, 3), {}}}));
    CHECK(venn.ground_size == 3);
    REQUIRE(venn.sets.size() == 2);
    CHECK(venn.sets[0].size() == 2);
    CHECK(venn.sets[1].size() == 2);
    std::vector<int> common;
    std::set_intersection(venn.sets[0].begin(), venn.sets[0].end(),
                          venn.sets[1].begin(), venn.sets[1].end(),
                          std::back_inserter(common));
    CHECK(common.size() == 1);
}

TEST_CASE("generator config validation") {
    families::GeneratorConfig config;
    config.disk_vertex_count = 4;
    CHECK_THROWS_AS(families::validate(config), SchemaError);
    config = {};
    config.family_size = 0;
    CHECK_THROWS_AS(families::validate(config), SchemaError);
    config = {};
    config.coordinate_scale = 0;
    CHECK_THROWS_AS(families::validate(config), SchemaError);
}

TEST_CASE("random disk families pass their own checks when re-verified") {
    for (std::uint64_t seed : {1ULL, 5ULL, 9ULL}) {
        families::GeneratorConfig config;
        config.seed = seed;
        config.family_size = seed == 1 ? 1 : 5;
        const geom::RegionFamily fam = families::random_disk_family(config);
        CHECK(fam.regions.size() == static_cast<std::size_t>(config.family_size));
        CHECK(geom::check_general_position(fam).ok);
        CHECK(geom::check_non_piercing(fam).first);
    }
}

TEST_CASE("generation is deterministic") {
    families::GeneratorConfig config;
    config.seed = 1234;
    config.family_size = 4;
    const auto a = families::random_disk_family(config);
    const auto b = families::random_disk_family(config);
    CHECK(a == b);
    CHECK(io::region_family_to_json(a) == io::region_family_to_json(b));
}

TEST_CASE("exhausted rejection budget throws") {
    families::GeneratorConfig config;
    config.max_rejections = 0;
    CHECK_THROWS_AS(families::random_disk_family(config), RejectionBudgetExhausted);
}

TEST_CASE("conversion invariance under translation and scaling") {
    families::GeneratorConfig config;
    config.seed = 31;
    config.family_size = 4;
    config.coordinate_scale = 10'000;
    const geom::RegionFamily fam = families::random_disk_family(config);
    const sets::BoundReport base = sets::analyze(families::to_set_system(fam));
    geom::RegionFamily moved = fam;
    for (auto& region : moved.regions)
        for (auto& p : region.outer) p = {3 * p.x + 12345, 3 * p.y - 54321};
    const sets::BoundReport after = sets::analyze(families::to_set_system(moved));
    CHECK(base.nu == after.nu);
    CHECK(base.tau == after.tau);
    CHECK(base.lambda == after.lambda);
}

TEST_CASE("lambda5 search basics") {
    families::GeneratorConfig config;
    config.seed = 3;
    config.family_size = 1;
    const families::SearchReport report = families::lambda5_search(config, 1);
    CHECK(report.max_lambda == 1);
    CHECK(report.trials.size() == 1);
    CHECK(report.histogram.at(1) == 1);
    CHECK(report.bugs.empty());
}

TEST_CASE("serial and parallel search produce the identical report") {
    families::GeneratorConfig config;
    config.seed = 99;
    config.family_size = 5;
    const auto serial = families::lambda5_search(config, 12, {.parallel = false});
    const auto parallel = families::lambda5_search(config, 12, {.parallel = true});
    CHECK(io::search_report_to_json(serial) == io::search_report_to_json(parallel));
}

TEST_CASE("lambda = 4 is attained by random families") {
    // base seeds found by scanning: these 50-trial windows reach the
    // tight value of the non-piercing bound, and never exceed it
    for (const auto& [seed, size] :
         std::vector<std::pair<std::uint64_t, int>>{{37, 4}, {2, 8}}) {
        families::GeneratorConfig config;
        config.seed = seed;
        config.family_size = size;
        const families::SearchReport report = families::lambda5_search(config, 50);
        CHECK(report.max_lambda == 4);
        CHECK(report.histogram.count(4) == 1);
        CHECK(report.bugs.empty());
    }
}
