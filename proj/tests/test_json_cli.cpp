#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "geometry_helpers.hpp"
#include "pierce/cli.hpp"
#include "pierce/errors.hpp"
#include "pierce/families.hpp"
#include "pierce/json_io.hpp"
#include "pierce/svg.hpp"

using namespace pierce;
using namespace testgeom;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("pierce_test_" + name);
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path);
    out << contents;
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("set system JSON round trip") {
    sets::SetSystem s;
    s.ground_size = 4;
    s.sets = {{0, 2}, {}, {1, 2, 3}};
    s.labels = {"a", "b", "c"};
    const io::Json j = io::set_system_to_json(s);
    const sets::SetSystem back = io::set_system_from_json(j);
    CHECK(back.ground_size == s.ground_size);
    CHECK(back.sets == s.sets);
    CHECK(back.labels == s.labels);

    CHECK_THROWS_AS(io::set_system_from_json(io::Json::parse(R"({"sets": []})")),
                    SchemaError);
    CHECK_THROWS_AS(io::set_system_from_json(
                        io::Json::parse(R"({"ground_size": 2, "sets": [[0, 5]]})")),
                    SchemaError);
    CHECK_THROWS_AS(io::set_system_from_json(
                        io::Json::parse(R"({"ground_size": 2, "sets": [[1.5]]})")),
                    SchemaError);
}

TEST_CASE("region family JSON round trip") {
    const geom::RegionFamily fam =
        family({{"A", rect(0, 0, 10, 10), {{{2, 2}, {2, 4}, {4, 4}, {4, 2}}}},
                {"B", rect(20, 20, 30, 30), {}}});
    CHECK(io::region_family_from_json(io::region_family_to_json(fam)) == fam);

    CHECK_THROWS_AS(io::region_family_from_json(io::Json::parse(R"({"name": "x"})")),
                    SchemaError);
    CHECK_THROWS_AS(
        io::region_family_from_json(io::Json::parse(
            R"({"regions": [{"name": "A", "outer": [[0, 0.5], [1, 0], [1, 1]]}]})")),
        SchemaError);
    CHECK_THROWS_AS(
        io::region_family_from_json(io::Json::parse(
            R"({"regions": [{"name": "A", "outer": [[0, 3000000000], [1, 0], [1, 1]]}]})")),
        SchemaError);
}

TEST_CASE("bound report JSON carries all fields") {
    const io::Json j = io::bound_report_to_json(sets::analyze(
        io::set_system_from_json(io::Json::parse(
            R"({"ground_size": 3, "sets": [[0, 1], [1, 2], [0, 2]]})"))));
    CHECK(j["nu"] == 1);
    CHECK(j["tau"] == 2);
    CHECK(j["lambda"] == 3);
    CHECK(j["dsw_bound"].is_string());
    CHECK(j["theorem1_bound"] == "35200");
    CHECK(j["degenerate"] == false);
}

TEST_CASE("cli: bound") {
    auto r = run_cli({"bound", "--lambda", "4", "--nu", "1"});
    CHECK(r.code == 0);
    CHECK(io::Json::parse(r.out)["dsw_bound"] == "35200");

    r = run_cli({"bound", "--lambda", "1", "--nu", "1"});
    CHECK(io::Json::parse(r.out)["dsw_bound"] == "220");

    r = run_cli({"bound", "--lambda", "0", "--nu", "9"});
    CHECK(io::Json::parse(r.out)["dsw_bound"] == "0");

    CHECK(run_cli({"bound", "--lambda", "2.5", "--nu", "1"}).code == 2);
    CHECK(run_cli({"bound", "--lambda", "-1", "--nu", "1"}).code == 2);
    CHECK(run_cli({"bound", "--lambda", "1"}).code == 2);
}

TEST_CASE("cli: analyze abstract") {
    const auto path = temp_file("triangle.json");
    write_file(path, R"({"ground_size": 3, "sets": [[0, 1], [1, 2], [0, 2]]})");

    auto r = run_cli({"analyze", path.string(), "--abstract"});
    CHECK(r.code == 0);
    const io::Json report = io::Json::parse(r.out);
    CHECK(report["nu"] == 1);
    CHECK(report["tau"] == 2);
    CHECK(report["lambda"] == 3);

    r = run_cli({"analyze", path.string(), "--abstract", "--pretty"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lambda") != std::string::npos);

    // exactly one input mode must be chosen
    CHECK(run_cli({"analyze", path.string()}).code == 2);
    CHECK(run_cli({"analyze", path.string(), "--abstract", "--geometry"}).code == 2);
    CHECK(run_cli({"analyze", "/nonexistent.json", "--abstract"}).code == 2);

    const auto empty_set = temp_file("empty_set.json");
    write_file(empty_set, R"({"ground_size": 2, "sets": [[0], []]})");
    r = run_cli({"analyze", empty_set.string(), "--abstract"});
    CHECK(r.code == 2);
    CHECK(r.err.find("empty") != std::string::npos);

    const auto bad = temp_file("bad.json");
    write_file(bad, "{not json");
    CHECK(run_cli({"analyze", bad.string(), "--abstract"}).code == 2);
}

TEST_CASE("cli: fig1 emit, re-analyze, nonpiercing") {
    const auto fam_path = temp_file("fig1.json");
    const auto svg_path = temp_file("fig1.svg");
    auto r = run_cli({"fig1", "--out", fam_path.string(), "--svg", svg_path.string()});
    CHECK(r.code == 0);
    CHECK(io::Json::parse(r.out)["lambda"] == 4);

    // emitted file re-parses to the identical in-memory family
    CHECK(io::region_family_from_json(io::load_json_file(fam_path.string())) ==
          families::fig1_family());

    std::ifstream svg(svg_path);
    std::stringstream svg_text;
    svg_text << svg.rdbuf();
    std::size_t paths = 0, at = 0;
    while ((at = svg_text.str().find("<path", at)) != std::string::npos) {
        ++paths;
        ++at;
    }
    CHECK(paths == 4);

    r = run_cli({"analyze", fam_path.string(), "--geometry"});
    CHECK(r.code == 0);
    const io::Json report = io::Json::parse(r.out);
    CHECK(report["lambda"] == 4);
    CHECK(report["non_piercing"] == true);
    CHECK(report["offending_pairs"].empty());

    CHECK(run_cli({"nonpiercing", fam_path.string()}).code == 0);
}

TEST_CASE("cli: nonpiercing detects the crossing bars") {
    const auto path = temp_file("bars.json");
    write_file(path, io::region_family_to_json(crossing_bars()).dump());
    const auto r = run_cli({"nonpiercing", path.string()});
    CHECK(r.code == 1);
    const io::Json report = io::Json::parse(r.out);
    CHECK(report["non_piercing"] == false);
    CHECK(report["offending_pairs"] ==
          io::Json::parse(R"([["F1", "F2"], ["F2", "F1"]])"));

    // malformed geometry is an input error, not a verdict, and the
    // diagnostic names the offending regions and the location
    const auto touching = temp_file("touching.json");
    write_file(touching,
               io::region_family_to_json(
                   family({{"A", rect(0, 0, 10, 10), {}},
                           {"B", rect(10, 10, 20, 20), {}}}))
                   .dump());
    const auto t = run_cli({"nonpiercing", touching.string()});
    CHECK(t.code == 2);
    CHECK(t.err.find("general position") != std::string::npos);
    CHECK(t.err.find("'A'") != std::string::npos);
    CHECK(t.err.find("'B'") != std::string::npos);
    CHECK(t.err.find("(10, 10)") != std::string::npos);

    const auto bowtie = temp_file("bowtie.json");
    write_file(bowtie, R"({"regions": [{"name": "X",
        "outer": [[0, 0], [10, 10], [10, 0], [0, 10]]}]})");
    const auto b = run_cli({"nonpiercing", bowtie.string()});
    CHECK(b.code == 2);
    CHECK(b.err.find("'X'") != std::string::npos);
}

TEST_CASE("search report serializes bug certificates") {
    families::SearchReport report;
    report.max_lambda = 5;
    report.histogram[5] = 1;
    report.trials.push_back({123, 5, false});
    families::BugInstance bug;
    bug.trial = 0;
    bug.family = family({{"A", rect(0, 0, 2, 2), {}}});
    bug.certificate.chosen = {0, 1, 2, 3, 4};
    bug.certificate.witnesses[{0, 1}] = 7;
    report.bugs.push_back(bug);
    const io::Json j = io::search_report_to_json(report);
    CHECK(j["bugs"].size() == 1);
    CHECK(j["bugs"][0]["trial"] == 0);
    CHECK(io::region_family_from_json(j["bugs"][0]["family"]) == bug.family);
    CHECK(j["bugs"][0]["certificate"]["chosen"].size() == 5);
    CHECK(j["bugs"][0]["certificate"]["witnesses"][0]["element"] == 7);
}

TEST_CASE("cli: search") {
    const auto out_path = temp_file("search.json");
    auto r = run_cli({"search", "--trials", "1", "--sets", "1", "--seed", "3", "--out",
                      out_path.string()});
    CHECK(r.code == 0);
    const io::Json report = io::Json::parse(r.out);
    CHECK(report["max_lambda"] == 1);
    CHECK(report["trials"].size() == 1);
    // the file holds the same report that went to stdout
    CHECK(io::load_json_file(out_path.string()) == report);

    CHECK(run_cli({"search", "--trials", "0", "--sets", "1"}).code == 2);
    CHECK(run_cli({"search", "--sets", "1"}).code == 2);
}

TEST_CASE("cli: help and unknown commands") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);
}
