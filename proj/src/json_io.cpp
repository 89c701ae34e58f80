#include "pierce/json_io.hpp"

#include <fstream>

#include "pierce/errors.hpp"

namespace pierce::io {

namespace {

std::int64_t require_int(const Json& value, const std::string& what) {
    if (!value.is_number_integer())
        throw SchemaError(what + " must be an integer");
    return value.get<std::int64_t>();
}

int require_small_int(const Json& value, const std::string& what) {
    const std::int64_t v = require_int(value, what);
    if (v < INT32_MIN || v > INT32_MAX) throw SchemaError(what + " is out of range");
    return static_cast<int>(v);
}

geom::Ring ring_from_json(const Json& value, const std::string& what) {
    if (!value.is_array()) throw SchemaError(what + " must be an array of points");
    geom::Ring ring;
    for (const Json& point : value) {
        if (!point.is_array() || point.size() != 2)
            throw SchemaError(what + " points must be [x, y] pairs");
        const std::int64_t x = require_int(point[0], what + " x");
        const std::int64_t y = require_int(point[1], what + " y");
        if (std::abs(x) > geom::COORD_LIMIT || std::abs(y) > geom::COORD_LIMIT)
            throw SchemaError(what + " coordinate exceeds the supported range");
        ring.push_back({x, y});
    }
    return ring;
}

Json ring_to_json(const geom::Ring& ring) {
    Json value = Json::array();
    for (const geom::IPoint& p : ring) value.push_back({p.x, p.y});
    return value;
}

} // namespace

Json set_system_to_json(const sets::SetSystem& system) {
    Json value;
    value["ground_size"] = system.ground_size;
    value["sets"] = system.sets;
    if (!system.labels.empty()) value["labels"] = system.labels;
    return value;
}

sets::SetSystem set_system_from_json(const Json& value) {
    if (!value.is_object()) throw SchemaError("set system must be a JSON object");
    if (!value.contains("ground_size") || !value.contains("sets"))
        throw SchemaError("set system needs 'ground_size' and 'sets'");
    sets::SetSystem system;
    system.ground_size = require_small_int(value["ground_size"], "ground_size");
    if (!value["sets"].is_array()) throw SchemaError("'sets' must be an array");
    for (const Json& set : value["sets"]) {
        if (!set.is_array()) throw SchemaError("each set must be an array");
        std::vector<int> elements;
        for (const Json& e : set)
            elements.push_back(require_small_int(e, "set element"));
        system.sets.push_back(std::move(elements));
    }
    if (value.contains("labels")) {
        if (!value["labels"].is_array()) throw SchemaError("'labels' must be an array");
        for (const Json& label : value["labels"]) {
            if (!label.is_string()) throw SchemaError("labels must be strings");
            system.labels.push_back(label.get<std::string>());
        }
    }
    sets::validate(system);
    return system;
}

Json region_family_to_json(const geom::RegionFamily& family) {
    Json value;
    value["name"] = family.name;
    value["regions"] = Json::array();
    for (const geom::PolygonRegion& region : family.regions) {
        Json r;
        r["name"] = region.name;
        r["outer"] = ring_to_json(region.outer);
        r["holes"] = Json::array();
        for (const geom::Ring& hole : region.holes)
            r["holes"].push_back(ring_to_json(hole));
        value["regions"].push_back(std::move(r));
    }
    return value;
}

geom::RegionFamily region_family_from_json(const Json& value) {
    if (!value.is_object()) throw SchemaError("region family must be a JSON object");
    if (!value.contains("regions") || !value["regions"].is_array())
        throw SchemaError("region family needs a 'regions' array");
    geom::RegionFamily family;
    if (value.contains("name")) {
        if (!value["name"].is_string()) throw SchemaError("'name' must be a string");
        family.name = value["name"].get<std::string>();
    }
    for (const Json& r : value["regions"]) {
        if (!r.is_object() || !r.contains("name") || !r.contains("outer"))
            throw SchemaError("each region needs 'name' and 'outer'");
        if (!r["name"].is_string()) throw SchemaError("region name must be a string");
        geom::PolygonRegion region;
        region.name = r["name"].get<std::string>();
        region.outer = ring_from_json(r["outer"], "region '" + region.name + "' outer");
        if (r.contains("holes")) {
            if (!r["holes"].is_array())
                throw SchemaError("region holes must be an array of rings");
            for (const Json& hole : r["holes"])
                region.holes.push_back(
                    ring_from_json(hole, "region '" + region.name + "' hole"));
        }
        family.regions.push_back(std::move(region));
    }
    return family;
}

Json bound_report_to_json(const sets::BoundReport& report) {
    Json value;
    value["nu"] = report.nu;
    value["tau"] = report.tau;
    value["lambda"] = report.lambda;
    value["dsw_bound"] = report.dsw_bound.str();
    value["theorem1_bound"] = report.theorem1_bound.str();
    value["degenerate"] = report.degenerate;
    return value;
}

Json certificate_to_json(const sets::LambdaCertificate& certificate) {
    Json value;
    value["chosen"] = certificate.chosen;
    value["witnesses"] = Json::array();
    for (const auto& [pair, element] : certificate.witnesses)
        value["witnesses"].push_back(
            {{"pair", {pair.first, pair.second}}, {"element", element}});
    return value;
}

Json search_report_to_json(const families::SearchReport& report) {
    Json value;
    value["max_lambda"] = report.max_lambda;
    value["histogram"] = Json::object();
    for (const auto& [lambda, count] : report.histogram)
        value["histogram"][std::to_string(lambda)] = count;
    value["trials"] = Json::array();
    for (std::size_t t = 0; t < report.trials.size(); ++t) {
        const families::TrialOutcome& outcome = report.trials[t];
        value["trials"].push_back({{"trial", t},
                                   {"seed", outcome.seed},
                                   {"lambda", outcome.lambda},
                                   {"perturbed", outcome.perturbed}});
    }
    value["bugs"] = Json::array();
    for (const families::BugInstance& bug : report.bugs)
        value["bugs"].push_back({{"trial", bug.trial},
                                 {"family", region_family_to_json(bug.family)},
                                 {"certificate", certificate_to_json(bug.certificate)}});
    return value;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SchemaError("cannot parse '" + path + "': " + e.what());
    }
}

} // namespace pierce::io
