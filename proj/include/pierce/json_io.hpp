#pragma once

#include <string>

#include <json.hpp>

#include "pierce/families.hpp"
#include "pierce/geometry.hpp"
#include "pierce/setsystem.hpp"

namespace pierce::io {

using Json = nlohmann::json;

// Abstract set-system schema:
//   {"ground_size": n, "sets": [[i, ...], ...], "labels": ["F1", ...]}
Json set_system_to_json(const sets::SetSystem& system);
sets::SetSystem set_system_from_json(const Json& value); // throws SchemaError

// Region-family schema (integer coordinates only):
//   {"name": "...", "regions": [{"name": "F1", "outer": [[x, y], ...],
//                                "holes": [[[x, y], ...], ...]}]}
Json region_family_to_json(const geom::RegionFamily& family);
geom::RegionFamily region_family_from_json(const Json& value); // throws SchemaError

// Bound report: the two bound values are decimal strings, since they do
// not fit machine integers in general.
Json bound_report_to_json(const sets::BoundReport& report);

Json certificate_to_json(const sets::LambdaCertificate& certificate);

Json search_report_to_json(const families::SearchReport& report);

// Reads and parses a JSON document; throws SchemaError on I/O or parse
// failure.
Json load_json_file(const std::string& path);

} // namespace pierce::io
