#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pierce/arrangement.hpp"
#include "pierce/geometry.hpp"
#include "pierce/setsystem.hpp"

namespace pierce::families {

struct GeneratorConfig {
    std::uint64_t seed = 0;
    int disk_vertex_count = 32;            // >= 8
    std::int64_t coordinate_scale = 1'000'000; // >= 1
    int family_size = 1;                   // >= 1
    int max_rejections = 10'000;           // attempt budget, >= 0
};

// Throws SchemaError on out-of-range fields.
void validate(const GeneratorConfig& config);

// The fixed four-region family with dyadic dual VC-dimension exactly 4:
// two crossed elongated regions, a low horizontal one and a central disk.
// Coordinates are frozen golden data, certified by the geometry kernel.
geom::RegionFamily fig1_family();

// Deterministic family of polygonal disks (regular n-gons with random
// integer centers and radii), rejection-sampled until both the general
// position and the non-piercing checks pass. Throws
// RejectionBudgetExhausted when the attempt budget runs out.
geom::RegionFamily random_disk_family(const GeneratorConfig& config);

// Finite proxy of a region family: one ground element per bounded face
// with a non-empty signature, one member set per region. Transversal,
// matching and dyadic dual VC numbers carry over exactly, because any
// point of the plane can be replaced by its face's representative
// without changing containment.
sets::SetSystem to_set_system(const geom::RegionFamily& family);
sets::SetSystem to_set_system(const geom::Arrangement& arrangement,
                              std::vector<std::string> labels);

struct TrialOutcome {
    std::uint64_t seed = 0;
    int lambda = 0;
    bool perturbed = false;
};

// A trial with lambda >= 5 would contradict the non-piercing bound; the
// full instance is preserved for inspection as a solver/kernel bug report.
struct BugInstance {
    int trial = -1;
    geom::RegionFamily family;
    sets::LambdaCertificate certificate;
};

struct SearchReport {
    int max_lambda = 0;
    std::map<int, int> histogram; // lambda value -> number of trials
    std::vector<TrialOutcome> trials;
    std::vector<BugInstance> bugs;
};

struct SearchOptions {
    bool parallel = true; // OpenMP fan-out over trials; the merge is
                          // deterministic either way
};

// Runs `trials` independent generations (plain disk families alternating
// with radially perturbed variants), computes lambda for each and
// aggregates. Throws RejectionBudgetExhausted from the failing trial.
SearchReport lambda5_search(const GeneratorConfig& config, int trials,
                            const SearchOptions& options = {});

} // namespace pierce::families
