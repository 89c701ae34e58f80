#include "pierce/families.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>

#include <omp.h>

#include "pierce/errors.hpp"
#include "pierce/rng.hpp"

namespace pierce::families {

void validate(const GeneratorConfig& config) {
    if (config.disk_vertex_count < 8)
        throw SchemaError("disk_vertex_count must be at least 8");
    if (config.coordinate_scale < 1)
        throw SchemaError("coordinate_scale must be positive");
    if (config.family_size < 1)
        throw SchemaError("family_size must be at least 1");
    if (config.max_rejections < 0)
        throw SchemaError("max_rejections must be non-negative");
}

namespace {

geom::Ring disk_ring(SplitMix64& rng, const GeneratorConfig& config, bool perturbed) {
    const std::int64_t scale = config.coordinate_scale;
    const std::int64_t cx = rng.range(-2 * scale, 2 * scale);
    const std::int64_t cy = rng.range(-2 * scale, 2 * scale);
    const std::int64_t radius = rng.range(scale / 4, scale);
    const double phase = rng.unit();
    const int n = config.disk_vertex_count;
    geom::Ring ring;
    ring.reserve(n);
    for (int k = 0; k < n; ++k) {
        std::int64_t r = radius;
        if (perturbed) r += rng.range(-radius / 6, radius / 6);
        const double angle = 2.0 * std::numbers::pi * (k + phase) / n;
        ring.push_back({cx + std::llround(static_cast<double>(r) * std::cos(angle)),
                        cy + std::llround(static_cast<double>(r) * std::sin(angle))});
    }
    return ring;
}

bool family_valid(const geom::RegionFamily& family) {
    try {
        const auto gp = geom::check_general_position(family);
        if (!gp.ok) return false;
        return check_non_piercing(family).first;
    } catch (const MalformedRegion&) {
        return false; // rounding produced a degenerate ring; resample
    }
}

geom::RegionFamily generate_family(const GeneratorConfig& config, bool perturbed) {
    validate(config);
    SplitMix64 rng(config.seed);
    for (int attempt = 0; attempt < config.max_rejections; ++attempt) {
        geom::RegionFamily family;
        family.name = "disk-family-" + std::to_string(config.seed);
        for (int i = 0; i < config.family_size; ++i) {
            geom::PolygonRegion region;
            region.name = "F" + std::to_string(i + 1);
            region.outer = disk_ring(rng, config, perturbed);
            family.regions.push_back(std::move(region));
        }
        if (family_valid(family)) return family;
    }
    throw RejectionBudgetExhausted(
        "no valid family of size " + std::to_string(config.family_size) +
        " within " + std::to_string(config.max_rejections) + " attempts");
}

} // namespace

geom::RegionFamily random_disk_family(const GeneratorConfig& config) {
    return generate_family(config, false);
}

sets::SetSystem to_set_system(const geom::Arrangement& arrangement,
                              std::vector<std::string> labels) {
    // Ground elements: bounded faces with a non-empty signature, ordered by
    // representative point so conversion is deterministic.
    std::vector<int> ground_faces;
    for (std::size_t f = 0; f < arrangement.faces().size(); ++f) {
        const geom::Face& face = arrangement.faces()[f];
        if (face.bounded && face.signature.any())
            ground_faces.push_back(static_cast<int>(f));
    }
    std::sort(ground_faces.begin(), ground_faces.end(), [&](int a, int b) {
        return geom::lex_less(arrangement.faces()[a].representative,
                              arrangement.faces()[b].representative);
    });
    sets::SetSystem system;
    system.ground_size = static_cast<int>(ground_faces.size());
    system.sets.assign(arrangement.region_count(), {});
    for (int e = 0; e < system.ground_size; ++e) {
        const geom::Face& face = arrangement.faces()[ground_faces[e]];
        for (int r = 0; r < arrangement.region_count(); ++r)
            if (face.signature.test(r)) system.sets[r].push_back(e);
    }
    system.labels = std::move(labels);
    return system;
}

sets::SetSystem to_set_system(const geom::RegionFamily& family) {
    std::vector<std::string> labels;
    for (const geom::PolygonRegion& region : family.regions)
        labels.push_back(region.name);
    return to_set_system(geom::Arrangement::build(family), std::move(labels));
}

SearchReport lambda5_search(const GeneratorConfig& config, int trials,
                            const SearchOptions& options) {
    validate(config);
    if (trials < 1) throw SchemaError("trials must be at least 1");

    struct TrialSlot {
        TrialOutcome outcome;
        geom::RegionFamily family;
        sets::LambdaCertificate certificate;
        std::exception_ptr error;
    };
    std::vector<TrialSlot> slots(trials);

    const auto run_trial = [&](int t) {
        TrialSlot& slot = slots[t];
        try {
            GeneratorConfig trial_config = config;
            trial_config.seed = derive_seed(config.seed, static_cast<std::uint64_t>(t));
            const bool perturbed = (t % 2) == 1;
            const geom::RegionFamily family = generate_family(trial_config, perturbed);
            const sets::SetSystem system = to_set_system(family);
            auto [lambda, certificate] = sets::dyadic_dual_vc(system);
            slot.outcome = {trial_config.seed, lambda, perturbed};
            if (lambda >= 5) {
                slot.family = family;
                slot.certificate = std::move(*certificate);
            }
        } catch (...) {
            slot.error = std::current_exception();
        }
    };

    if (options.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int t = 0; t < trials; ++t) run_trial(t);
    } else {
        for (int t = 0; t < trials; ++t) run_trial(t);
    }

    for (const TrialSlot& slot : slots)
        if (slot.error) std::rethrow_exception(slot.error);

    SearchReport report;
    for (int t = 0; t < trials; ++t) {
        const TrialSlot& slot = slots[t];
        report.trials.push_back(slot.outcome);
        report.max_lambda = std::max(report.max_lambda, slot.outcome.lambda);
        ++report.histogram[slot.outcome.lambda];
        if (slot.outcome.lambda >= 5)
            report.bugs.push_back({t, slot.family, slot.certificate});
    }
    return report;
}

} // namespace pierce::families
