#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sdepth/depth/configuration.hpp"
#include "sdepth/harness/sampler.hpp"

namespace sdepth::harness {

struct GeneratorSpec {
    std::size_t dim = 2;
    std::vector<std::size_t> sizes;         // one per class
    std::vector<MeasureSampler> samplers;   // one per class
    bool coincide_last_two = false;         // class d becomes a copy of class d-1
    bool general_position = false;          // reject and perturb affinely dependent (d+1)-subsets
    std::size_t max_retries = 8;
    double perturbation = 1e-9;             // first retry's jitter, relative to the bounding box; doubles per retry

    nlohmann::json to_json() const;
    static GeneratorSpec from_json(const nlohmann::json& j);
};

// Named measure families: "uniform" (unit cube), "gaussian" (standard), "ball" (unit ball),
// "mixture" (two unit Gaussians at +-2 e_1, equal weights).
MeasureSampler named_measure(std::string_view name, std::size_t dim);

// Every class of size n drawn from the same named measure.
GeneratorSpec make_spec(std::size_t dim, std::size_t n, std::string_view measure, bool coincide_last_two = false);

// Deterministic in (spec, seed). Class i uses stream derive_seed(seed, i).
// DegeneracyError if general position is still violated after max_retries perturbations.
depth::ColoredConfiguration generate(const GeneratorSpec& spec, std::uint64_t seed);

// No d+1 distinct points affinely dependent and no repeated points, except the copies made by
// coincide_last_two.
bool in_general_position(const depth::ColoredConfiguration& cfg);

} // namespace sdepth::harness
