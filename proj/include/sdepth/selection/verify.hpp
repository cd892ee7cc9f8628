#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "sdepth/harness/sampler.hpp"
#include "sdepth/selection/bound.hpp"
#include "sdepth/selection/deep_point.hpp"

namespace sdepth::selection {

// (d+1)/min_class_size: slack for the boundary effects of finite point sets.
Rational default_tolerance(const ColoredConfiguration& cfg);

struct VerificationReport {
    bool pass = false;
    BoundSpec bound;
    Rational tolerance;
    DeepPointResult deep;
    std::string config_hash;

    Rational threshold() const { return bound.value - tolerance; }
};

// Searches for a deep point and compares its exact fraction with bound - tolerance. For
// two-coincide the last two classes must hold identical points (InputError otherwise).
// Strategy defaults to default_strategy(d) when `options` is absent.
VerificationReport verify_selection(const ColoredConfiguration& cfg, BoundKind kind,
                                    std::optional<Rational> tolerance = std::nullopt,
                                    std::optional<SearchOptions> options = std::nullopt);

struct McVerifyOptions {
    std::uint64_t samples = 100000; // per estimate
    std::size_t candidates = 64;    // centroids of sampled rainbow simplices
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

struct McVerificationReport {
    bool pass = false;
    BoundSpec bound;
    double tolerance = 0;
    Point witness;
    depth::MCEstimate estimate; // fresh samples, independent of the ones that chose the witness
    std::size_t candidates = 0;
};

// Sampler version: scores candidate centroids on a shared set of sampled rainbow simplices,
// then re-estimates the winner on an independent stream.
McVerificationReport verify_selection_mc(std::span<const harness::MeasureSampler> samplers, BoundKind kind,
                                         double tolerance, const McVerifyOptions& options);

} // namespace sdepth::selection
