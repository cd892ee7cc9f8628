#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "sdepth/depth/configuration.hpp"

namespace sdepth::selection {

using depth::ColoredConfiguration;
using depth::DepthReport;
using geom::Point;

enum class Strategy {
    Arrangement2d,    // exact, d <= 2
    RainbowCentroids, // any d, heuristic
    GridRefine,       // any d, heuristic
};

const char* to_string(Strategy s);
Strategy parse_strategy(std::string_view text);

// Arrangement for d <= 2, rainbow centroids otherwise.
Strategy default_strategy(std::size_t d);

struct SearchOptions {
    Strategy strategy = Strategy::Arrangement2d;
    std::size_t centroid_samples = 512; // all rainbow tuples if there are at most this many
    std::size_t grid_points = 0;        // per axis; 0 picks a size from d
    std::size_t refine_rounds = 4;
    std::size_t arrangement_witnesses = 8;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

struct DeepPointResult {
    Point point;
    DepthReport report; // exact colourful depth at `point`
    Strategy strategy;
    std::uint64_t candidates_evaluated = 0;
    // Exact maximum over all of R^d when the strategy certifies one. The binary64 witness can
    // fall short of it when the maximum is only attained at a vertex with no binary64 coordinates.
    std::optional<DepthReport> certified_max;

    bool heuristic() const noexcept { return !certified_max.has_value(); }
    bool attains_certified() const noexcept
    {
        return certified_max && certified_max->containing == report.containing;
    }
};

// InputError when the strategy does not support cfg.dim().
DeepPointResult find_deep_point(const ColoredConfiguration& cfg, const SearchOptions& options);

} // namespace sdepth::selection
