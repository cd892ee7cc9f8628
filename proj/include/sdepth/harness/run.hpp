#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sdepth/geom/point.hpp"
#include "sdepth/selection/bound.hpp"
#include "sdepth/selection/deep_point.hpp"

namespace sdepth::harness {

enum class Mode { Depth, Deepest, Verify, Tverberg, Mc };

const char* to_string(Mode m);
Mode parse_mode(std::string_view text);

struct RunConfig {
    Mode mode = Mode::Verify;
    std::uint64_t seed = 0; // instance i is generated with seed + i
    std::size_t dim = 2;
    std::size_t size = 30;
    std::string measure = "uniform";
    selection::BoundKind kind = selection::BoundKind::General; // two-coincide also makes generated classes coincide
    std::optional<selection::Strategy> strategy;
    std::optional<Rational> tolerance;
    std::uint64_t samples = 100000;
    std::size_t candidates = 64;
    unsigned threads = 1;
    std::size_t instances = 1;
    std::optional<std::filesystem::path> input; // instance file, replaces the generator
    std::optional<std::filesystem::path> spec;  // generator spec (JSON), replaces dim/size/measure
    std::optional<geom::Point> query;
    std::uint64_t r = 1;
    bool general_position = false;

    // InputError when a mode-specific field is missing or out of range.
    void validate() const;
};

struct RunOutcome {
    nlohmann::json report; // "timing" holds everything that may vary between identical runs
    bool pass = true;

    int exit_code() const { return pass ? 0 : 1; }
};

// Module errors propagate as sdepth::Error.
RunOutcome run(const RunConfig& config);

// Pretty JSON; without timing, identical configs give identical bytes.
std::string render(const nlohmann::json& report, bool with_timing = true);

} // namespace sdepth::harness
