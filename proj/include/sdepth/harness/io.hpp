#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sdepth/depth/configuration.hpp"

namespace sdepth::harness {

using depth::ColoredConfiguration;

// Canonical text form:
//   dim <d> classes <k>
//   class <i> size <n_i>
//   <x_1> ... <x_d>        (n_i lines, shortest round-trip binary64)
std::string format_configuration(const ColoredConfiguration& cfg);

// ParseError (with 1-based line/column) on malformed text or non-finite coordinates;
// InputError when the header describes an invalid configuration.
ColoredConfiguration parse_configuration(std::string_view text);

ColoredConfiguration read_configuration(const std::filesystem::path& path);
void write_configuration(const ColoredConfiguration& cfg, const std::filesystem::path& path);

// FNV-1a 64 of the canonical text, as 16 hex digits.
std::string configuration_hash(const ColoredConfiguration& cfg);

// Shortest round-trip decimal.
std::string format_double(double x);

} // namespace sdepth::harness
