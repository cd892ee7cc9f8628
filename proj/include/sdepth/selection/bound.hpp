#pragma once

#include <cstddef>
#include <string_view>

#include "sdepth/rational.hpp"

namespace sdepth::selection {

enum class BoundKind {
    General,     // 1/(d+1)!
    TwoCoincide, // 2d/((d+1)!(d+1)), when the last two measures are equal
};

struct BoundSpec {
    std::size_t d;
    BoundKind kind;
    Rational value;
};

// Lower bound on the maximum colourful depth. Exact; InputError if d == 0 or (d+1)! overflows.
BoundSpec bound(std::size_t d, BoundKind kind);

const char* to_string(BoundKind kind);
BoundKind parse_bound_kind(std::string_view text);

} // namespace sdepth::selection
