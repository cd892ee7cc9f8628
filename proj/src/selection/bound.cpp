#include "sdepth/selection/bound.hpp"

#include <limits>
#include <string>

#include "sdepth/errors.hpp"

namespace sdepth::selection {

BoundSpec bound(std::size_t d, BoundKind kind)
{
    if (d == 0)
        throw InputError("bound: dimension must be positive");
    std::int64_t factorial = 1;
    for (std::size_t k = 2; k <= d + 1; ++k) {
        if (factorial > std::numeric_limits<std::int64_t>::max() / static_cast<std::int64_t>(k * (d + 1)))
            throw InputError("bound: (d+1)! too large for exact arithmetic");
        factorial *= static_cast<std::int64_t>(k);
    }
    const auto dd = static_cast<std::int64_t>(d);
    const Rational value = kind == BoundKind::General
                               ? Rational(1, factorial)
                               : Rational(2 * dd, factorial * (dd + 1));
    return {d, kind, value};
}

const char* to_string(BoundKind kind)
{
    return kind == BoundKind::General ? "general" : "two-coincide";
}

BoundKind parse_bound_kind(std::string_view text)
{
    if (text == "general")
        return BoundKind::General;
    if (text == "two-coincide")
        return BoundKind::TwoCoincide;
    throw InputError("unknown bound kind '" + std::string(text) + "'");
}

} // namespace sdepth::selection
