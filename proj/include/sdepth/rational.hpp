#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace sdepth {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r)
{
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Accepts "p/q", integers and plain decimals ("0.02", "-1.5e-3" is not accepted).
// Decimals are converted exactly: "0.02" is 1/50.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

} // namespace sdepth

// NOTE: compare Rational only against Rational. Mixed rational/int comparisons recurse forever
// under C++20 rewritten comparison operators with the installed Boost.
