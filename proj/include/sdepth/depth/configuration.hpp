#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sdepth/geom/point.hpp"
#include "sdepth/rational.hpp"

namespace sdepth::depth {

using geom::Point;

// d+1 nonempty colour classes in R^d; class i is the discrete stand-in for the i-th measure.
class ColoredConfiguration {
public:
    ColoredConfiguration(std::size_t dim, std::vector<std::vector<Point>> classes);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t class_count() const noexcept { return classes_.size(); }
    std::span<const std::vector<Point>> classes() const noexcept { return classes_; }
    const std::vector<Point>& cls(std::size_t i) const { return classes_.at(i); }
    std::vector<std::size_t> class_sizes() const;
    std::size_t min_class_size() const;

    // n_0 * n_1 * ... * n_d; InputError if it does not fit in 63 bits.
    std::uint64_t rainbow_count() const;

    // True when the last two classes hold identical point sequences.
    bool last_two_coincide() const;

    friend bool operator==(const ColoredConfiguration&, const ColoredConfiguration&) = default;

private:
    std::size_t dim_;
    std::vector<std::vector<Point>> classes_;
};

struct DepthReport {
    std::uint64_t containing = 0;
    std::uint64_t total = 1;

    Rational fraction() const;
    double value() const { return static_cast<double>(containing) / static_cast<double>(total); }

    friend bool operator==(const DepthReport&, const DepthReport&) = default;
};

struct MCEstimate {
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
    double estimate = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t seed = 0;

    bool covers(double p) const { return ci_low <= p && p <= ci_high; }
    friend bool operator==(const MCEstimate&, const MCEstimate&) = default;
};

// Wilson score interval at 95%.
MCEstimate wilson_estimate(std::uint64_t hits, std::uint64_t samples, std::uint64_t seed);

// C(n, k) with overflow detection.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

} // namespace sdepth::depth
