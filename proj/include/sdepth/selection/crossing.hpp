#pragma once

#include <cstdint>
#include <span>

#include "sdepth/depth/configuration.hpp"
#include "sdepth/harness/sampler.hpp"

namespace sdepth::selection {

// 2x(1-x): least probability that a segment with i.i.d. endpoints meets a set separating
// mass x from mass 1-x.
Rational crossing_floor(const Rational& x);
double crossing_floor(double x);

struct CrossingReport {
    Rational mass_positive; // share of the last class strictly on the positive side
    Rational crossing;      // share of segments [u, v], u in class d-1, v in class d, meeting the hyperplane
    Rational floor;         // crossing_floor(mass_positive)
};

// Separator: the hyperplane through d affinely independent points. Requires the last two
// classes to coincide. Segments touching the hyperplane count as crossing.
CrossingReport segment_crossing_fraction(const depth::ColoredConfiguration& cfg,
                                         std::span<const geom::Point> hyperplane);

struct CrossingEstimate {
    depth::MCEstimate crossing;
    double mass_positive = 0; // from the first endpoint of every segment
    double floor = 0;
};

CrossingEstimate segment_crossing_mc(const harness::MeasureSampler& mu, std::span<const geom::Point> hyperplane,
                                     std::uint64_t samples, std::uint64_t seed, unsigned threads = 1);

} // namespace sdepth::selection
