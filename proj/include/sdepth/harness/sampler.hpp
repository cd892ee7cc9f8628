#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <json.hpp>

#include "sdepth/geom/point.hpp"
#include "sdepth/rational.hpp"

namespace sdepth::harness {

using geom::Point;

// Seeded generator for one probability measure on R^d.
class MeasureSampler {
public:
    enum class Kind { Gaussian, UniformBox, UniformBall, PointMass, Mixture };

    // `variances` is the covariance diagonal.
    static MeasureSampler gaussian(const Point& mean, std::vector<double> variances);
    static MeasureSampler uniform_box(const Point& lo, const Point& hi);
    static MeasureSampler uniform_ball(const Point& center, double radius);
    static MeasureSampler point_mass(const Point& p);
    // Weights must be nonnegative and sum to exactly 1.
    static MeasureSampler mixture(std::vector<Rational> weights,
                                  std::vector<MeasureSampler> components);
    // Uniform mixture of point masses: the empirical measure of a point list.
    static MeasureSampler discrete(std::span<const Point> points);

    Kind kind() const noexcept { return kind_; }
    std::size_t dim() const noexcept { return dim_; }

    void sample(std::mt19937_64& rng, std::span<double> out) const;
    Point sample(std::mt19937_64& rng) const;

    nlohmann::json to_json() const;
    static MeasureSampler from_json(const nlohmann::json& j);

    friend bool operator==(const MeasureSampler&, const MeasureSampler&) = default;

private:
    MeasureSampler(Kind kind, std::size_t dim) : kind_(kind), dim_(dim) {}

    Kind kind_;
    std::size_t dim_;
    std::vector<double> first_;  // mean / lo / center / point
    std::vector<double> second_; // variances / hi
    double radius_ = 0.0;
    std::vector<Rational> weights_;
    std::vector<MeasureSampler> components_;
    std::vector<std::uint64_t> cumulative_; // mixture weights over a common denominator
};

const char* to_string(MeasureSampler::Kind kind);

// Stream seed for block `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

} // namespace sdepth::harness
