#include "sdepth/harness/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sdepth/errors.hpp"

namespace sdepth::harness {
namespace {

std::vector<double> coords_of(const Point& p) { return {p.coords().begin(), p.coords().end()}; }

void require_finite(std::span<const double> xs, const char* what)
{
    for (double x : xs)
        if (!std::isfinite(x))
            throw InputError(std::string(what) + ": non-finite parameter");
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

const char* to_string(MeasureSampler::Kind kind)
{
    switch (kind) {
    case MeasureSampler::Kind::Gaussian: return "gaussian";
    case MeasureSampler::Kind::UniformBox: return "uniform-box";
    case MeasureSampler::Kind::UniformBall: return "uniform-ball";
    case MeasureSampler::Kind::PointMass: return "point-mass";
    case MeasureSampler::Kind::Mixture: return "mixture";
    }
    return "unknown";
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
    return splitmix64(splitmix64(seed) ^ (index * 0xD1B54A32D192ED03ULL + 1));
}

MeasureSampler MeasureSampler::gaussian(const Point& mean, std::vector<double> variances)
{
    if (variances.size() != mean.dim())
        throw InputError("gaussian: covariance diagonal has wrong length");
    require_finite(variances, "gaussian");
    for (double v : variances)
        if (v < 0.0)
            throw InputError("gaussian: negative variance");
    MeasureSampler s(Kind::Gaussian, mean.dim());
    s.first_ = coords_of(mean);
    s.second_ = std::move(variances);
    return s;
}

MeasureSampler MeasureSampler::uniform_box(const Point& lo, const Point& hi)
{
    if (lo.dim() != hi.dim())
        throw InputError("uniform-box: corner dimensions differ");
    for (std::size_t i = 0; i < lo.dim(); ++i)
        if (!(lo[i] <= hi[i]))
            throw InputError("uniform-box: lo exceeds hi");
    MeasureSampler s(Kind::UniformBox, lo.dim());
    s.first_ = coords_of(lo);
    s.second_ = coords_of(hi);
    return s;
}

MeasureSampler MeasureSampler::uniform_ball(const Point& center, double radius)
{
    if (!std::isfinite(radius) || radius < 0.0)
        throw InputError("uniform-ball: radius must be finite and nonnegative");
    MeasureSampler s(Kind::UniformBall, center.dim());
    s.first_ = coords_of(center);
    s.radius_ = radius;
    return s;
}

MeasureSampler MeasureSampler::point_mass(const Point& p)
{
    MeasureSampler s(Kind::PointMass, p.dim());
    s.first_ = coords_of(p);
    return s;
}

MeasureSampler MeasureSampler::mixture(std::vector<Rational> weights,
                                       std::vector<MeasureSampler> components)
{
    if (components.empty() || weights.size() != components.size())
        throw InputError("mixture: need one weight per component");
    const std::size_t dim = components.front().dim();
    Rational sum(0);
    std::int64_t common = 1;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (components[i].dim() != dim)
            throw InputError("mixture: component dimensions differ");
        if (weights[i] < Rational(0))
            throw InputError("mixture: negative weight");
        sum += weights[i];
        common = std::lcm(common, weights[i].denominator());
        if (common > (std::int64_t{1} << 52))
            throw InputError("mixture: weight denominators too large");
    }
    if (sum != Rational(1))
        throw InputError("mixture: weights sum to " + sdepth::to_string(sum) + ", not 1");
    MeasureSampler s(Kind::Mixture, dim);
    std::uint64_t acc = 0;
    for (const auto& w : weights) {
        acc += static_cast<std::uint64_t>(w.numerator() * (common / w.denominator()));
        s.cumulative_.push_back(acc);
    }
    s.weights_ = std::move(weights);
    s.components_ = std::move(components);
    return s;
}

MeasureSampler MeasureSampler::discrete(std::span<const Point> points)
{
    if (points.empty())
        throw InputError("discrete: no points");
    std::vector<Rational> w(points.size(), Rational(1, static_cast<std::int64_t>(points.size())));
    std::vector<MeasureSampler> comps;
    comps.reserve(points.size());
    for (const auto& p : points)
        comps.push_back(point_mass(p));
    return mixture(std::move(w), std::move(comps));
}

void MeasureSampler::sample(std::mt19937_64& rng, std::span<double> out) const
{
    switch (kind_) {
    case Kind::Gaussian: {
        std::normal_distribution<double> normal;
        for (std::size_t i = 0; i < dim_; ++i)
            out[i] = first_[i] + std::sqrt(second_[i]) * normal(rng);
        return;
    }
    case Kind::UniformBox: {
        std::uniform_real_distribution<double> unit;
        for (std::size_t i = 0; i < dim_; ++i)
            out[i] = first_[i] + (second_[i] - first_[i]) * unit(rng);
        return;
    }
    case Kind::UniformBall: {
        std::normal_distribution<double> normal;
        std::uniform_real_distribution<double> unit;
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (std::size_t i = 0; i < dim_; ++i) {
                out[i] = normal(rng);
                norm2 += out[i] * out[i];
            }
        } while (norm2 == 0.0);
        const double r = radius_ * std::pow(unit(rng), 1.0 / static_cast<double>(dim_));
        const double scale = r / std::sqrt(norm2);
        for (std::size_t i = 0; i < dim_; ++i)
            out[i] = first_[i] + scale * out[i];
        return;
    }
    case Kind::PointMass:
        std::copy(first_.begin(), first_.end(), out.begin());
        return;
    case Kind::Mixture: {
        std::uniform_int_distribution<std::uint64_t> pick(0, cumulative_.back() - 1);
        const std::uint64_t u = pick(rng);
        const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
        components_[static_cast<std::size_t>(it - cumulative_.begin())].sample(rng, out);
        return;
    }
    }
}

Point MeasureSampler::sample(std::mt19937_64& rng) const
{
    std::vector<double> out(dim_);
    sample(rng, out);
    return Point(std::move(out));
}

nlohmann::json MeasureSampler::to_json() const
{
    nlohmann::json j{{"kind", to_string(kind_)}, {"dim", dim_}};
    switch (kind_) {
    case Kind::Gaussian: j["mean"] = first_; j["variances"] = second_; break;
    case Kind::UniformBox: j["lo"] = first_; j["hi"] = second_; break;
    case Kind::UniformBall: j["center"] = first_; j["radius"] = radius_; break;
    case Kind::PointMass: j["point"] = first_; break;
    case Kind::Mixture: {
        auto& w = j["weights"] = nlohmann::json::array();
        for (const auto& r : weights_)
            w.push_back({{"num", r.numerator()}, {"den", r.denominator()}});
        auto& c = j["components"] = nlohmann::json::array();
        for (const auto& comp : components_)
            c.push_back(comp.to_json());
        break;
    }
    }
    return j;
}

MeasureSampler MeasureSampler::from_json(const nlohmann::json& j)
{
    try {
        const std::string kind = j.at("kind").get<std::string>();
        auto point = [&](const char* key) { return Point(j.at(key).get<std::vector<double>>()); };
        if (kind == "gaussian")
            return gaussian(point("mean"), j.at("variances").get<std::vector<double>>());
        if (kind == "uniform-box")
            return uniform_box(point("lo"), point("hi"));
        if (kind == "uniform-ball")
            return uniform_ball(point("center"), j.at("radius").get<double>());
        if (kind == "point-mass")
            return point_mass(point("point"));
        if (kind == "mixture") {
            std::vector<Rational> w;
            for (const auto& r : j.at("weights"))
                w.emplace_back(r.at("num").get<std::int64_t>(), r.at("den").get<std::int64_t>());
            std::vector<MeasureSampler> comps;
            for (const auto& c : j.at("components"))
                comps.push_back(from_json(c));
            return mixture(std::move(w), std::move(comps));
        }
        throw InputError("unknown sampler kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed sampler: ") + e.what());
    }
}

} // namespace sdepth::harness
