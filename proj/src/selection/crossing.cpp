#include "sdepth/selection/crossing.hpp"

#include <random>

#include "sdepth/depth/depth.hpp"
#include "sdepth/errors.hpp"
#include "sdepth/geom/simplex.hpp"
#include "sdepth/parallel.hpp"

namespace sdepth::selection {
namespace {

constexpr std::size_t kBlock = 8192;

class Side {
public:
    Side(std::span<const geom::Point> plane, std::size_t d) : rows_(d + 1)
    {
        if (plane.size() != d)
            throw InputError("separator in R^" + std::to_string(d) + " needs " + std::to_string(d) + " points");
        geom::require_dim(plane, d, "separator");
        for (std::size_t i = 0; i < d; ++i)
            rows_[i] = plane[i].coords();
        if (!geom::affinely_independent(std::span<const geom::Coords>(rows_.data(), d)))
            throw InputError("separator points are affinely dependent");
    }

    int operator()(geom::Coords x)
    {
        rows_.back() = x;
        return geom::to_int(geom::orientation(std::span<const geom::Coords>(rows_)));
    }

private:
    std::vector<geom::Coords> rows_;
};

} // namespace

Rational crossing_floor(const Rational& x)
{
    return Rational(2) * x * (Rational(1) - x);
}

double crossing_floor(double x)
{
    return 2.0 * x * (1.0 - x);
}

CrossingReport segment_crossing_fraction(const depth::ColoredConfiguration& cfg,
                                         std::span<const geom::Point> hyperplane)
{
    const std::size_t d = cfg.dim();
    if (!cfg.last_two_coincide())
        throw InputError("segment crossing needs identical last two classes");
    Side side(hyperplane, d);
    const auto& u = cfg.cls(d - 1);
    const auto& v = cfg.cls(d);
    std::vector<int> su, sv;
    for (const auto& x : u)
        su.push_back(side(x.coords()));
    for (const auto& x : v)
        sv.push_back(side(x.coords()));

    std::int64_t pos = 0, crossing = 0;
    for (int s : sv)
        pos += s > 0;
    for (int a : su)
        for (int b : sv)
            crossing += a * b <= 0;
    const auto n = static_cast<std::int64_t>(v.size());
    const Rational x(pos, n);
    return {x, Rational(crossing, static_cast<std::int64_t>(u.size()) * n), crossing_floor(x)};
}

CrossingEstimate segment_crossing_mc(const harness::MeasureSampler& mu, std::span<const geom::Point> hyperplane,
                                     std::uint64_t samples, std::uint64_t seed, unsigned threads)
{
    const std::size_t d = mu.dim();
    Side probe(hyperplane, d);
    if (samples == 0)
        throw InputError("segment_crossing_mc: samples must be positive");
    const std::size_t blocks = chunk_count(samples, kBlock);
    std::vector<std::uint64_t> hits(blocks, 0), pos(blocks, 0);
    parallel_chunks(samples, kBlock, threads, [&](std::size_t b, std::size_t begin, std::size_t end) {
        Side side = probe;
        std::mt19937_64 rng(harness::derive_seed(seed, b));
        std::vector<double> u(d), v(d);
        for (std::size_t t = begin; t < end; ++t) {
            mu.sample(rng, u);
            mu.sample(rng, v);
            const int a = side(u), c = side(v);
            hits[b] += a * c <= 0;
            pos[b] += a > 0;
        }
    });
    std::uint64_t h = 0, p = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
        h += hits[b];
        p += pos[b];
    }
    const double x = static_cast<double>(p) / static_cast<double>(samples);
    return {depth::wilson_estimate(h, samples, seed), x, crossing_floor(x)};
}

} // namespace sdepth::selection
