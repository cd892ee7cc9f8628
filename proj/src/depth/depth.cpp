#include "sdepth/depth/depth.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "sdepth/errors.hpp"
#include "sdepth/parallel.hpp"

namespace sdepth::depth {

using geom::Coords;
using geom::Orientation;

namespace {

constexpr std::uint64_t kMaxCachedSimplices = std::uint64_t{1} << 24;
constexpr std::size_t kMcBlock = 8192;

void require_query_dim(std::size_t dim, const Point& q, const char* what)
{
    if (q.dim() != dim)
        throw InputError(std::string(what) + ": query has dimension " + std::to_string(q.dim())
                         + ", data has dimension " + std::to_string(dim));
}

} // namespace

DepthReport mono_depth_exact(std::span<const Point> points, const Point& q, DegeneracyPolicy policy)
{
    const std::size_t d = q.dim();
    geom::require_dim(points, d, "mono_depth_exact");
    const std::size_t n = points.size();
    if (n < d + 1)
        throw InputError("mono_depth_exact: need at least " + std::to_string(d + 1) + " points, got "
                         + std::to_string(n));

    DepthReport report{0, binomial(n, d + 1)};
    std::vector<std::size_t> idx(d + 1);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Coords> rows(d + 1);
    while (true) {
        for (std::size_t i = 0; i <= d; ++i)
            rows[i] = points[idx[i]].coords();
        if (geom::contains(rows, q.coords(), policy))
            ++report.containing;
        std::size_t i = d + 1;
        while (i > 0 && idx[i - 1] == n - (d + 1) + (i - 1))
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (std::size_t j = i; j <= d; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return report;
}

DepthReport mono_depth_2d_fast(std::span<const Point> points, const Point& q, DegeneracyPolicy policy)
{
    if (q.dim() != 2)
        throw InputError("mono_depth_2d_fast: planar input required");
    geom::require_dim(points, 2, "mono_depth_2d_fast");
    const std::size_t n = points.size();
    if (n < 3)
        throw InputError("mono_depth_2d_fast: need at least 3 points");
    const bool strict = policy == DegeneracyPolicy::RejectDegenerate;

    // Points equal to q lie in every triangle they belong to.
    std::vector<const double*> others;
    others.reserve(n);
    for (const auto& p : points) {
        if (p == q) {
            if (strict)
                throw DegeneracyError("query coincides with a data point");
            continue;
        }
        others.push_back(p.data());
    }
    const std::uint64_t total = binomial(n, 3);
    const std::size_t m = others.size();
    const double* qc = q.data();

    auto upper = [qc](const double* p) { return p[1] > qc[1] || (p[1] == qc[1] && p[0] > qc[0]); };

    // Angular order around q; points on a common ray keep their input order.
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::vector<char> half(m);
    for (std::size_t i = 0; i < m; ++i)
        half[i] = upper(others[i]) ? 0 : 1;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (half[a] != half[b])
            return half[a] < half[b];
        return geom::orient2d(qc, others[a], others[b]) == Orientation::Positive;
    });

    // True iff the point at cyclic position jpos lies within [0, pi) counterclockwise of
    // position i and after it in the tie order.
    auto within_half_turn = [&](std::size_t i, std::size_t jpos) {
        const std::size_t a = order[i];
        const std::size_t b = order[jpos % m];
        const Orientation o = geom::orient2d(qc, others[a], others[b]);
        if (o == Orientation::Positive)
            return true;
        return o == Orientation::Zero && half[a] == half[b] && jpos < m;
    };

    std::uint64_t outside = 0;
    std::size_t end = 0;
    for (std::size_t i = 0; i < m; ++i) {
        end = std::max(end, i + 1);
        while (end < i + m && within_half_turn(i, end))
            ++end;
        const std::uint64_t k = end - i - 1;
        outside += k * (k - 1) / 2;
        if (strict) {
            if (end < i + m) {
                const auto o = geom::orient2d(qc, others[order[i]], others[order[end % m]]);
                if (o == Orientation::Zero)
                    throw DegeneracyError("query lies on a line through two data points");
            }
            if (i + 1 < m
                && geom::orient2d(qc, others[order[i]], others[order[i + 1]]) == Orientation::Zero
                && half[order[i]] == half[order[i + 1]])
                throw DegeneracyError("query lies on a line through two data points");
        }
    }
    return {total - outside, total};
}

ColorfulDepthEvaluator::ColorfulDepthEvaluator(const ColoredConfiguration& cfg, DegeneracyPolicy policy)
    : cfg_(&cfg), policy_(policy)
{
    const std::uint64_t total = cfg.rainbow_count();
    if (total > kMaxCachedSimplices)
        return;
    simplex_sign_.reserve(total);
    const auto sizes = cfg.class_sizes();
    std::vector<Coords> rows(cfg.dim() + 1);
    for_each_rainbow(sizes, [&](std::span<const std::size_t> idx) {
        for (std::size_t c = 0; c < idx.size(); ++c)
            rows[c] = cfg.cls(c)[idx[c]].coords();
        simplex_sign_.push_back(static_cast<std::int8_t>(geom::to_int(geom::orientation(rows))));
        return true;
    });
}

DepthReport ColorfulDepthEvaluator::operator()(const Point& q) const
{
    require_query_dim(cfg_->dim(), q, "colorful depth");
    return cfg_->dim() == 2 && !simplex_sign_.empty() ? planar(q) : general(q);
}

DepthReport ColorfulDepthEvaluator::planar(const Point& q) const
{
    const auto& c0 = cfg_->cls(0);
    const auto& c1 = cfg_->cls(1);
    const auto& c2 = cfg_->cls(2);
    const std::size_t n0 = c0.size(), n1 = c1.size(), n2 = c2.size();
    const double* qc = q.data();
    const bool strict = policy_ == DegeneracyPolicy::RejectDegenerate;

    // Signs of orient(q, x, y) for every bichromatic pair.
    auto table = [qc](const std::vector<Point>& xs, const std::vector<Point>& ys) {
        std::vector<std::int8_t> t(xs.size() * ys.size());
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = 0; j < ys.size(); ++j)
                t[i * ys.size() + j] = static_cast<std::int8_t>(
                    geom::to_int(geom::orient2d(qc, xs[i].data(), ys[j].data())));
        return t;
    };
    const auto t01 = table(c0, c1);
    const auto t02 = table(c0, c2);
    const auto t12 = table(c1, c2);

    DepthReport report{0, cfg_->rainbow_count()};
    std::size_t s = 0;
    for (std::size_t a = 0; a < n0; ++a) {
        for (std::size_t b = 0; b < n1; ++b) {
            const int s3 = t01[a * n1 + b];
            for (std::size_t c = 0; c < n2; ++c, ++s) {
                const int s0 = simplex_sign_[s];
                if (s0 == 0) {
                    if (strict)
                        throw DegeneracyError("rainbow simplex vertices are affinely dependent");
                    const std::array<Coords, 3> rows{c0[a].coords(), c1[b].coords(), c2[c].coords()};
                    if (geom::hull_contains(rows, q.coords()))
                        ++report.containing;
                    continue;
                }
                const int s1 = t12[b * n2 + c];
                const int s2 = -t02[a * n2 + c];
                if (s1 == -s0 || s2 == -s0 || s3 == -s0)
                    continue;
                if (strict && (s1 == 0 || s2 == 0 || s3 == 0))
                    throw DegeneracyError("query point lies on a simplex boundary");
                ++report.containing;
            }
        }
    }
    return report;
}

DepthReport ColorfulDepthEvaluator::general(const Point& q) const
{
    const std::size_t d = cfg_->dim();
    DepthReport report{0, cfg_->rainbow_count()};
    std::vector<Coords> rows(d + 1);
    std::size_t s = 0;
    for_each_rainbow(cfg_->class_sizes(), [&](std::span<const std::size_t> idx) {
        for (std::size_t c = 0; c <= d; ++c)
            rows[c] = cfg_->cls(c)[idx[c]].coords();
        bool inside;
        if (!simplex_sign_.empty()) {
            const auto s0 = geom::from_int(simplex_sign_[s++]);
            if (s0 == Orientation::Zero) {
                inside = geom::contains(rows, q.coords(), policy_);
            } else {
                inside = true;
                for (std::size_t i = 0; i <= d && inside; ++i) {
                    const Coords saved = rows[i];
                    rows[i] = q.coords();
                    const auto si = geom::orientation(std::span<const Coords>(rows));
                    rows[i] = saved;
                    if (si == -s0)
                        inside = false;
                    else if (si == Orientation::Zero && policy_ == DegeneracyPolicy::RejectDegenerate)
                        throw DegeneracyError("query point lies on a simplex boundary");
                }
            }
        } else {
            inside = geom::contains(rows, q.coords(), policy_);
        }
        if (inside)
            ++report.containing;
        return true;
    });
    return report;
}

DepthReport colorful_depth_exact(const ColoredConfiguration& cfg, const Point& q, DegeneracyPolicy policy)
{
    require_query_dim(cfg.dim(), q, "colorful_depth_exact");
    if (cfg.rainbow_count() > kMaxCachedSimplices) {
        // Too many simplices to cache; evaluate directly.
        DepthReport report{0, cfg.rainbow_count()};
        std::vector<Coords> rows(cfg.dim() + 1);
        for_each_rainbow(cfg.class_sizes(), [&](std::span<const std::size_t> idx) {
            for (std::size_t c = 0; c < idx.size(); ++c)
                rows[c] = cfg.cls(c)[idx[c]].coords();
            if (geom::contains(rows, q.coords(), policy))
                ++report.containing;
            return true;
        });
        return report;
    }
    return ColorfulDepthEvaluator(cfg, policy)(q);
}

MCEstimate colorful_depth_mc(std::span<const harness::MeasureSampler> samplers, const Point& q,
                             std::uint64_t samples, std::uint64_t seed, unsigned threads)
{
    const std::size_t d = q.dim();
    if (samplers.size() != d + 1)
        throw InputError("colorful_depth_mc: need " + std::to_string(d + 1) + " samplers in R^"
                         + std::to_string(d));
    for (const auto& s : samplers)
        if (s.dim() != d)
            throw InputError("colorful_depth_mc: sampler dimension mismatch");
    if (samples == 0)
        throw InputError("colorful_depth_mc: samples must be positive");

    std::vector<std::uint64_t> block_hits(chunk_count(samples, kMcBlock), 0);
    parallel_chunks(samples, kMcBlock, threads, [&](std::size_t block, std::size_t begin, std::size_t end) {
        std::mt19937_64 rng(harness::derive_seed(seed, block));
        std::vector<std::vector<double>> draws(d + 1, std::vector<double>(d));
        std::vector<Coords> rows(draws.begin(), draws.end());
        std::uint64_t hits = 0;
        for (std::size_t t = begin; t < end; ++t) {
            for (std::size_t i = 0; i <= d; ++i)
                samplers[i].sample(rng, draws[i]);
            if (geom::contains(rows, q.coords()))
                ++hits;
        }
        block_hits[block] = hits;
    });
    return wilson_estimate(std::accumulate(block_hits.begin(), block_hits.end(), std::uint64_t{0}),
                           samples, seed);
}

} // namespace sdepth::depth
