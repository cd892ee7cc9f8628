#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sdepth/depth/configuration.hpp"
#include "sdepth/geom/simplex.hpp"
#include "sdepth/harness/sampler.hpp"

namespace sdepth::depth {

using geom::DegeneracyPolicy;

// Number of (d+1)-subsets of `points` whose closed hull contains q, by enumeration.
DepthReport mono_depth_exact(std::span<const Point> points, const Point& q,
                             DegeneracyPolicy policy = DegeneracyPolicy::ClosedHull);

// Planar simplicial depth in O(n log n): angular sort around q, then count the triples that fit
// in an open half-plane through q with a rotating pointer. Same value as mono_depth_exact.
DepthReport mono_depth_2d_fast(std::span<const Point> points, const Point& q,
                               DegeneracyPolicy policy = DegeneracyPolicy::ClosedHull);

// Rainbow tuples (one point per class) whose closed simplex contains q.
DepthReport colorful_depth_exact(const ColoredConfiguration& cfg, const Point& q,
                                 DegeneracyPolicy policy = DegeneracyPolicy::ClosedHull);

// Repeated colourful-depth queries against one configuration. Caches the orientation of every
// rainbow simplex when the rainbow count is small enough.
class ColorfulDepthEvaluator {
public:
    explicit ColorfulDepthEvaluator(const ColoredConfiguration& cfg,
                                    DegeneracyPolicy policy = DegeneracyPolicy::ClosedHull);

    DepthReport operator()(const Point& q) const;
    const ColoredConfiguration& configuration() const noexcept { return *cfg_; }

private:
    DepthReport planar(const Point& q) const;
    DepthReport general(const Point& q) const;

    const ColoredConfiguration* cfg_;
    DegeneracyPolicy policy_;
    std::vector<std::int8_t> simplex_sign_; // lexicographic rainbow order; empty if not cached
};

// Monte Carlo colourful depth: each trial draws one point per sampler and tests closed
// containment of q. Samples are split into fixed blocks with seed-derived streams, so the result
// does not depend on `threads`.
MCEstimate colorful_depth_mc(std::span<const harness::MeasureSampler> samplers, const Point& q,
                             std::uint64_t samples, std::uint64_t seed, unsigned threads = 1);

// Calls visit(indices) for every rainbow tuple in lexicographic order of class-point indices;
// stops early when visit returns false.
template <typename Visit>
void for_each_rainbow(std::span<const std::size_t> sizes, Visit&& visit)
{
    std::vector<std::size_t> idx(sizes.size(), 0);
    for (auto s : sizes)
        if (s == 0)
            return;
    while (true) {
        if (!visit(std::span<const std::size_t>(idx)))
            return;
        std::size_t k = idx.size();
        while (k > 0) {
            --k;
            if (++idx[k] < sizes[k])
                break;
            idx[k] = 0;
            if (k == 0)
                return;
        }
    }
}

} // namespace sdepth::depth
