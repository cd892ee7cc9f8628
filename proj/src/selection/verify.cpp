#include "sdepth/selection/verify.hpp"

#include <algorithm>
#include <random>

#include "sdepth/depth/depth.hpp"
#include "sdepth/errors.hpp"
#include "sdepth/harness/io.hpp"
#include "sdepth/parallel.hpp"

namespace sdepth::selection {

Rational default_tolerance(const ColoredConfiguration& cfg)
{
    return Rational(static_cast<std::int64_t>(cfg.dim() + 1), static_cast<std::int64_t>(cfg.min_class_size()));
}

VerificationReport verify_selection(const ColoredConfiguration& cfg, BoundKind kind,
                                    std::optional<Rational> tolerance, std::optional<SearchOptions> options)
{
    if (kind == BoundKind::TwoCoincide && !cfg.last_two_coincide())
        throw InputError("two-coincide verification needs identical last two classes");
    const Rational tol = tolerance.value_or(default_tolerance(cfg));
    if (tol < Rational(0))
        throw InputError("tolerance must be non-negative");
    SearchOptions opt = options.value_or(SearchOptions{});
    if (!options)
        opt.strategy = default_strategy(cfg.dim());

    VerificationReport rep{false, bound(cfg.dim(), kind), tol, find_deep_point(cfg, opt),
                           harness::configuration_hash(cfg)};
    rep.pass = !(rep.deep.report.fraction() < rep.threshold());
    return rep;
}

McVerificationReport verify_selection_mc(std::span<const harness::MeasureSampler> samplers, BoundKind kind,
                                         double tolerance, const McVerifyOptions& options)
{
    if (samplers.empty())
        throw InputError("verify_selection_mc: no samplers");
    const std::size_t d = samplers.front().dim();
    if (samplers.size() != d + 1)
        throw InputError("verify_selection_mc: need d+1 samplers");
    for (const auto& s : samplers)
        if (s.dim() != d)
            throw InputError("verify_selection_mc: sampler dimension mismatch");
    if (kind == BoundKind::TwoCoincide && !(samplers[d - 1] == samplers[d]))
        throw InputError("two-coincide verification needs identical last two samplers");
    if (!(tolerance >= 0))
        throw InputError("tolerance must be non-negative");
    if (options.samples == 0 || options.candidates == 0)
        throw InputError("verify_selection_mc: samples and candidates must be positive");

    // Candidates: centroids of sampled rainbow simplices.
    std::mt19937_64 rng(harness::derive_seed(options.seed, 0));
    std::vector<Point> cands;
    std::vector<double> buf(d), c(d);
    for (std::size_t k = 0; k < options.candidates; ++k) {
        std::fill(c.begin(), c.end(), 0.0);
        for (const auto& s : samplers) {
            s.sample(rng, buf);
            for (std::size_t j = 0; j < d; ++j)
                c[j] += buf[j];
        }
        for (auto& x : c)
            x /= static_cast<double>(d + 1);
        cands.emplace_back(c);
    }

    // Common random simplices for scoring.
    const std::size_t scoring = static_cast<std::size_t>(std::min<std::uint64_t>(options.samples, 200000));
    std::vector<double> draws(scoring * (d + 1) * d);
    std::mt19937_64 srng(harness::derive_seed(options.seed, 1));
    for (std::size_t t = 0; t < scoring; ++t)
        for (std::size_t i = 0; i <= d; ++i)
            samplers[i].sample(srng, std::span<double>(draws.data() + (t * (d + 1) + i) * d, d));

    std::vector<std::uint64_t> score(cands.size(), 0);
    parallel_chunks(cands.size(), 1, options.threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        std::vector<geom::Coords> rows(d + 1);
        for (std::size_t k = begin; k < end; ++k) {
            for (std::size_t t = 0; t < scoring; ++t) {
                for (std::size_t i = 0; i <= d; ++i)
                    rows[i] = geom::Coords(draws.data() + (t * (d + 1) + i) * d, d);
                if (geom::contains(rows, cands[k].coords()))
                    ++score[k];
            }
        }
    });
    std::size_t best = 0;
    for (std::size_t k = 1; k < cands.size(); ++k)
        if (score[k] > score[best] || (score[k] == score[best] && cands[k] < cands[best]))
            best = k;

    McVerificationReport rep{false, bound(d, kind), tolerance, cands[best],
                             depth::colorful_depth_mc(samplers, cands[best], options.samples,
                                                      harness::derive_seed(options.seed, 2), options.threads),
                             cands.size()};
    rep.pass = rep.estimate.estimate >= to_double(rep.bound.value) - tolerance;
    return rep;
}

} // namespace sdepth::selection
