#include "sdepth/selection/deep_point.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "sdepth/depth/depth.hpp"
#include "sdepth/errors.hpp"
#include "sdepth/harness/sampler.hpp"
#include "sdepth/parallel.hpp"
#include "sdepth/selection/arrangement.hpp"

namespace sdepth::selection {
namespace {

struct Best {
    std::size_t index = 0;
    DepthReport report;
    bool any = false;
};

bool better(const DepthReport& r, const Point& p, const Best& b, const std::vector<Point>& cands)
{
    if (!b.any)
        return true;
    if (r.containing != b.report.containing)
        return r.containing > b.report.containing;
    return p < cands[b.index];
}

// Deepest candidate; ties go to the lexicographically smallest point.
Best evaluate(const depth::ColorfulDepthEvaluator& eval, const std::vector<Point>& cands, unsigned threads)
{
    constexpr std::size_t grain = 16;
    std::vector<Best> partial(chunk_count(cands.size(), grain));
    parallel_chunks(cands.size(), grain, threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
        Best b;
        for (std::size_t i = begin; i < end; ++i) {
            const DepthReport r = eval(cands[i]);
            if (better(r, cands[i], b, cands))
                b = {i, r, true};
        }
        partial[c] = b;
    });
    Best best;
    for (const auto& b : partial)
        if (b.any && better(b.report, cands[b.index], best, cands))
            best = b;
    return best;
}

DeepPointResult finish(const std::vector<Point>& cands, const Best& b, Strategy s)
{
    return {cands[b.index], b.report, s, cands.size(), std::nullopt};
}

DeepPointResult arrangement(const ColoredConfiguration& cfg, const SearchOptions& opt,
                            const depth::ColorfulDepthEvaluator& eval)
{
    std::vector<Point> cands;
    if (cfg.dim() == 1) {
        for (const auto& cls : cfg.classes())
            cands.insert(cands.end(), cls.begin(), cls.end());
        const Best b = evaluate(eval, cands, opt.threads);
        auto res = finish(cands, b, Strategy::Arrangement2d);
        res.certified_max = b.report;
        return res;
    }

    const ArrangementSearch search = planar_arrangement_search(cfg, opt.arrangement_witnesses, opt.threads);
    // Rounded vertices and their one-ulp neighbourhoods.
    for (const auto& v : search.best) {
        for (int dx = -1; dx <= 1; ++dx) {
            for (int dy = -1; dy <= 1; ++dy) {
                double x = v.approx[0], y = v.approx[1];
                if (dx != 0)
                    x = std::nextafter(x, dx * HUGE_VAL);
                if (dy != 0)
                    y = std::nextafter(y, dy * HUGE_VAL);
                cands.push_back(Point{x, y});
            }
        }
    }
    const Best b = evaluate(eval, cands, opt.threads);
    auto res = finish(cands, b, Strategy::Arrangement2d);
    res.candidates_evaluated = search.vertices_visited + cands.size();
    res.certified_max = DepthReport{search.max_containing, search.total};
    // The certified value dominates everything evaluated.
    if (res.report.containing > search.max_containing)
        throw std::logic_error("arrangement search: witness deeper than certified maximum");
    return res;
}

DeepPointResult centroids(const ColoredConfiguration& cfg, const SearchOptions& opt,
                          const depth::ColorfulDepthEvaluator& eval)
{
    const std::size_t d = cfg.dim();
    const auto sizes = cfg.class_sizes();
    const std::size_t k = std::max<std::size_t>(opt.centroid_samples, 1);
    std::vector<Point> cands;
    std::vector<double> c(d);
    auto add = [&](std::span<const std::size_t> idx) {
        std::fill(c.begin(), c.end(), 0.0);
        for (std::size_t i = 0; i <= d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                c[j] += cfg.cls(i)[idx[i]][j];
        for (auto& x : c)
            x /= static_cast<double>(d + 1);
        cands.emplace_back(c);
    };
    if (cfg.rainbow_count() <= k) {
        depth::for_each_rainbow(sizes, [&](std::span<const std::size_t> idx) {
            add(idx);
            return true;
        });
    } else {
        std::mt19937_64 rng(harness::derive_seed(opt.seed, 0));
        std::vector<std::size_t> idx(d + 1);
        for (std::size_t s = 0; s < k; ++s) {
            for (std::size_t i = 0; i <= d; ++i)
                idx[i] = std::uniform_int_distribution<std::size_t>(0, sizes[i] - 1)(rng);
            add(idx);
        }
    }
    return finish(cands, evaluate(eval, cands, opt.threads), Strategy::RainbowCentroids);
}

std::size_t default_grid(std::size_t d)
{
    switch (d) {
    case 1: return 257;
    case 2: return 33;
    case 3: return 9;
    case 4: return 5;
    default: return 3;
    }
}

DeepPointResult grid(const ColoredConfiguration& cfg, const SearchOptions& opt,
                     const depth::ColorfulDepthEvaluator& eval)
{
    const std::size_t d = cfg.dim();
    const std::size_t g = std::max<std::size_t>(opt.grid_points ? opt.grid_points : default_grid(d), 2);
    double count = 1;
    for (std::size_t j = 0; j < d; ++j)
        count *= static_cast<double>(g);
    if (count > 1e7)
        throw InputError("grid-refine: " + std::to_string(g) + "^" + std::to_string(d) + " points is too many");

    std::vector<double> lo(d, HUGE_VAL), hi(d, -HUGE_VAL);
    for (const auto& cls : cfg.classes())
        for (const auto& x : cls)
            for (std::size_t j = 0; j < d; ++j) {
                lo[j] = std::min(lo[j], x[j]);
                hi[j] = std::max(hi[j], x[j]);
            }

    std::uint64_t evaluated = 0;
    std::optional<Point> incumbent;
    std::optional<DepthReport> inc_report;
    for (std::size_t round = 0; round <= opt.refine_rounds; ++round) {
        std::vector<Point> cands;
        std::vector<std::size_t> idx(d, 0);
        std::vector<double> c(d);
        while (true) {
            for (std::size_t j = 0; j < d; ++j)
                c[j] = lo[j] + (hi[j] - lo[j]) * static_cast<double>(idx[j]) / static_cast<double>(g - 1);
            cands.emplace_back(c);
            std::size_t j = 0;
            while (j < d && ++idx[j] == g)
                idx[j++] = 0;
            if (j == d)
                break;
        }
        if (incumbent)
            cands.push_back(*incumbent);
        const Best b = evaluate(eval, cands, opt.threads);
        evaluated += cands.size();
        incumbent = cands[b.index];
        inc_report = b.report;
        for (std::size_t j = 0; j < d; ++j) {
            const double step = (hi[j] - lo[j]) / static_cast<double>(g - 1);
            lo[j] = (*incumbent)[j] - step;
            hi[j] = (*incumbent)[j] + step;
        }
    }
    return {*incumbent, *inc_report, Strategy::GridRefine, evaluated, std::nullopt};
}

} // namespace

const char* to_string(Strategy s)
{
    switch (s) {
    case Strategy::Arrangement2d: return "arrangement-2d";
    case Strategy::RainbowCentroids: return "rainbow-centroids";
    case Strategy::GridRefine: return "grid-refine";
    }
    return "?";
}

Strategy parse_strategy(std::string_view text)
{
    for (auto s : {Strategy::Arrangement2d, Strategy::RainbowCentroids, Strategy::GridRefine})
        if (text == to_string(s))
            return s;
    throw InputError("unknown strategy '" + std::string(text) + "'");
}

Strategy default_strategy(std::size_t d)
{
    return d <= 2 ? Strategy::Arrangement2d : Strategy::RainbowCentroids;
}

DeepPointResult find_deep_point(const ColoredConfiguration& cfg, const SearchOptions& options)
{
    if (options.strategy == Strategy::Arrangement2d && cfg.dim() > 2)
        throw InputError("arrangement-2d needs dimension 1 or 2, got " + std::to_string(cfg.dim()));
    const depth::ColorfulDepthEvaluator eval(cfg);
    switch (options.strategy) {
    case Strategy::Arrangement2d: return arrangement(cfg, options, eval);
    case Strategy::RainbowCentroids: return centroids(cfg, options, eval);
    case Strategy::GridRefine: return grid(cfg, options, eval);
    }
    throw InputError("unknown strategy");
}

} // namespace sdepth::selection
