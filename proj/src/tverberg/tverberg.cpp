#include "sdepth/tverberg/tverberg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sdepth/depth/depth.hpp"
#include "sdepth/geom/simplex.hpp"
#include "sdepth/selection/bound.hpp"

namespace sdepth::tverberg {

double asymptotic_T(std::uint64_t r, std::size_t d)
{
    if (r == 0 || d == 0)
        throw InputError("asymptotic_T: r and d must be positive");
    double fact = 1;
    for (std::size_t k = 2; k <= d + 1; ++k)
        fact *= static_cast<double>(k);
    // 1 - (1-p)^(1/(d+1)) without cancellation.
    const double denom = -std::expm1(std::log1p(-1.0 / fact) / static_cast<double>(d + 1));
    return static_cast<double>(r) / denom;
}

std::uint64_t greedy_class_size(std::uint64_t r, std::size_t d)
{
    if (r == 0 || d == 0)
        throw InputError("greedy_class_size: r and d must be positive");
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t n = d + 1;
    for (std::uint64_t k = 2; k <= d + 1; ++k) {
        if (n > max / k)
            throw InputError("greedy_class_size: overflow");
        n *= k;
    }
    if (r - 1 > 0 && n > (max - 1) / (r - 1))
        throw InputError("greedy_class_size: overflow");
    return n * (r - 1) + 1;
}

std::uint64_t guaranteed_rounds(std::uint64_t containing, std::vector<std::size_t> sizes)
{
    std::uint64_t rounds = 0;
    unsigned __int128 left = containing;
    while (left >= 1) {
        for (auto s : sizes)
            if (s == 0)
                return rounds;
        ++rounds;
        unsigned __int128 killed = 0;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            unsigned __int128 prod = 1;
            for (std::size_t j = 0; j < sizes.size(); ++j)
                if (j != i)
                    prod *= sizes[j];
            killed += prod;
        }
        left = killed >= left ? 0 : left - killed;
        for (auto& s : sizes)
            --s;
    }
    return rounds;
}

CertificateCheck verify_certificate(const ColoredConfiguration& cfg, const TverbergCertificate& cert,
                                    std::uint64_t r)
{
    const std::size_t d = cfg.dim();
    if (cert.witness.dim() != d)
        return {false, "witness dimension"};
    if (cert.parts.size() != r)
        return {false, "expected " + std::to_string(r) + " parts, got " + std::to_string(cert.parts.size())};
    std::vector<std::vector<bool>> used;
    for (const auto& cls : cfg.classes())
        used.emplace_back(cls.size(), false);
    std::vector<geom::Coords> rows(d + 1);
    for (std::size_t k = 0; k < cert.parts.size(); ++k) {
        const auto& part = cert.parts[k];
        if (part.size() != d + 1)
            return {false, "part " + std::to_string(k) + " does not take one point per class"};
        for (std::size_t i = 0; i <= d; ++i) {
            if (part[i] >= used[i].size())
                return {false, "part " + std::to_string(k) + " index out of range"};
            if (used[i][part[i]])
                return {false, "point " + std::to_string(part[i]) + " of class " + std::to_string(i) + " reused"};
            used[i][part[i]] = true;
            rows[i] = cfg.cls(i)[part[i]].coords();
        }
        if (!geom::contains(rows, cert.witness.coords()))
            return {false, "part " + std::to_string(k) + " misses the witness"};
    }
    return {true, {}};
}

ExtractionExhausted::ExtractionExhausted(TverbergCertificate partial, std::uint64_t wanted)
    : Error(ErrorCode::ExtractionExhausted,
            "found " + std::to_string(partial.parts.size()) + " of " + std::to_string(wanted)
                + " disjoint rainbow simplices through the deep point"),
      partial_(std::move(partial))
{
}

ExtractionResult extract(const ColoredConfiguration& cfg, std::uint64_t r, const ExtractOptions& options)
{
    const std::size_t d = cfg.dim();
    if (r == 0)
        throw InputError("extract: r must be positive");
    if (options.mode == ExtractMode::Guaranteed && cfg.min_class_size() < greedy_class_size(r, d))
        throw InputError("guaranteed extraction of " + std::to_string(r) + " parts needs classes of at least "
                         + std::to_string(greedy_class_size(r, d)) + " points");

    selection::SearchOptions search = options.search;
    if (options.default_search)
        search.strategy = selection::default_strategy(d);
    auto deep = selection::find_deep_point(cfg, search);

    ExtractionResult out{{deep.point, {}}, deep, false, 0};
    const Rational p = selection::bound(d, selection::BoundKind::General).value;
    out.depth_meets_bound = !(deep.report.fraction() < p);
    out.guaranteed_parts = guaranteed_rounds(deep.report.containing, cfg.class_sizes());
    const bool promised = out.guaranteed_parts >= r;

    // Remaining point indices per class, ascending.
    std::vector<std::vector<std::size_t>> left;
    for (const auto& cls : cfg.classes()) {
        left.emplace_back(cls.size());
        for (std::size_t i = 0; i < cls.size(); ++i)
            left.back()[i] = i;
    }
    std::vector<geom::Coords> rows(d + 1);
    const auto q = deep.point.coords();
    for (std::uint64_t k = 0; k < r; ++k) {
        std::vector<std::size_t> sizes;
        for (const auto& l : left)
            sizes.push_back(l.size());
        std::vector<std::size_t> hit;
        depth::for_each_rainbow(sizes, [&](std::span<const std::size_t> idx) {
            for (std::size_t i = 0; i <= d; ++i)
                rows[i] = cfg.cls(i)[left[i][idx[i]]].coords();
            if (!geom::contains(rows, q))
                return true;
            hit.assign(idx.begin(), idx.end());
            return false;
        });
        if (hit.empty()) {
            if (promised)
                throw std::logic_error("greedy extraction failed despite the counting guarantee");
            throw ExtractionExhausted(out.certificate, r);
        }
        std::vector<std::size_t> part(d + 1);
        for (std::size_t i = 0; i <= d; ++i) {
            part[i] = left[i][hit[i]];
            left[i].erase(left[i].begin() + static_cast<std::ptrdiff_t>(hit[i]));
        }
        out.certificate.parts.push_back(std::move(part));
    }
    return out;
}

} // namespace sdepth::tverberg
