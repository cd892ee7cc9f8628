#include "sdepth/depth/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sdepth/errors.hpp"

namespace sdepth::depth {

ColoredConfiguration::ColoredConfiguration(std::size_t dim, std::vector<std::vector<Point>> classes)
    : dim_(dim), classes_(std::move(classes))
{
    if (dim_ == 0)
        throw InputError("configuration dimension must be positive");
    if (classes_.size() != dim_ + 1)
        throw InputError("configuration in R^" + std::to_string(dim_) + " needs "
                         + std::to_string(dim_ + 1) + " classes, got "
                         + std::to_string(classes_.size()));
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        if (classes_[i].empty())
            throw InputError("class " + std::to_string(i) + " is empty");
        geom::require_dim(classes_[i], dim_, "configuration");
    }
    (void)rainbow_count();
}

std::vector<std::size_t> ColoredConfiguration::class_sizes() const
{
    std::vector<std::size_t> sizes;
    for (const auto& c : classes_)
        sizes.push_back(c.size());
    return sizes;
}

std::size_t ColoredConfiguration::min_class_size() const
{
    std::size_t m = classes_.front().size();
    for (const auto& c : classes_)
        m = std::min(m, c.size());
    return m;
}

std::uint64_t ColoredConfiguration::rainbow_count() const
{
    constexpr std::uint64_t limit = std::numeric_limits<std::int64_t>::max();
    std::uint64_t total = 1;
    for (const auto& c : classes_) {
        if (total > limit / c.size())
            throw InputError("rainbow simplex count overflows 63 bits");
        total *= c.size();
    }
    return total;
}

bool ColoredConfiguration::last_two_coincide() const
{
    return classes_[dim_ - 1] == classes_[dim_];
}

Rational DepthReport::fraction() const
{
    return Rational(static_cast<std::int64_t>(containing), static_cast<std::int64_t>(total));
}

MCEstimate wilson_estimate(std::uint64_t hits, std::uint64_t samples, std::uint64_t seed)
{
    if (samples == 0)
        throw InputError("Monte Carlo estimate needs at least one sample");
    constexpr double z = 1.959963984540054;
    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(hits) / n;
    const double denom = 1.0 + z * z / n;
    const double center = (p + z * z / (2.0 * n)) / denom;
    const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n));
    MCEstimate e;
    e.samples = samples;
    e.hits = hits;
    e.estimate = p;
    e.ci_low = std::clamp(std::min(center - half, p), 0.0, 1.0);
    e.ci_high = std::clamp(std::max(center + half, p), 0.0, 1.0);
    e.seed = seed;
    return e;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::int64_t>::max())
            throw InputError("binomial coefficient overflows 63 bits");
    }
    return static_cast<std::uint64_t>(r);
}

} // namespace sdepth::depth
