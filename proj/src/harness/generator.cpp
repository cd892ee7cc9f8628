#include "sdepth/harness/generator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sdepth/errors.hpp"
#include "sdepth/geom/predicates.hpp"

namespace sdepth::harness {
namespace {

constexpr std::uint64_t kPerturbStream = 1000;
constexpr double kMaxSubsets = 2e7;

std::vector<std::vector<geom::Point>> draw(const GeneratorSpec& spec, std::uint64_t seed)
{
    std::vector<std::vector<geom::Point>> classes(spec.dim + 1);
    for (std::size_t i = 0; i <= spec.dim; ++i) {
        if (spec.coincide_last_two && i == spec.dim) {
            classes[i] = classes[i - 1];
            break;
        }
        std::mt19937_64 rng(derive_seed(seed, i));
        for (std::size_t k = 0; k < spec.sizes[i]; ++k)
            classes[i].push_back(spec.samplers[i].sample(rng));
    }
    return classes;
}

void perturb(std::vector<std::vector<geom::Point>>& classes, const GeneratorSpec& spec, std::uint64_t seed,
             std::size_t attempt)
{
    const std::size_t d = spec.dim;
    double scale = 0;
    for (const auto& cls : classes)
        for (const auto& x : cls)
            for (std::size_t j = 0; j < d; ++j)
                scale = std::max(scale, std::abs(x[j]));
    if (scale == 0)
        scale = 1;
    const double eps = spec.perturbation * std::ldexp(1.0, static_cast<int>(attempt)) * scale;
    std::mt19937_64 rng(derive_seed(seed, kPerturbStream + attempt));
    std::uniform_real_distribution<double> jitter(-eps, eps);
    std::vector<double> c(d);
    for (std::size_t i = 0; i <= d; ++i) {
        if (spec.coincide_last_two && i == d) {
            classes[i] = classes[i - 1];
            break;
        }
        for (auto& x : classes[i]) {
            for (std::size_t j = 0; j < d; ++j)
                c[j] = x[j] + jitter(rng);
            x = geom::Point(c);
        }
    }
}

} // namespace

nlohmann::json GeneratorSpec::to_json() const
{
    nlohmann::json s = nlohmann::json::array();
    for (const auto& m : samplers)
        s.push_back(m.to_json());
    return {{"dim", dim},
            {"sizes", sizes},
            {"samplers", s},
            {"coincide_last_two", coincide_last_two},
            {"general_position", general_position},
            {"max_retries", max_retries},
            {"perturbation", perturbation}};
}

GeneratorSpec GeneratorSpec::from_json(const nlohmann::json& j)
{
    try {
        GeneratorSpec spec;
        spec.dim = j.at("dim").get<std::size_t>();
        spec.sizes = j.at("sizes").get<std::vector<std::size_t>>();
        for (const auto& m : j.at("samplers"))
            spec.samplers.push_back(MeasureSampler::from_json(m));
        spec.coincide_last_two = j.value("coincide_last_two", false);
        spec.general_position = j.value("general_position", false);
        spec.max_retries = j.value("max_retries", std::size_t{8});
        spec.perturbation = j.value("perturbation", 1e-9);
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("generator spec: ") + e.what());
    }
}

MeasureSampler named_measure(std::string_view name, std::size_t dim)
{
    if (dim == 0)
        throw InputError("dimension must be positive");
    const geom::Point zero(std::vector<double>(dim, 0.0));
    if (name == "uniform")
        return MeasureSampler::uniform_box(zero, geom::Point(std::vector<double>(dim, 1.0)));
    if (name == "gaussian")
        return MeasureSampler::gaussian(zero, std::vector<double>(dim, 1.0));
    if (name == "ball")
        return MeasureSampler::uniform_ball(zero, 1.0);
    if (name == "mixture") {
        std::vector<double> a(dim, 0.0), b(dim, 0.0);
        a[0] = -2;
        b[0] = 2;
        return MeasureSampler::mixture(
            {Rational(1, 2), Rational(1, 2)},
            {MeasureSampler::gaussian(geom::Point(a), std::vector<double>(dim, 1.0)),
             MeasureSampler::gaussian(geom::Point(b), std::vector<double>(dim, 1.0))});
    }
    throw InputError("unknown measure '" + std::string(name) + "' (uniform, gaussian, ball, mixture)");
}

GeneratorSpec make_spec(std::size_t dim, std::size_t n, std::string_view measure, bool coincide_last_two)
{
    GeneratorSpec spec;
    spec.dim = dim;
    spec.sizes.assign(dim + 1, n);
    spec.samplers.assign(dim + 1, named_measure(measure, dim));
    spec.coincide_last_two = coincide_last_two;
    return spec;
}

bool in_general_position(const depth::ColoredConfiguration& cfg)
{
    const std::size_t d = cfg.dim();
    std::vector<geom::Coords> pts;
    const std::size_t usable = cfg.last_two_coincide() ? d : d + 1;
    for (std::size_t i = 0; i < usable; ++i)
        for (const auto& x : cfg.cls(i))
            pts.push_back(x.coords());
    const std::size_t m = pts.size();
    const std::size_t k = std::min(m, d + 1);
    double subsets = 1;
    for (std::size_t i = 0; i < k; ++i)
        subsets = subsets * static_cast<double>(m - i) / static_cast<double>(i + 1);
    if (subsets > kMaxSubsets)
        throw InputError("general-position check: too many point subsets");

    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (std::equal(pts[a].begin(), pts[a].end(), pts[b].begin()))
                return false;
    if (m < d + 1)
        return true;

    std::vector<std::size_t> idx(d + 1);
    for (std::size_t i = 0; i <= d; ++i)
        idx[i] = i;
    std::vector<geom::Coords> rows(d + 1);
    while (true) {
        for (std::size_t i = 0; i <= d; ++i)
            rows[i] = pts[idx[i]];
        if (geom::orientation(std::span<const geom::Coords>(rows)) == geom::Orientation::Zero)
            return false;
        std::size_t i = d + 1;
        while (i > 0 && idx[i - 1] == m - (d + 1) + i - 1)
            --i;
        if (i == 0)
            return true;
        ++idx[i - 1];
        for (std::size_t j = i; j <= d; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

depth::ColoredConfiguration generate(const GeneratorSpec& spec, std::uint64_t seed)
{
    const std::size_t d = spec.dim;
    if (d == 0)
        throw InputError("generator: dimension must be positive");
    if (spec.sizes.size() != d + 1 || spec.samplers.size() != d + 1)
        throw InputError("generator: need " + std::to_string(d + 1) + " class sizes and samplers");
    for (std::size_t i = 0; i <= d; ++i) {
        if (spec.sizes[i] == 0)
            throw InputError("generator: class sizes must be positive");
        if (spec.samplers[i].dim() != d)
            throw InputError("generator: sampler dimension mismatch");
    }
    if (spec.coincide_last_two && (d < 1 || spec.sizes[d] != spec.sizes[d - 1] || !(spec.samplers[d] == spec.samplers[d - 1])))
        throw InputError("generator: coinciding classes need equal sizes and samplers");

    auto classes = draw(spec, seed);
    if (!spec.general_position)
        return depth::ColoredConfiguration(d, std::move(classes));
    for (std::size_t attempt = 0;; ++attempt) {
        depth::ColoredConfiguration cfg(d, classes);
        if (in_general_position(cfg))
            return cfg;
        if (attempt == spec.max_retries)
            throw DegeneracyError("generator: no general position after " + std::to_string(spec.max_retries)
                                  + " perturbations");
        perturb(classes, spec, seed, attempt);
    }
}

} // namespace sdepth::harness
