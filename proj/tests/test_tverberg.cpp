#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "sdepth/errors.hpp"
#include "sdepth/geom/simplex.hpp"
#include "sdepth/tverberg/tverberg.hpp"

using namespace sdepth;
using namespace sdepth::tverberg;

namespace {

ColoredConfiguration random_cfg(std::mt19937_64& rng, std::size_t d, std::size_t n)
{
    std::vector<std::vector<Point>> classes(d + 1);
    for (auto& cls : classes)
        for (std::size_t i = 0; i < n; ++i)
            cls.push_back(oracle::uniform_point(rng, d));
    return ColoredConfiguration(d, std::move(classes));
}

// 1D: do two disjoint rainbow segments share a point? Exhaustive over index pairs.
bool oracle_two_segments(const ColoredConfiguration& cfg)
{
    const auto& a = cfg.cls(0);
    const auto& b = cfg.cls(1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            for (std::size_t k = 0; k < a.size(); ++k)
                for (std::size_t l = 0; l < b.size(); ++l) {
                    if (k == i || l == j)
                        continue;
                    const double lo = std::max(std::min(a[i][0], b[j][0]), std::min(a[k][0], b[l][0]));
                    const double hi = std::min(std::max(a[i][0], b[j][0]), std::max(a[k][0], b[l][0]));
                    if (lo <= hi)
                        return true;
                }
    return false;
}

} // namespace

TEST_CASE("asymptotic_T values")
{
    // Frozen from 50-digit evaluations of r / (1 - (1 - 1/(d+1)!)^(1/(d+1))).
    CHECK(asymptotic_T(3, 2) == doctest::Approx(50.87852705759767883).epsilon(1e-13));
    CHECK(asymptotic_T(1, 1) == doctest::Approx(3.414213562373095).epsilon(1e-13));
    CHECK(asymptotic_T(1, 2) == doctest::Approx(16.959509019199226).epsilon(1e-13));
    CHECK(asymptotic_T(1, 3) == doctest::Approx(94.48670054707558).epsilon(1e-13));
    const double ratio[] = {0.85355339, 0.94219495, 0.98423646, 0.99666109, 0.99942114, 0.99991496};
    double fact = 1;
    for (std::size_t d = 1; d <= 6; ++d) {
        fact *= static_cast<double>(d + 1);
        CHECK(asymptotic_T(1, d) >= 1.0);
        CHECK(asymptotic_T(7, d) / (7 * fact * static_cast<double>(d + 1)) == doctest::Approx(ratio[d - 1]).epsilon(1e-7));
    }
    CHECK_THROWS_AS(asymptotic_T(0, 2), InputError);
}

TEST_CASE("greedy class size")
{
    CHECK(greedy_class_size(3, 2) == 37);
    CHECK(greedy_class_size(2, 1) == 5);
    for (std::size_t d = 1; d <= 8; ++d)
        CHECK(greedy_class_size(1, d) == 1);
    for (std::uint64_t r = 1; r < 30; ++r)
        for (std::size_t d = 1; d <= 5; ++d)
            CHECK(greedy_class_size(r + 1, d) > greedy_class_size(r, d));
    // Within a factor of two of the asymptotic form, except at r = 1.
    for (std::uint64_t r = 2; r <= 10; ++r)
        for (std::size_t d = 1; d <= 3; ++d) {
            const double q = static_cast<double>(greedy_class_size(r, d)) / asymptotic_T(r, d);
            CHECK(q >= 0.5);
            CHECK(q <= 2.0);
        }
    CHECK_THROWS_AS(greedy_class_size(1ull << 60, 10), InputError);
}

TEST_CASE("counting guarantee")
{
    CHECK(guaranteed_rounds(4, {2, 2}) == 1);
    CHECK(guaranteed_rounds(0, {3, 3}) == 0);
    CHECK(guaranteed_rounds(9, {3, 3}) == 2); // 9 - 6 = 3, then 3 - 4 < 1
    // A point of depth p_d at class size greedy_class_size(r, d) survives r rounds.
    for (std::size_t d = 1; d <= 3; ++d) {
        std::uint64_t fact = 1;
        for (std::size_t k = 2; k <= d + 1; ++k)
            fact *= k;
        for (std::uint64_t r = 1; r <= 10; ++r) {
            const std::uint64_t n = greedy_class_size(r, d);
            std::uint64_t total = 1;
            for (std::size_t i = 0; i <= d; ++i)
                total *= n;
            const std::uint64_t depth = (total + fact - 1) / fact;
            CHECK(guaranteed_rounds(depth, std::vector<std::size_t>(d + 1, n)) >= r);
        }
    }
}

TEST_CASE("extract: one triangle")
{
    ColoredConfiguration cfg(2, {{{0, 0}}, {{3, 0}}, {{0, 3}}});
    const auto res = extract(cfg, 1);
    CHECK(res.certificate.parts.size() == 1);
    CHECK(res.certificate.parts[0] == std::vector<std::size_t>{0, 0, 0});
    CHECK(verify_certificate(cfg, res.certificate, 1).ok);
}

TEST_CASE("extract: d = 1, r = 2 against the exhaustive oracle")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const auto cfg = random_cfg(rng, 1, 5);
        REQUIRE(oracle_two_segments(cfg));
        const auto res = extract(cfg, 2);
        CHECK(res.depth_meets_bound);
        CHECK(verify_certificate(cfg, res.certificate, 2).ok);
        // The segments really overlap.
        const auto& p = res.certificate.parts;
        const auto& a = cfg.cls(0);
        const auto& b = cfg.cls(1);
        const double lo = std::max(std::min(a[p[0][0]][0], b[p[0][1]][0]), std::min(a[p[1][0]][0], b[p[1][1]][0]));
        const double hi = std::min(std::max(a[p[0][0]][0], b[p[0][1]][0]), std::max(a[p[1][0]][0], b[p[1][1]][0]));
        CHECK(lo <= hi);
    }
}

TEST_CASE("extract: d = 2, r = 3, N = 37")
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 3; ++trial) {
        const auto cfg = random_cfg(rng, 2, 37);
        const auto res = extract(cfg, 3);
        CHECK(res.depth_meets_bound);
        CHECK(res.guaranteed_parts >= 3);
        const auto check = verify_certificate(cfg, res.certificate, 3);
        CHECK_MESSAGE(check.ok, check.reason);
        // Independent rational re-check of every part.
        const auto w = oracle::lift(res.certificate.witness);
        for (const auto& part : res.certificate.parts)
            CHECK(oracle::triangle_contains(oracle::lift(cfg.cls(0)[part[0]]), oracle::lift(cfg.cls(1)[part[1]]),
                                            oracle::lift(cfg.cls(2)[part[2]]), w));
    }
}

TEST_CASE("extract errors")
{
    std::mt19937_64 rng(6);
    CHECK_THROWS_AS(extract(random_cfg(rng, 2, 10), 3), InputError);
    CHECK_THROWS_AS(extract(random_cfg(rng, 2, 10), 0), InputError);

    ColoredConfiguration apart(1, {{{0}, {10}}, {{1}, {11}}});
    ExtractOptions best;
    best.mode = ExtractMode::BestEffort;
    try {
        extract(apart, 2, best);
        FAIL("expected exhaustion");
    } catch (const ExtractionExhausted& e) {
        CHECK(e.code() == ErrorCode::ExtractionExhausted);
        CHECK(e.partial().parts.size() == 1);
    }
}

TEST_CASE("certificate verification rejects bad certificates")
{
    ColoredConfiguration cfg(1, {{{0}, {2}}, {{1}, {3}}});
    TverbergCertificate good{Point{1.5}, {{0, 1}, {1, 0}}};
    CHECK(verify_certificate(cfg, good, 2).ok);
    CHECK_FALSE(verify_certificate(cfg, good, 3).ok);
    TverbergCertificate reused{Point{1}, {{0, 0}, {0, 1}}};
    CHECK_FALSE(verify_certificate(cfg, reused, 2).ok);
    TverbergCertificate outside{Point{2.5}, {{0, 0}, {1, 1}}};
    CHECK(verify_certificate(cfg, outside, 2).reason == "part 0 misses the witness");
    TverbergCertificate range{Point{1}, {{0, 5}}};
    CHECK_FALSE(verify_certificate(cfg, range, 1).ok);
}
