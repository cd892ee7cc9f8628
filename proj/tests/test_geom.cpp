#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "sdepth/errors.hpp"
#include "sdepth/geom/predicates.hpp"
#include "sdepth/geom/simplex.hpp"

using namespace sdepth;
using namespace sdepth::geom;

namespace {

std::vector<Coords> rows_of(const std::vector<Point>& pts)
{
    std::vector<Coords> r;
    for (const auto& p : pts)
        r.push_back(p.coords());
    return r;
}

// Integer affine map x -> A x + b with det(A) > 0, exact on the dyadic test grid.
struct AffineMap {
    std::vector<std::vector<int>> a;
    std::vector<int> b;

    Point operator()(const Point& p) const
    {
        std::vector<double> out(p.dim());
        for (std::size_t i = 0; i < p.dim(); ++i) {
            double s = b[i];
            for (std::size_t j = 0; j < p.dim(); ++j)
                s += a[i][j] * p[j];
            out[i] = s;
        }
        return Point(out);
    }
};

AffineMap random_positive_map(std::mt19937_64& rng, std::size_t d)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    while (true) {
        AffineMap m{std::vector<std::vector<int>>(d, std::vector<int>(d)), std::vector<int>(d)};
        std::vector<std::vector<mpq_class>> q(d, std::vector<mpq_class>(d));
        for (std::size_t i = 0; i < d; ++i) {
            m.b[i] = coef(rng);
            for (std::size_t j = 0; j < d; ++j)
                q[i][j] = m.a[i][j] = coef(rng);
        }
        if (oracle::sign(oracle::det(q)) > 0)
            return m;
    }
}

} // namespace

TEST_CASE("orientation of basic triangles")
{
    CHECK(orientation(std::vector<Point>{{0, 0}, {1, 0}, {0, 1}}) == Orientation::Positive);
    CHECK(orientation(std::vector<Point>{{0, 0}, {1, 1}, {2, 2}}) == Orientation::Zero);
    CHECK(orientation(std::vector<Point>{{0, 0}, {0, 1}, {1, 0}}) == Orientation::Negative);
    CHECK(orientation(std::vector<Point>{{0}, {3}}) == Orientation::Positive);
    CHECK(orientation(std::vector<Point>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})
          == Orientation::Positive);
}

TEST_CASE("orientation rejects malformed input")
{
    CHECK_THROWS_AS(orientation(std::vector<Point>{{0, 0}, {1, 0}}), InputError);
    CHECK_THROWS_AS(orientation(std::vector<Point>{{0, 0}, {1, 0}, {0, 1, 2}}), InputError);
    CHECK_THROWS_AS(Point({0.0, std::nan("")}), InputError);
    CHECK_THROWS_AS(Point({INFINITY}), InputError);
}

TEST_CASE("orientation matches the rational oracle on near-degenerate inputs")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> ulps(-3, 3);
    for (std::size_t d = 1; d <= 6; ++d) {
        for (int trial = 0; trial < 300; ++trial) {
            // Points on a random hyperplane through d base points, nudged by a few ulps.
            std::vector<Point> pts;
            std::vector<std::vector<double>> base(d, std::vector<double>(d));
            for (auto& b : base)
                for (auto& x : b)
                    x = u(rng);
            for (std::size_t i = 0; i < d; ++i)
                pts.emplace_back(base[i]);
            std::vector<double> combo(d, 0.0);
            double wsum = 0.0;
            for (std::size_t i = 0; i + 1 < d; ++i) {
                const double w = u(rng);
                wsum += w;
                for (std::size_t j = 0; j < d; ++j)
                    combo[j] += w * base[i][j];
            }
            for (std::size_t j = 0; j < d; ++j) {
                combo[j] += (1.0 - wsum) * base[d - 1][j];
                for (int k = ulps(rng); k != 0; k += (k > 0 ? -1 : 1))
                    combo[j] = std::nextafter(combo[j], k > 0 ? 2.0 : -2.0);
            }
            pts.emplace_back(combo);
            const int expected = oracle::orientation(pts);
            REQUIRE(to_int(orientation(pts)) == expected);
            const auto rows = rows_of(pts);
            REQUIRE(to_int(detail::orientation_bigint(rows)) == expected);
            REQUIRE(to_int(detail::orientation_expansion(rows)) == expected);
            bool certified = false;
            const auto filtered = detail::orientation_filtered(rows, certified);
            if (certified)
                REQUIRE(to_int(filtered) == expected);
        }
    }
}

TEST_CASE("orientation is exact across extreme coordinate ranges")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> expo(-300, 300);
    for (std::size_t d = 2; d <= 4; ++d) {
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Point> pts;
            for (std::size_t i = 0; i <= d; ++i) {
                std::vector<double> c(d);
                for (auto& x : c)
                    x = std::ldexp(u(rng), expo(rng));
                pts.emplace_back(c);
            }
            if (trial % 2 == 0)
                pts.back() = pts.front(); // force an exact zero
            REQUIRE(to_int(orientation(pts)) == oracle::orientation(pts));
        }
    }
}

TEST_CASE("orientation antisymmetry under transposition")
{
    std::mt19937_64 rng(3);
    for (std::size_t d = 1; d <= 5; ++d) {
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Point> pts;
            for (std::size_t i = 0; i <= d; ++i)
                pts.push_back(oracle::grid_point(rng, d, 4)); // small grid: frequent zeros
            std::uniform_int_distribution<std::size_t> pick(0, d);
            const auto i = pick(rng), j = pick(rng);
            if (i == j)
                continue;
            auto swapped = pts;
            std::swap(swapped[i], swapped[j]);
            CHECK(orientation(swapped) == -orientation(pts));
        }
    }
}

TEST_CASE("orientation and containment are affine equivariant")
{
    std::mt19937_64 rng(5);
    for (std::size_t d = 1; d <= 4; ++d) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto map = random_positive_map(rng, d);
            std::vector<Point> pts, mapped;
            for (std::size_t i = 0; i <= d; ++i) {
                pts.push_back(oracle::grid_point(rng, d, 8));
                mapped.push_back(map(pts.back()));
            }
            const Point q = oracle::grid_point(rng, d, 8);
            CHECK(orientation(mapped) == orientation(pts));
            CHECK(contains(Simplex(mapped), map(q)) == contains(Simplex(pts), q));
        }
    }
}

TEST_CASE("closed containment examples")
{
    const Simplex tri({{0, 0}, {2, 0}, {0, 2}});
    CHECK(contains(tri, Point{0.5, 0.5}));
    CHECK(contains(tri, Point{1, 1}));
    CHECK_FALSE(contains(tri, Point{2, 2}));
    CHECK(contains(tri, Point{0, 0}));
    CHECK(contains(tri, Point{0, 1}));
    CHECK_FALSE(contains(tri, Point{-1e-300, 1}));
    CHECK_THROWS_AS(contains(tri, Point{1, 1, 1}), InputError);
    CHECK_THROWS_AS(Simplex({{0, 0}, {1, 0}}), InputError);

    const Simplex seg({{0}, {2}});
    CHECK(contains(seg, Point{2}));
    CHECK_FALSE(contains(seg, Point{2.5}));
}

TEST_CASE("degenerate simplices use their closed hull")
{
    const Simplex flat({{0, 0}, {1, 1}, {3, 3}});
    CHECK(contains(flat, Point{2, 2}));
    CHECK(contains(flat, Point{3, 3}));
    CHECK_FALSE(contains(flat, Point{4, 4}));
    CHECK_FALSE(contains(flat, Point{1, 1.5}));

    const Simplex doubled({{0, 0}, {1, 2}, {1, 2}});
    CHECK(contains(doubled, Point{0.5, 1}));
    CHECK_FALSE(contains(doubled, Point{0.5, 0.5}));

    const Simplex point({{1, 2}, {1, 2}, {1, 2}});
    CHECK(contains(point, Point{1, 2}));
    CHECK_FALSE(contains(point, Point{1, 2.0000001}));

    // A flat tetrahedron spanning a triangle in the plane z = x.
    const Simplex flat3({{0, 0, 0}, {2, 0, 2}, {0, 2, 0}, {1, 1, 1}});
    CHECK(contains(flat3, Point{0.5, 0.5, 0.5}));
    CHECK_FALSE(contains(flat3, Point{0.5, 0.5, 0.25}));
    CHECK_FALSE(contains(flat3, Point{2, 2, 2}));
}

TEST_CASE("strict general position rejects degeneracies")
{
    const Simplex tri({{0, 0}, {2, 0}, {0, 2}});
    CHECK(contains(tri, Point{0.5, 0.5}, DegeneracyPolicy::RejectDegenerate));
    CHECK_FALSE(contains(tri, Point{3, 3}, DegeneracyPolicy::RejectDegenerate));
    CHECK_THROWS_AS(contains(tri, Point{1, 1}, DegeneracyPolicy::RejectDegenerate), DegeneracyError);
    CHECK_THROWS_AS(contains(Simplex({{0, 0}, {1, 1}, {2, 2}}), Point{1, 1},
                             DegeneracyPolicy::RejectDegenerate),
                    DegeneracyError);
}

TEST_CASE("containment agrees with the oracle and is permutation invariant")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 3000; ++trial) {
        std::vector<Point> v;
        for (int i = 0; i < 3; ++i)
            v.push_back(oracle::grid_point(rng, 2, 3));
        const Point q = oracle::grid_point(rng, 2, 3);
        const bool expected = oracle::triangle_contains(oracle::lift(v[0]), oracle::lift(v[1]),
                                                        oracle::lift(v[2]), oracle::lift(q));
        REQUIRE(contains(Simplex(v), q) == expected);
        auto perm = v;
        std::sort(perm.begin(), perm.end());
        do {
            REQUIRE(contains(Simplex(perm), q) == expected);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Point> v;
        std::vector<oracle::QPoint> qv;
        for (int i = 0; i < 4; ++i) {
            v.push_back(oracle::grid_point(rng, 3, 16));
            qv.push_back(oracle::lift(v.back()));
        }
        if (oracle::orientation(qv) == 0)
            continue;
        const Point q = oracle::grid_point(rng, 3, 16);
        REQUIRE(contains(Simplex(v), q) == oracle::simplex_contains(qv, oracle::lift(q)));
    }
}
