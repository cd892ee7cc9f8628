#include "sdepth/geom/predicates.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sdepth/errors.hpp"

namespace sdepth::geom {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2; // 2^-53
constexpr double kCcwErrBoundA = (3.0 + 16.0 * kEps) * kEps;
constexpr double kO3dErrBoundA = (7.0 + 56.0 * kEps) * kEps;
// Below this magnitude an underflowed product could hide inside the filter bound.
const double kFilterFloor = std::ldexp(1.0, -960);
constexpr std::size_t kMaxDim = 20;

int sign_of(double v) noexcept { return (v > 0.0) - (v < 0.0); }

// Entry (k, j) of the (d+1)x(d+1) matrix whose row k is [1, rows[k]].
inline double entry(std::span<const Coords> rows, std::size_t k, std::size_t j)
{
    return j == 0 ? 1.0 : rows[k][j - 1];
}

// Laplace expansion along successive rows, memoized over column subsets: minor[mask] is the
// determinant of rows 0..popcount(mask)-1 restricted to the columns in mask.
template <typename T, bool Permanent = false, typename Mul>
T ones_determinant(std::span<const Coords> rows, Mul mul)
{
    const std::size_t n = rows.size();
    std::vector<T> minor(std::size_t{1} << n);
    for (std::size_t mask = 1; mask < minor.size(); ++mask) {
        const int count = std::popcount(mask);
        if (count == 1) {
            minor[mask] = mul(T{1.0}, entry(rows, 0, std::countr_zero(mask)));
            continue;
        }
        const std::size_t k = static_cast<std::size_t>(count - 1);
        T acc{};
        std::size_t idx = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (std::size_t{1} << j)))
                continue;
            const double a = entry(rows, k, j);
            if (a != 0.0) {
                T term = mul(minor[mask ^ (std::size_t{1} << j)], a);
                if (!Permanent && (k + idx) % 2 == 1)
                    acc = acc - term;
                else
                    acc = acc + term;
            }
            ++idx;
        }
        minor[mask] = acc;
    }
    return minor.back();
}

bool expansion_range_ok(std::span<const Coords> rows, int& shift)
{
    const std::size_t d = rows.size() - 1;
    double max_abs = 0.0;
    for (auto r : rows)
        for (double x : r)
            max_abs = std::max(max_abs, std::fabs(x));
    if (max_abs == 0.0) {
        shift = 0;
        return true;
    }
    shift = -std::ilogb(max_abs);
    // Every intermediate value is a multiple of the product of the coordinates' lowest set bits;
    // keep that grid above the subnormal range.
    const double min_exp = 52.0 - 1000.0 / static_cast<double>(d);
    for (auto r : rows)
        for (double x : r)
            if (x != 0.0 && std::ilogb(x) + shift < min_exp)
                return false;
    return true;
}

using BigInt = boost::multiprecision::cpp_int;

} // namespace

Orientation orient1d(double a, double b) noexcept
{
    return from_int((b > a) - (b < a));
}

Estimate orient2d_estimate(const double* a, const double* b, const double* c) noexcept
{
    const double detleft = (a[0] - c[0]) * (b[1] - c[1]);
    const double detright = (a[1] - c[1]) * (b[0] - c[0]);
    const double detsum = std::fabs(detleft) + std::fabs(detright);
    return {detleft - detright, kCcwErrBoundA * detsum + std::ldexp(1.0, -1000)};
}

Orientation orient2d(const double* a, const double* b, const double* c)
{
    const double detleft = (a[0] - c[0]) * (b[1] - c[1]);
    const double detright = (a[1] - c[1]) * (b[0] - c[0]);
    const double det = detleft - detright;
    const double detsum = std::fabs(detleft) + std::fabs(detright);
    if (detsum > kFilterFloor && std::fabs(det) > kCcwErrBoundA * detsum)
        return from_int(sign_of(det));
    const std::array<Coords, 3> rows{Coords(a, 2), Coords(b, 2), Coords(c, 2)};
    return detail::orientation_exact(rows);
}

Orientation orient3d(const double* a, const double* b, const double* c, const double* d)
{
    const double ux = b[0] - a[0], uy = b[1] - a[1], uz = b[2] - a[2];
    const double vx = c[0] - a[0], vy = c[1] - a[1], vz = c[2] - a[2];
    const double wx = d[0] - a[0], wy = d[1] - a[1], wz = d[2] - a[2];

    const double vywz = vy * wz, vzwy = vz * wy;
    const double vzwx = vz * wx, vxwz = vx * wz;
    const double vxwy = vx * wy, vywx = vy * wx;
    const double det = ux * (vywz - vzwy) + uy * (vzwx - vxwz) + uz * (vxwy - vywx);
    const double permanent = (std::fabs(vywz) + std::fabs(vzwy)) * std::fabs(ux)
                           + (std::fabs(vzwx) + std::fabs(vxwz)) * std::fabs(uy)
                           + (std::fabs(vxwy) + std::fabs(vywx)) * std::fabs(uz);
    if (permanent > kFilterFloor && std::fabs(det) > kO3dErrBoundA * permanent)
        return from_int(sign_of(det));
    const std::array<Coords, 4> rows{Coords(a, 3), Coords(b, 3), Coords(c, 3), Coords(d, 3)};
    return detail::orientation_exact(rows);
}

Orientation orientation(std::span<const Coords> rows)
{
    switch (rows.size()) {
    case 2: return orient1d(rows[0][0], rows[1][0]);
    case 3: return orient2d(rows[0].data(), rows[1].data(), rows[2].data());
    case 4: return orient3d(rows[0].data(), rows[1].data(), rows[2].data(), rows[3].data());
    default: break;
    }
    bool certified = false;
    const Orientation s = detail::orientation_filtered(rows, certified);
    return certified ? s : detail::orientation_exact(rows);
}

Orientation orientation(std::span<const Point> points)
{
    if (points.empty())
        throw InputError("orientation: no points");
    const std::size_t d = points.front().dim();
    if (points.size() != d + 1)
        throw InputError("orientation: expected " + std::to_string(d + 1) + " points in R^"
                         + std::to_string(d) + ", got " + std::to_string(points.size()));
    if (d > kMaxDim)
        throw InputError("orientation: dimension above " + std::to_string(kMaxDim));
    require_dim(points, d, "orientation");
    std::vector<Coords> rows;
    rows.reserve(points.size());
    for (const auto& p : points)
        rows.push_back(p.coords());
    return orientation(rows);
}

namespace detail {

Orientation orientation_filtered(std::span<const Coords> rows, bool& certified)
{
    const std::size_t n = rows.size();
    const double det = ones_determinant<double>(rows, [](double m, double a) { return m * a; });
    // Same recursion on absolute values bounds every term of the expansion.
    std::vector<std::vector<double>> abs_storage(n);
    std::vector<Coords> abs_rows(n);
    for (std::size_t k = 0; k < n; ++k) {
        abs_storage[k].reserve(rows[k].size());
        for (double x : rows[k])
            abs_storage[k].push_back(std::fabs(x));
        abs_rows[k] = abs_storage[k];
    }
    const double permanent = ones_determinant<double, true>(
        abs_rows, [](double m, double a) { return std::fabs(m) * a; });
    // Each term passes through at most n multiplications and n(n-1)/2 additions.
    const double rounding_steps = static_cast<double>(n + n * (n - 1) / 2);
    const double gamma = rounding_steps * kEps / (1.0 - rounding_steps * kEps);
    const double bound = 2.0 * gamma * permanent;
    certified = permanent > kFilterFloor && std::fabs(det) > bound;
    return certified ? from_int(sign_of(det)) : Orientation::Zero;
}

Orientation orientation_expansion(std::span<const Coords> rows)
{
    int shift = 0;
    if (!expansion_range_ok(rows, shift))
        throw std::logic_error("orientation_expansion: coordinates outside the exact range");
    std::vector<std::vector<double>> scaled(rows.size());
    std::vector<Coords> scaled_rows(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        for (double x : rows[k])
            scaled[k].push_back(std::ldexp(x, shift));
        scaled_rows[k] = scaled[k];
    }
    const Expansion det = ones_determinant<Expansion>(
        scaled_rows, [](const Expansion& m, double a) { return m * a; });
    return from_int(det.sign());
}

Orientation orientation_bigint(std::span<const Coords> rows)
{
    const std::size_t n = rows.size();
    // Write every entry as m * 2^q with integer m; shift all to the smallest q.
    auto decompose = [](double x, std::int64_t& mant, int& q) {
        int e = 0;
        const double f = std::frexp(x, &e);
        mant = static_cast<std::int64_t>(std::ldexp(f, 53));
        q = e - 53;
    };
    int min_q = 0;
    for (auto r : rows)
        for (double x : r)
            if (x != 0.0) {
                std::int64_t m;
                int q;
                decompose(x, m, q);
                min_q = std::min(min_q, q);
            }

    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            const double x = entry(rows, k, j);
            if (x == 0.0)
                continue;
            std::int64_t m;
            int q;
            decompose(x, m, q);
            a[k][j] = BigInt(m) << (q - min_q);
        }
    }

    // Bareiss fraction-free elimination.
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0)
            ++pivot;
        if (pivot == n)
            return Orientation::Zero;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    const BigInt& det = a[n - 1][n - 1];
    return from_int(sign * (det > 0 ? 1 : (det < 0 ? -1 : 0)));
}

Orientation orientation_exact(std::span<const Coords> rows)
{
    int shift = 0;
    if (rows.size() <= 17 && expansion_range_ok(rows, shift))
        return orientation_expansion(rows);
    return orientation_bigint(rows);
}

} // namespace detail

} // namespace sdepth::geom
