#pragma once

#include <span>

#include "sdepth/geom/expansion.hpp"
#include "sdepth/geom/point.hpp"

namespace sdepth::geom {

enum class Orientation : int { Negative = -1, Zero = 0, Positive = 1 };

inline int to_int(Orientation o) noexcept { return static_cast<int>(o); }
inline Orientation from_int(int s) noexcept
{
    return s > 0 ? Orientation::Positive : (s < 0 ? Orientation::Negative : Orientation::Zero);
}
inline Orientation operator-(Orientation o) noexcept { return from_int(-to_int(o)); }

// Exact sign of det[p1 - p0, ..., pd - p0] for d+1 points in R^d.
// Validates that there are d+1 points of equal dimension d.
Orientation orientation(std::span<const Point> points);

// Unchecked variant on raw coordinate rows: rows.size() == d + 1, each row of length d.
Orientation orientation(std::span<const Coords> rows);

Orientation orient1d(double a, double b) noexcept;
Orientation orient2d(const double* a, const double* b, const double* c);
Orientation orient3d(const double* a, const double* b, const double* c, const double* d);

// Floating-point determinant with a certified absolute error bound: |exact - value| <= error.
struct Estimate {
    double value;
    double error;
};
Estimate orient2d_estimate(const double* a, const double* b, const double* c) noexcept;

namespace detail {

// Both routes ignore the floating-point filter. The expansion route requires the coordinate
// range guard in predicates.cpp; orientation() picks the right one automatically.
Orientation orientation_expansion(std::span<const Coords> rows);
Orientation orientation_bigint(std::span<const Coords> rows);
Orientation orientation_exact(std::span<const Coords> rows);

// Floating-point filter only; Zero means "not certified".
Orientation orientation_filtered(std::span<const Coords> rows, bool& certified);

} // namespace detail

} // namespace sdepth::geom
