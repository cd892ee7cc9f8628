#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sdepth::geom {

using Coords = std::span<const double>;

// A location in R^d with finite binary64 coordinates.
class Point {
public:
    explicit Point(std::vector<double> coords);
    Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

    std::size_t dim() const noexcept { return coords_.size(); }
    Coords coords() const noexcept { return coords_; }
    const double* data() const noexcept { return coords_.data(); }
    double operator[](std::size_t i) const { return coords_[i]; }

    friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
    // Lexicographic; used for deterministic tie-breaks.
    friend std::weak_ordering operator<=>(const Point& a, const Point& b);

private:
    std::vector<double> coords_;
};

std::string to_string(const Point& p);

// Throws InputError unless every point has dimension `dim`.
void require_dim(std::span<const Point> points, std::size_t dim, const char* what);

} // namespace sdepth::geom
