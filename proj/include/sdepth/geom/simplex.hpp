#pragma once

#include <span>
#include <vector>

#include "sdepth/geom/point.hpp"
#include "sdepth/geom/predicates.hpp"

namespace sdepth::geom {

// d+1 points in R^d. Affinely dependent vertex sets are allowed.
class Simplex {
public:
    explicit Simplex(std::vector<Point> vertices);

    std::size_t dim() const noexcept { return vertices_.front().dim(); }
    std::span<const Point> vertices() const noexcept { return vertices_; }

private:
    std::vector<Point> vertices_;
};

enum class DegeneracyPolicy {
    ClosedHull,       // degenerate simplices count; boundaries belong to the simplex
    RejectDegenerate, // DegeneracyError on a flat simplex or a query on a boundary
};

// Closed convex-hull membership.
bool contains(const Simplex& s, const Point& q, DegeneracyPolicy policy = DegeneracyPolicy::ClosedHull);

// Unchecked core: vertices.size() == q.size() + 1.
bool contains(std::span<const Coords> vertices, Coords q,
              DegeneracyPolicy policy = DegeneracyPolicy::ClosedHull);

// Closed convex hull of an arbitrary set of at most d+1 points in R^d, resolved exactly by
// recursing onto facets and coordinate projections.
bool hull_contains(std::span<const Coords> vertices, Coords q);

// At most d+1 points in R^d that span a flat of dimension size()-1.
bool affinely_independent(std::span<const Coords> points);

} // namespace sdepth::geom
