#include "sdepth/geom/simplex.hpp"

#include <algorithm>
#include <string>

#include "sdepth/errors.hpp"

namespace sdepth::geom {
namespace {

using Rows = std::vector<std::vector<double>>;

std::vector<Coords> views(const Rows& rows)
{
    return {rows.begin(), rows.end()};
}

Rows project(std::span<const Coords> points, std::span<const std::size_t> cols)
{
    Rows out(points.size(), std::vector<double>(cols.size()));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t c = 0; c < cols.size(); ++c)
            out[i][c] = points[i][cols[c]];
    return out;
}

// Barycentric sign test of q against a full-dimensional simplex with orientation s0 != Zero.
bool barycentric_inside(std::vector<Coords> rows, Coords q, Orientation s0, DegeneracyPolicy policy)
{
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Coords saved = rows[i];
        rows[i] = q;
        const Orientation si = orientation(std::span<const Coords>(rows));
        rows[i] = saved;
        if (si == -s0)
            return false;
        if (si == Orientation::Zero && policy == DegeneracyPolicy::RejectDegenerate)
            throw DegeneracyError("query point lies on a simplex boundary");
    }
    return true;
}

// Finds columns of size k on which the k+1 points project to a nondegenerate k-simplex.
bool find_spanning_columns(std::span<const Coords> points, std::size_t d, std::size_t k,
                           std::vector<std::size_t>& cols, Orientation& s0)
{
    cols.resize(k);
    for (std::size_t i = 0; i < k; ++i)
        cols[i] = i;
    while (true) {
        const Rows proj = project(points, cols);
        s0 = orientation(std::span<const Coords>(views(proj)));
        if (s0 != Orientation::Zero)
            return true;
        // next combination
        std::size_t i = k;
        while (i > 0 && cols[i - 1] == d - k + i - 1)
            --i;
        if (i == 0)
            return false;
        ++cols[i - 1];
        for (std::size_t j = i; j < k; ++j)
            cols[j] = cols[j - 1] + 1;
    }
}

} // namespace

Simplex::Simplex(std::vector<Point> vertices) : vertices_(std::move(vertices))
{
    if (vertices_.empty())
        throw InputError("simplex needs vertices");
    const std::size_t d = vertices_.front().dim();
    if (vertices_.size() != d + 1)
        throw InputError("simplex in R^" + std::to_string(d) + " needs " + std::to_string(d + 1)
                         + " vertices, got " + std::to_string(vertices_.size()));
    require_dim(vertices_, d, "simplex");
}

bool affinely_independent(std::span<const Coords> points)
{
    if (points.empty())
        return false;
    const std::size_t d = points.front().size();
    const std::size_t k = points.size() - 1;
    if (k > d)
        return false;
    if (k == 0)
        return true;
    std::vector<std::size_t> cols;
    Orientation s0;
    return find_spanning_columns(points, d, k, cols, s0);
}

bool hull_contains(std::span<const Coords> vertices, Coords q)
{
    const std::size_t d = q.size();
    const std::size_t m = vertices.size();
    if (m == 0)
        return false;
    if (m == 1) {
        for (std::size_t i = 0; i < d; ++i)
            if (vertices[0][i] != q[i])
                return false;
        return true;
    }

    std::vector<std::size_t> cols;
    Orientation s0;
    if (m <= d + 1 && find_spanning_columns(vertices, d, m - 1, cols, s0)) {
        // Affinely independent: q must lie in the affine hull, then inside the projected simplex.
        std::vector<Coords> with_q(vertices.begin(), vertices.end());
        with_q.push_back(q);
        std::vector<std::size_t> lifted = cols;
        lifted.push_back(0);
        for (std::size_t j = 0; j < d; ++j) {
            if (std::find(cols.begin(), cols.end(), j) != cols.end())
                continue;
            lifted.back() = j;
            const Rows proj = project(with_q, lifted);
            if (orientation(std::span<const Coords>(views(proj))) != Orientation::Zero)
                return false;
        }
        const Rows proj = project(vertices, cols);
        std::vector<double> q_proj(cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            q_proj[c] = q[cols[c]];
        return barycentric_inside(views(proj), q_proj, s0, DegeneracyPolicy::ClosedHull);
    }

    // Affinely dependent: the hull is the union of the hulls of the facets.
    std::vector<Coords> facet(vertices.begin() + 1, vertices.end());
    for (std::size_t drop = 0; drop < m; ++drop) {
        if (drop > 0)
            facet[drop - 1] = vertices[drop - 1];
        if (hull_contains(facet, q))
            return true;
    }
    return false;
}

bool contains(std::span<const Coords> vertices, Coords q, DegeneracyPolicy policy)
{
    if (vertices.size() == 3 && q.size() == 2) {
        const double* a = vertices[0].data();
        const double* b = vertices[1].data();
        const double* c = vertices[2].data();
        const Orientation s0 = orient2d(a, b, c);
        if (s0 != Orientation::Zero) {
            const Orientation s1 = orient2d(q.data(), b, c);
            if (s1 == -s0)
                return false;
            const Orientation s2 = orient2d(a, q.data(), c);
            if (s2 == -s0)
                return false;
            const Orientation s3 = orient2d(a, b, q.data());
            if (s3 == -s0)
                return false;
            if (policy == DegeneracyPolicy::RejectDegenerate
                && (s1 == Orientation::Zero || s2 == Orientation::Zero || s3 == Orientation::Zero))
                throw DegeneracyError("query point lies on a simplex boundary");
            return true;
        }
    } else {
        const Orientation s0 = orientation(vertices);
        if (s0 != Orientation::Zero)
            return barycentric_inside({vertices.begin(), vertices.end()}, q, s0, policy);
    }
    if (policy == DegeneracyPolicy::RejectDegenerate)
        throw DegeneracyError("simplex vertices are affinely dependent");
    return hull_contains(vertices, q);
}

bool contains(const Simplex& s, const Point& q, DegeneracyPolicy policy)
{
    if (q.dim() != s.dim())
        throw InputError("contains: query dimension " + std::to_string(q.dim())
                         + " does not match simplex dimension " + std::to_string(s.dim()));
    std::vector<Coords> rows;
    rows.reserve(s.vertices().size());
    for (const auto& v : s.vertices())
        rows.push_back(v.coords());
    return contains(rows, q.coords(), policy);
}

} // namespace sdepth::geom
