#include "sdepth/geom/point.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "sdepth/errors.hpp"

namespace sdepth::geom {

Point::Point(std::vector<double> coords) : coords_(std::move(coords))
{
    if (coords_.empty())
        throw InputError("point must have positive dimension");
    for (double x : coords_)
        if (!std::isfinite(x))
            throw InputError("point coordinate is not finite");
}

std::weak_ordering operator<=>(const Point& a, const Point& b)
{
    const auto n = std::min(a.dim(), b.dim());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] < b[i])
            return std::weak_ordering::less;
        if (a[i] > b[i])
            return std::weak_ordering::greater;
    }
    return a.dim() <=> b.dim();
}

std::string to_string(const Point& p)
{
    std::string out = "(";
    char buf[32];
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i)
            out += ", ";
        auto res = std::to_chars(buf, buf + sizeof buf, p[i]);
        out.append(buf, res.ptr);
    }
    return out + ")";
}

void require_dim(std::span<const Point> points, std::size_t dim, const char* what)
{
    for (const auto& p : points)
        if (p.dim() != dim)
            throw InputError(std::string(what) + ": dimension mismatch (expected "
                             + std::to_string(dim) + ", got " + std::to_string(p.dim()) + ")");
}

} // namespace sdepth::geom
