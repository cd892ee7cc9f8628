#include "sdepth/selection/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "sdepth/depth/depth.hpp"
#include "sdepth/errors.hpp"
#include "sdepth/geom/predicates.hpp"
#include "sdepth/parallel.hpp"

namespace sdepth::selection {
namespace {

using BigRational = boost::multiprecision::cpp_rational;
using boost::multiprecision::cpp_int;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kUnit = std::numeric_limits<double>::epsilon();

BigRational exact(double x)
{
    if (x == 0.0)
        return 0;
    int e = 0;
    const double f = std::frexp(x, &e);
    cpp_int m = static_cast<std::int64_t>(std::ldexp(f, 53));
    e -= 53;
    if (e >= 0)
        return BigRational(m << e);
    return BigRational(m, cpp_int(1) << -e);
}

// orient(a, b, x) exactly.
BigRational exact_orient(const double* a, const double* b, const double* x)
{
    const BigRational ax = exact(a[0]), ay = exact(a[1]);
    return (exact(b[0]) - ax) * (exact(x[1]) - ay) - (exact(b[1]) - ay) * (exact(x[0]) - ax);
}

// A point on the sweep line L = p + t (q - p), given as L ∩ line(a, b).
struct Event {
    double lo, hi;
    const double* a;
    const double* b;
    std::int32_t line;  // arrangement line index, or -1
    std::int32_t point; // data point index, or -1
};

struct Sweep {
    const double* p;
    const double* q;

    void bracket(Event& e) const
    {
        const auto gp = geom::orient2d_estimate(e.a, e.b, p);
        const auto gq = geom::orient2d_estimate(e.a, e.b, q);
        const double den = gp.value - gq.value;
        const double den_err = gp.error + gq.error + std::abs(den) * kUnit;
        if (!(std::abs(den) > den_err)) {
            e.lo = -kInf;
            e.hi = kInf;
            return;
        }
        const double n0 = gp.value - gp.error, n1 = gp.value + gp.error;
        const double d0 = den - den_err, d1 = den + den_err;
        const double c[4] = {n0 / d0, n0 / d1, n1 / d0, n1 / d1};
        double lo = *std::min_element(c, c + 4), hi = *std::max_element(c, c + 4);
        for (int k = 0; k < 2; ++k) {
            lo = std::nextafter(lo, -kInf);
            hi = std::nextafter(hi, kInf);
        }
        e.lo = lo;
        e.hi = hi;
    }

    BigRational parameter(const Event& e) const
    {
        const BigRational gp = exact_orient(e.a, e.b, p);
        const BigRational gq = exact_orient(e.a, e.b, q);
        return gp / (gp - gq);
    }

    int compare(const Event& x, const Event& y) const
    {
        if (x.hi < y.lo)
            return -1;
        if (y.hi < x.lo)
            return 1;
        // Same data point location, e.g. from coinciding classes.
        if (x.point >= 0 && y.point >= 0 && x.a[0] == y.a[0] && x.a[1] == y.a[1])
            return 0;
        const BigRational tx = parameter(x), ty = parameter(y);
        return tx < ty ? -1 : (ty < tx ? 1 : 0);
    }

    geom::Point locate(const Event& e, std::span<const double* const> pts) const
    {
        if (e.point >= 0)
            return geom::Point{pts[e.point][0], pts[e.point][1]};
        const double gp = geom::orient2d_estimate(e.a, e.b, p).value;
        const double gq = geom::orient2d_estimate(e.a, e.b, q).value;
        const double t = gp / (gp - gq);
        return geom::Point{p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])};
    }
};

struct LineResult {
    std::uint64_t containing = 0;
    std::uint64_t events = 0;
    Event best{};
};

struct Flat {
    std::vector<const double*> pts;
    std::vector<std::size_t> offset; // class c occupies [offset[c], offset[c+1])
    std::vector<std::pair<std::int32_t, std::int32_t>> lines;
    std::vector<std::int32_t> pair_line; // n*n, -1 for monochromatic or coincident pairs
    std::size_t n = 0;
};

Flat flatten(const depth::ColoredConfiguration& cfg)
{
    Flat f;
    f.offset.push_back(0);
    for (const auto& cls : cfg.classes()) {
        for (const auto& x : cls)
            f.pts.push_back(x.data());
        f.offset.push_back(f.pts.size());
    }
    f.n = f.pts.size();
    f.pair_line.assign(f.n * f.n, -1);

    // Identical lines from duplicated coordinates share one index, so they never tie in a sort.
    using Key = std::pair<std::pair<double, double>, std::pair<double, double>>;
    std::map<Key, std::int32_t> seen;
    for (std::size_t c = 0; c < 3; ++c) {
        for (std::size_t e = c + 1; e < 3; ++e) {
            for (std::size_t u = f.offset[c]; u < f.offset[c + 1]; ++u) {
                for (std::size_t v = f.offset[e]; v < f.offset[e + 1]; ++v) {
                    std::pair<double, double> a{f.pts[u][0], f.pts[u][1]}, b{f.pts[v][0], f.pts[v][1]};
                    if (a == b)
                        continue;
                    if (b < a)
                        std::swap(a, b);
                    auto [it, fresh] = seen.try_emplace(Key{a, b}, static_cast<std::int32_t>(f.lines.size()));
                    if (fresh)
                        f.lines.emplace_back(static_cast<std::int32_t>(u), static_cast<std::int32_t>(v));
                    f.pair_line[u * f.n + v] = f.pair_line[v * f.n + u] = it->second;
                }
            }
        }
    }
    return f;
}

class LineSweeper {
public:
    explicit LineSweeper(const Flat& f)
        : f_(f), sign_(f.n), rank_line_(f.lines.size(), -1), rank_point_(f.n, -1)
    {
    }

    // Returns false when every point lies on the line.
    bool run(std::size_t l, LineResult& out)
    {
        const auto [pi, qi] = f_.lines[l];
        const Sweep sweep{f_.pts[pi], f_.pts[qi]};
        const double* helper = nullptr;
        for (std::size_t x = 0; x < f_.n; ++x) {
            sign_[x] = static_cast<std::int8_t>(geom::to_int(geom::orient2d(sweep.p, sweep.q, f_.pts[x])));
            if (sign_[x] != 0 && helper == nullptr)
                helper = f_.pts[x];
        }
        if (helper == nullptr)
            return false;

        events_.clear();
        for (std::size_t m = 0; m < f_.lines.size(); ++m) {
            const auto [a, b] = f_.lines[m];
            if (sign_[a] * sign_[b] < 0)
                events_.push_back({0, 0, f_.pts[a], f_.pts[b], static_cast<std::int32_t>(m), -1});
        }
        for (std::size_t x = 0; x < f_.n; ++x)
            if (sign_[x] == 0)
                events_.push_back({0, 0, f_.pts[x], helper, -1, static_cast<std::int32_t>(x)});
        for (auto& e : events_)
            sweep.bracket(e);
        std::sort(events_.begin(), events_.end(), [&](const Event& x, const Event& y) {
            if (x.hi < y.lo)
                return true;
            if (y.hi < x.lo)
                return false;
            return sweep.compare(x, y) < 0;
        });

        std::int32_t rank = 0;
        for (std::size_t i = 0; i < events_.size(); ++i) {
            if (i > 0 && sweep.compare(events_[i - 1], events_[i]) != 0)
                ++rank;
            if (events_[i].line >= 0)
                rank_line_[events_[i].line] = rank;
            else
                rank_point_[events_[i].point] = rank;
        }
        const std::size_t ranks = events_.empty() ? 0 : static_cast<std::size_t>(rank) + 1;
        diff_.assign(ranks + 1, 0);

        const auto& off = f_.offset;
        auto crossing_rank = [&](std::size_t x, std::size_t y, std::int32_t& lo, std::int32_t& hi) {
            if (sign_[x] * sign_[y] < 0) {
                const std::int32_t r = rank_line_[f_.pair_line[x * f_.n + y]];
                lo = std::min(lo, r);
                hi = std::max(hi, r);
            }
        };
        auto vertex_rank = [&](std::size_t x, std::int32_t& lo, std::int32_t& hi) {
            if (sign_[x] == 0) {
                lo = std::min(lo, rank_point_[x]);
                hi = std::max(hi, rank_point_[x]);
            }
        };
        for (std::size_t a = off[0]; a < off[1]; ++a) {
            for (std::size_t b = off[1]; b < off[2]; ++b) {
                std::int32_t lo0 = std::numeric_limits<std::int32_t>::max(), hi0 = -1;
                vertex_rank(a, lo0, hi0);
                vertex_rank(b, lo0, hi0);
                crossing_rank(a, b, lo0, hi0);
                const int same = sign_[a] == sign_[b] ? sign_[a] : 0;
                for (std::size_t c = off[2]; c < off[3]; ++c) {
                    if (same != 0 && sign_[c] == same)
                        continue; // entirely on one side
                    std::int32_t lo = lo0, hi = hi0;
                    vertex_rank(c, lo, hi);
                    crossing_rank(a, c, lo, hi);
                    crossing_rank(b, c, lo, hi);
                    if (hi >= 0) {
                        ++diff_[lo];
                        --diff_[hi + 1];
                    }
                }
            }
        }

        out.events = events_.size();
        std::int64_t running = 0;
        std::int32_t r = -1;
        for (std::size_t i = 0; i < events_.size(); ++i) {
            const bool fresh = i == 0 || (events_[i].line >= 0 ? rank_line_[events_[i].line]
                                                                 : rank_point_[events_[i].point]) != r;
            if (!fresh)
                continue;
            ++r;
            running += diff_[r];
            if (static_cast<std::uint64_t>(running) > out.containing || i == 0) {
                out.containing = static_cast<std::uint64_t>(running);
                out.best = events_[i];
            }
        }
        return true;
    }

private:
    const Flat& f_;
    std::vector<std::int8_t> sign_;
    std::vector<std::int32_t> rank_line_;
    std::vector<std::int32_t> rank_point_;
    std::vector<Event> events_;
    std::vector<std::int64_t> diff_;
};

} // namespace

ArrangementSearch planar_arrangement_search(const depth::ColoredConfiguration& cfg, std::size_t keep,
                                            unsigned threads)
{
    if (cfg.dim() != 2)
        throw InputError("arrangement search needs dimension 2");
    keep = std::max<std::size_t>(keep, 1);
    const Flat f = flatten(cfg);

    ArrangementSearch out;
    out.total = cfg.rainbow_count();
    out.lines = f.lines.size();

    std::vector<LineResult> results(f.lines.size());
    bool collinear = f.lines.empty();
    if (!collinear) {
        LineSweeper probe(f);
        collinear = !probe.run(0, results[0]);
    }

    if (collinear) {
        // Every closed rainbow triangle is a segment or a point on one line (or all points
        // coincide): depth only changes at data points.
        const depth::ColorfulDepthEvaluator eval(cfg);
        for (const auto& cls : cfg.classes()) {
            for (const auto& x : cls) {
                const auto rep = eval(x);
                ++out.vertices_visited;
                out.best.push_back({rep.containing, x});
            }
        }
    } else {
        parallel_chunks(f.lines.size() - 1, 32, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
            LineSweeper sweeper(f);
            for (std::size_t l = begin + 1; l < end + 1; ++l)
                sweeper.run(l, results[l]);
        });
        for (std::size_t l = 0; l < results.size(); ++l) {
            const auto& res = results[l];
            out.vertices_visited += res.events;
            const Sweep sweep{f.pts[f.lines[l].first], f.pts[f.lines[l].second]};
            out.best.push_back({res.containing, sweep.locate(res.best, f.pts)});
        }
    }

    std::sort(out.best.begin(), out.best.end(), [](const ArrangementVertex& x, const ArrangementVertex& y) {
        if (x.containing != y.containing)
            return x.containing > y.containing;
        return x.approx < y.approx;
    });
    out.max_containing = out.best.empty() ? 0 : out.best.front().containing;
    out.best.erase(std::unique(out.best.begin(), out.best.end(),
                               [](const ArrangementVertex& x, const ArrangementVertex& y) {
                                   return x.approx == y.approx;
                               }),
                   out.best.end());
    if (out.best.size() > keep)
        out.best.erase(out.best.begin() + static_cast<std::ptrdiff_t>(keep), out.best.end());
    return out;
}

} // namespace sdepth::selection
