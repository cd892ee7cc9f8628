#include "sdepth/geom/expansion.hpp"

#include <cmath>

namespace sdepth::geom {
namespace {

inline void two_sum(double a, double b, double& x, double& y)
{
    x = a + b;
    const double bv = x - a;
    const double av = x - bv;
    y = (a - av) + (b - bv);
}

inline void fast_two_sum(double a, double b, double& x, double& y)
{
    x = a + b;
    y = b - (x - a);
}

inline void two_product(double a, double b, double& x, double& y)
{
    x = a * b;
    y = std::fma(a, b, -x);
}

} // namespace

Expansion::Expansion(double value)
{
    if (value != 0.0)
        components_.push_back(value);
}

Expansion Expansion::product(double a, double b)
{
    Expansion out;
    double x, y;
    two_product(a, b, x, y);
    if (y != 0.0)
        out.components_.push_back(y);
    if (x != 0.0)
        out.components_.push_back(x);
    return out;
}

// grow_expansion_zeroelim
Expansion Expansion::grow(double b) const
{
    Expansion out;
    out.components_.reserve(components_.size() + 1);
    double q = b;
    for (double e : components_) {
        double sum, err;
        two_sum(q, e, sum, err);
        q = sum;
        if (err != 0.0)
            out.components_.push_back(err);
    }
    if (q != 0.0)
        out.components_.push_back(q);
    return out;
}

Expansion Expansion::operator+(const Expansion& other) const
{
    const Expansion& small = components_.size() < other.components_.size() ? *this : other;
    Expansion out = components_.size() < other.components_.size() ? other : *this;
    for (double c : small.components_)
        out = out.grow(c);
    return out;
}

Expansion Expansion::operator-() const
{
    Expansion out = *this;
    for (double& c : out.components_)
        c = -c;
    return out;
}

Expansion Expansion::operator-(const Expansion& other) const { return *this + (-other); }

// scale_expansion_zeroelim
Expansion Expansion::operator*(double b) const
{
    Expansion out;
    if (components_.empty() || b == 0.0)
        return out;
    out.components_.reserve(2 * components_.size());
    double q, hh;
    two_product(components_[0], b, q, hh);
    if (hh != 0.0)
        out.components_.push_back(hh);
    for (std::size_t i = 1; i < components_.size(); ++i) {
        double p1, p0, sum;
        two_product(components_[i], b, p1, p0);
        two_sum(q, p0, sum, hh);
        if (hh != 0.0)
            out.components_.push_back(hh);
        fast_two_sum(p1, sum, q, hh);
        if (hh != 0.0)
            out.components_.push_back(hh);
    }
    if (q != 0.0)
        out.components_.push_back(q);
    return out;
}

Expansion Expansion::operator*(const Expansion& other) const
{
    Expansion out;
    for (double c : other.components_)
        out = out + (*this * c);
    return out;
}

int Expansion::sign() const noexcept
{
    if (components_.empty())
        return 0;
    return components_.back() > 0.0 ? 1 : -1;
}

double Expansion::estimate() const noexcept
{
    double s = 0.0;
    for (double c : components_)
        s += c;
    return s;
}

} // namespace sdepth::geom
