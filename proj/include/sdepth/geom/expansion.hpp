#pragma once

#include <span>
#include <vector>

namespace sdepth::geom {

// Exact sum of binary64 components in Shewchuk's nonoverlapping form, stored in increasing
// magnitude with zeros eliminated. The empty expansion is zero. Arithmetic is exact as long as no
// product underflows; callers are responsible for keeping operands in range.
class Expansion {
public:
    Expansion() = default;
    explicit Expansion(double value);

    static Expansion product(double a, double b);

    Expansion operator+(const Expansion& other) const;
    Expansion operator-(const Expansion& other) const;
    Expansion operator-() const;
    Expansion operator*(double scale) const;
    Expansion operator*(const Expansion& other) const;

    int sign() const noexcept;
    double estimate() const noexcept;
    std::span<const double> components() const noexcept { return components_; }

private:
    Expansion grow(double b) const;

    std::vector<double> components_;
};

} // namespace sdepth::geom
