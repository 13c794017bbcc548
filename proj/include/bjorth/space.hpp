#pragma once

#include <cstddef>
#include <string>

#include "bjorth/vector.hpp"

namespace bjorth {

/// Unit-membership tolerance used for every strictness decision in the repo.
inline constexpr double kUnitEps = 1e-9;

enum class DerivSide { plus, minus };

/// One-sided derivative pair of a convex map at a point: minus <= plus.
struct DerivPair {
    double minus;
    double plus;

    /// Distance from 0 to the interval [minus, plus].
    double gap() const {
        if (minus > 0.0) return minus;
        if (plus < 0.0) return -plus;
        return 0.0;
    }

    bool contains_zero(double eps) const { return minus <= eps && plus >= -eps; }
};

/// Finite-dimensional real l_p space. The max norm is a distinguished state,
/// not a large exponent, so the evaluation branch is always explicit.
class PNormSpace {
public:
    /// p must be >= 1; values within 1e-12 of 1 are snapped to exactly 1.
    PNormSpace(std::size_t dim, double p);

    static PNormSpace infinity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    bool is_inf() const { return inf_; }

    /// Exponent; only meaningful when !is_inf().
    double p() const { return p_; }

    bool smooth() const { return !inf_ && p_ > 1.0; }
    bool strictly_convex() const { return !inf_ && p_ > 1.0; }

    double norm(const Vector& v) const;

    Vector normalize(const Vector& v) const;

    /// One-sided directional derivative at 0 of f(t) = ||x + t*y||.
    /// Requires x != 0.
    double norm_deriv_one_sided(const Vector& x, const Vector& y, DerivSide side) const;

    /// Both one-sided derivatives at once (same precondition).
    DerivPair norm_deriv_interval(const Vector& x, const Vector& y) const;

    /// As norm_deriv_interval but x = 0 yields the exact limit interval
    /// [-||y||, +||y||] instead of throwing. Internal building block for the
    /// argmin machinery, which probes points where x + t*y may vanish.
    DerivPair deriv_interval_unchecked(const Vector& x, const Vector& y) const;

    /// Extreme points of the unit ball. Requires ||v|| = 1 within kUnitEps.
    bool is_extreme_point(const Vector& v) const;

    std::string describe() const;

    bool operator==(const PNormSpace& o) const {
        return dim_ == o.dim_ && inf_ == o.inf_ && (inf_ || p_ == o.p_);
    }

private:
    PNormSpace(std::size_t dim, double p, bool inf);

    void require_dim(const Vector& v, const char* who) const;

    std::size_t dim_;
    double p_;
    bool inf_;
};

}  // namespace bjorth
