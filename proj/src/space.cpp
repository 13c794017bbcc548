#include "bjorth/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bjorth {

namespace {

// Relative threshold below which a coordinate counts as zero (p = 1 kink
// classification) or as tied with the max (p = inf active set).
constexpr double kCoordRelTol = 1e-12;

double sgn(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

PNormSpace::PNormSpace(std::size_t dim, double p, bool inf)
    : dim_(dim), p_(p), inf_(inf) {
    if (dim_ < 2) throw std::invalid_argument("PNormSpace: dim must be >= 2");
}

PNormSpace::PNormSpace(std::size_t dim, double p) : PNormSpace(dim, p, false) {
    if (!std::isfinite(p)) throw std::invalid_argument("PNormSpace: p must be finite; use PNormSpace::infinity");
    if (std::abs(p - 1.0) <= 1e-12) p = 1.0;
    if (p < 1.0) throw std::invalid_argument("PNormSpace: p must be >= 1");
    p_ = p;
}

PNormSpace PNormSpace::infinity(std::size_t dim) {
    return PNormSpace(dim, std::numeric_limits<double>::infinity(), true);
}

void PNormSpace::require_dim(const Vector& v, const char* who) const {
    if (v.dim() != dim_) {
        std::ostringstream os;
        os << who << ": dimension mismatch (space dim " << dim_ << ", vector dim " << v.dim() << ")";
        throw std::invalid_argument(os.str());
    }
}

double PNormSpace::norm(const Vector& v) const {
    require_dim(v, "norm");
    const double m = v.max_abs();
    if (m == 0.0) return 0.0;
    if (inf_) return m;
    if (p_ == 1.0) {
        double s = 0.0;
        for (double c : v) s += std::abs(c);
        return s;
    }
    if (p_ == 2.0) {
        double s = 0.0;
        for (double c : v) {
            const double t = c / m;
            s += t * t;
        }
        return m * std::sqrt(s);
    }
    double s = 0.0;
    for (double c : v) {
        if (c == 0.0) continue;
        s += std::pow(std::abs(c) / m, p_);
    }
    return m * std::pow(s, 1.0 / p_);
}

Vector PNormSpace::normalize(const Vector& v) const {
    require_dim(v, "normalize");
    const double n = norm(v);
    if (n == 0.0) throw std::invalid_argument("normalize: cannot normalize zero");
    return (1.0 / n) * v;
}

DerivPair PNormSpace::deriv_interval_unchecked(const Vector& x, const Vector& y) const {
    require_dim(x, "norm_deriv");
    require_dim(y, "norm_deriv");
    const double m = x.max_abs();
    if (m == 0.0) {
        const double ny = norm(y);
        return {-ny, ny};
    }
    if (inf_) {
        // f(t) = max_i |x_i + t*y_i|; right (left) derivative is the max (min)
        // over the active set of the per-coordinate one-sided slopes.
        double dplus = -std::numeric_limits<double>::infinity();
        double dminus = std::numeric_limits<double>::infinity();
        const double cutoff = m * (1.0 - kCoordRelTol);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (std::abs(x[i]) < cutoff) continue;
            const double s = sgn(x[i]) * y[i];
            dplus = std::max(dplus, s);
            dminus = std::min(dminus, s);
        }
        return {dminus, dplus};
    }
    if (p_ == 1.0) {
        double base = 0.0, kink = 0.0;
        const double cutoff = m * kCoordRelTol;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (std::abs(x[i]) <= cutoff)
                kink += std::abs(y[i]);
            else
                base += sgn(x[i]) * y[i];
        }
        return {base - kink, base + kink};
    }
    // 1 < p < inf: the norm is differentiable away from 0; both sides agree.
    // Scaled by max|x_i| so constructed data with symmetric coordinates
    // cancels exactly.
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0.0) continue;
        const double w = std::pow(std::abs(x[i]) / m, p_ - 1.0);
        num += w * sgn(x[i]) * y[i];
        den += w * std::abs(x[i]) / m;
    }
    const double d = num / std::pow(den, (p_ - 1.0) / p_);
    return {d, d};
}

DerivPair PNormSpace::norm_deriv_interval(const Vector& x, const Vector& y) const {
    if (x.max_abs() == 0.0)
        throw std::invalid_argument("norm_deriv: derivative of norm at origin undefined");
    return deriv_interval_unchecked(x, y);
}

double PNormSpace::norm_deriv_one_sided(const Vector& x, const Vector& y, DerivSide side) const {
    const DerivPair d = norm_deriv_interval(x, y);
    return side == DerivSide::plus ? d.plus : d.minus;
}

bool PNormSpace::is_extreme_point(const Vector& v) const {
    require_dim(v, "is_extreme_point");
    if (std::abs(norm(v) - 1.0) > kUnitEps)
        throw std::invalid_argument("is_extreme_point: input must lie on the unit sphere");
    if (!inf_ && p_ > 1.0) return true;  // strictly convex
    if (inf_) {
        for (double c : v)
            if (std::abs(std::abs(c) - 1.0) > kUnitEps) return false;
        return true;
    }
    // p = 1: exactly the signed coordinate directions.
    std::size_t big = 0;
    for (double c : v) {
        if (std::abs(c) > kUnitEps) {
            if (std::abs(std::abs(c) - 1.0) > kUnitEps) return false;
            ++big;
        }
    }
    return big == 1;
}

std::string PNormSpace::describe() const {
    std::ostringstream os;
    os << "l_" << (inf_ ? std::string("inf") : std::to_string(p_)) << " on R^" << dim_;
    return os.str();
}

}  // namespace bjorth
