#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace bjorth {

/// Dense real coordinate vector. Coordinates are validated finite on
/// construction; dimension is fixed for the lifetime of the value.
class Vector {
public:
    Vector() = default;

    explicit Vector(std::vector<double> coords) : c_(std::move(coords)) {
        validate();
    }

    Vector(std::initializer_list<double> coords) : c_(coords) { validate(); }

    static Vector zero(std::size_t dim) {
        return Vector(std::vector<double>(dim, 0.0));
    }

    std::size_t dim() const { return c_.size(); }

    double operator[](std::size_t i) const { return c_[i]; }
    double& operator[](std::size_t i) { return c_[i]; }

    const std::vector<double>& coords() const { return c_; }

    bool is_zero() const {
        for (double v : c_)
            if (v != 0.0) return false;
        return true;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : c_) m = std::max(m, std::abs(v));
        return m;
    }

    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

private:
    void validate() const {
        if (c_.empty()) throw std::invalid_argument("Vector: dimension must be >= 1");
        for (double v : c_)
            if (!std::isfinite(v))
                throw std::invalid_argument("Vector: coordinates must be finite");
    }

    std::vector<double> c_;
};

inline Vector operator+(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("Vector: dimension mismatch");
    std::vector<double> r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return Vector(std::move(r));
}

inline Vector operator-(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("Vector: dimension mismatch");
    std::vector<double> r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return Vector(std::move(r));
}

inline Vector operator*(double s, const Vector& a) {
    std::vector<double> r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = s * a[i];
    return Vector(std::move(r));
}

/// a + s*b without an intermediate allocation pass.
inline Vector axpy(const Vector& a, double s, const Vector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("Vector: dimension mismatch");
    std::vector<double> r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + s * b[i];
    return Vector(std::move(r));
}

inline double max_abs_diff(const Vector& a, const Vector& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace bjorth
