#pragma once

#include <optional>
#include <vector>

#include "bjorth/space.hpp"
#include "bjorth/vector.hpp"

namespace bjorth {

/// Ordered list of linearly independent vectors spanning a subspace of the
/// ambient space. Independence (rank == count) is checked at construction.
class SubspaceBasis {
public:
    SubspaceBasis(PNormSpace space, std::vector<Vector> vectors);

    const PNormSpace& space() const { return space_; }
    std::size_t count() const { return vectors_.size(); }
    std::size_t ambient_dim() const { return space_.dim(); }
    const std::vector<Vector>& vectors() const { return vectors_; }
    const Vector& vector(std::size_t j) const { return vectors_[j]; }

    /// Linear combination sum_j coeffs[j] * b_j.
    Vector combine(const std::vector<double>& coeffs) const;

    /// Least-squares coefficients of v in this basis plus the residual
    /// ||v - B c||_2 of the fit (Euclidean; used only for span membership).
    std::pair<std::vector<double>, double> coefficients(const Vector& v) const;

    bool in_span(const Vector& v, double tol = 1e-9) const;

    /// 2-norm condition estimate of the basis matrix.
    double condition_estimate() const { return condition_; }

    /// True when condition_estimate() > 1e8; results carry this as a warning.
    bool ill_conditioned() const { return condition_ > 1e8; }

private:
    PNormSpace space_;
    std::vector<Vector> vectors_;
    double condition_;
};

/// Rank of the rows within the given relative tolerance.
std::size_t numeric_rank(const std::vector<Vector>& rows, double rel_tol = 1e-10);

/// Smallest singular value of the row matrix (dependence measure).
double min_singular_value(const std::vector<Vector>& rows);

/// Euclidean-orthonormal completion: returns dim(space) unit vectors, the
/// first equal to normalize_2(x), the rest completing it (classical
/// Gram-Schmidt against pivoted coordinate directions). Used as the exact
/// p = 2 route and as a warm start elsewhere.
std::vector<Vector> euclidean_completion(const Vector& x);

}  // namespace bjorth
