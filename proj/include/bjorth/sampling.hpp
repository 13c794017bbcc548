#pragma once

#include <cstdint>
#include <vector>

#include "bjorth/parallel.hpp"
#include "bjorth/space.hpp"
#include "bjorth/vector.hpp"

namespace bjorth {

/// `count` unit vectors of the space, deterministic in (seed, index).
/// Directions come from a rotation-invariant Gaussian draw and are then
/// normalized under the space's own norm, which gives sign-symmetric
/// coverage of the sphere for every p.
std::vector<Vector> sample_unit_sphere(const PNormSpace& space, std::uint64_t seed,
                                       std::size_t count,
                                       ExecMode mode = default_exec_mode());

/// Single draw, same stream layout as sample_unit_sphere index i.
Vector sample_unit_vector(const PNormSpace& space, std::uint64_t seed, std::size_t index);

/// Gaussian coefficient tuple (not normalized), deterministic in (seed, index).
std::vector<double> sample_gaussian_coeffs(std::size_t dim, std::uint64_t seed,
                                           std::size_t index);

}  // namespace bjorth
