#include "bjorth/sampling.hpp"

#include "bjorth/rng.hpp"

namespace bjorth {

std::vector<double> sample_gaussian_coeffs(std::size_t dim, std::uint64_t seed,
                                           std::size_t index) {
    GaussianSource g(seed_stream(seed, index));
    std::vector<double> c(dim);
    for (auto& v : c) v = g.next();
    return c;
}

Vector sample_unit_vector(const PNormSpace& space, std::uint64_t seed, std::size_t index) {
    // Degenerate draws (all coordinates ~0) are retried on a shifted stream.
    for (std::uint64_t attempt = 0;; ++attempt) {
        std::vector<double> c =
            sample_gaussian_coeffs(space.dim(), seed ^ (attempt * 0x9e3779b97f4a7c15ULL), index);
        Vector v{std::move(c)};
        if (v.max_abs() > 1e-8) return space.normalize(v);
    }
}

std::vector<Vector> sample_unit_sphere(const PNormSpace& space, std::uint64_t seed,
                                       std::size_t count, ExecMode mode) {
    std::vector<Vector> out(count);
    parallel_for_index(count, mode,
                       [&](std::size_t i) { out[i] = sample_unit_vector(space, seed, i); });
    return out;
}

}  // namespace bjorth
