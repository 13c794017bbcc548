#pragma once

#include <cstdint>

namespace bjorth {

/// Minimal counter-based RNG. Every draw is a pure function of (seed, stream,
/// counter), so per-item streams are reproducible no matter how work is split
/// across threads, and output does not depend on the standard library's
/// distribution internals.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1] (safe as a log argument).
    double uniform_pos() { return 1.0 - uniform(); }
};

/// Decorrelates a base seed and a stream index into a fresh engine seed.
inline std::uint64_t seed_stream(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 s(seed ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL));
    s.next();
    return s.next();
}

/// Standard normal via Box-Muller on explicit uniforms.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : eng_(seed) {}

    double next() {
        if (have_) {
            have_ = false;
            return spare_;
        }
        double u1 = eng_.uniform_pos();
        double u2 = eng_.uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_ = true;
        return r * std::cos(a);
    }

private:
    SplitMix64 eng_;
    double spare_ = 0.0;
    bool have_ = false;
};

}  // namespace bjorth
