#pragma once

#include <cmath>
#include <cstdint>

namespace amco {

/// Deterministic RNG used everywhere randomness is needed. Wraps a
/// xoshiro-style 64-bit generator with explicit uniform/normal draws so trial
/// replay is bit-identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        // splitmix64 seeding
        state_ = seed + 0x9E3779B97F4A7C15ULL;
        for (int i = 0; i < 4; ++i) next_u64();
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, bound).
    std::uint64_t uniform_index(std::uint64_t bound) {
        return next_u64() % bound;
    }

    /// Standard normal via Box-Muller (no cached second value, so draw
    /// counts stay predictable).
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

private:
    std::uint64_t state_ = 0;
};

}  // namespace amco
