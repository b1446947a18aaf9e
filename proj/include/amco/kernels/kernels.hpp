#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace amco::kernels {

// Data-parallel inner loops shared by the map/image pipeline. Each kernel has
// a scalar reference implementation plus AVX2/NEON variants selected once at
// startup from CPU features. Variants are bit-exact against the reference:
// elementwise float ops use the same IEEE operation sequence (no FMA
// contraction) and integer reductions are exact, so results never depend on
// the backend. Set AMCO_KERNELS=scalar|avx2|neon to force one.

struct RgbSums {
    std::uint64_t r = 0;
    std::uint64_t g = 0;
    std::uint64_t b = 0;
};

struct Backend {
    std::string_view name;

    /// dst[i] = clamp(xi * (cg[i] + ch[i]) + cp[i], 0, 255)
    void (*fuse_couple)(float* dst, const float* cg, const float* ch,
                        const float* cp, float xi, std::size_t n);

    /// dst[i] = clamp(scale * src[i], 0, 255)
    void (*scale_clamp)(float* dst, const float* src, float scale,
                        std::size_t n);

    /// v[i] = clamp(v[i], 0, 255) in place
    void (*clamp255)(float* v, std::size_t n);

    /// Exact per-channel sums over interleaved 8-bit RGB pixels.
    RgbSums (*rgb_sums)(const std::uint8_t* rgb, std::size_t pixel_count);

    /// dst[i] = sqrt(lh[i]^2 + hl[i]^2 + hh[i]^2)
    void (*edge_energy)(float* dst, const float* lh, const float* hl,
                        const float* hh, std::size_t n);
};

const Backend& scalar_backend();
#if defined(__x86_64__) || defined(_M_X64)
const Backend& avx2_backend();
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
const Backend& neon_backend();
#endif

/// Backend chosen at startup (CPU features, AMCO_KERNELS override).
const Backend& active_backend();

/// Force a backend by name ("scalar", "avx2", "neon"); throws if unavailable.
/// Intended for tests and benchmarking.
void set_active_backend(std::string_view name);

// Convenience forwarders through the active backend.
inline void fuse_couple(float* dst, const float* cg, const float* ch,
                        const float* cp, float xi, std::size_t n) {
    active_backend().fuse_couple(dst, cg, ch, cp, xi, n);
}
inline void scale_clamp(float* dst, const float* src, float scale,
                        std::size_t n) {
    active_backend().scale_clamp(dst, src, scale, n);
}
inline void clamp255(float* v, std::size_t n) {
    active_backend().clamp255(v, n);
}
inline RgbSums rgb_sums(const std::uint8_t* rgb, std::size_t pixel_count) {
    return active_backend().rgb_sums(rgb, pixel_count);
}
inline void edge_energy(float* dst, const float* lh, const float* hl,
                        const float* hh, std::size_t n) {
    active_backend().edge_energy(dst, lh, hl, hh, n);
}

}  // namespace amco::kernels
