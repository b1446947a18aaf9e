#include <cmath>

#include "amco/kernels/kernels.hpp"

// Reference kernels. Keep the operation sequence identical to the SIMD
// variants: mul, add, add, clamp via min/max. Compiled with
// -ffp-contract=off so the compiler cannot fuse mul+add.

namespace amco::kernels {
namespace {

inline float clamp01_255(float v) {
    v = v < 0.0f ? 0.0f : v;
    return v > 255.0f ? 255.0f : v;
}

void fuse_couple_scalar(float* dst, const float* cg, const float* ch,
                        const float* cp, float xi, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        float v = xi * (cg[i] + ch[i]) + cp[i];
        dst[i] = clamp01_255(v);
    }
}

void scale_clamp_scalar(float* dst, const float* src, float scale,
                        std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = clamp01_255(scale * src[i]);
    }
}

void clamp255_scalar(float* v, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) v[i] = clamp01_255(v[i]);
}

RgbSums rgb_sums_scalar(const std::uint8_t* rgb, std::size_t pixel_count) {
    RgbSums s;
    for (std::size_t i = 0; i < pixel_count; ++i) {
        s.r += rgb[3 * i + 0];
        s.g += rgb[3 * i + 1];
        s.b += rgb[3 * i + 2];
    }
    return s;
}

void edge_energy_scalar(float* dst, const float* lh, const float* hl,
                        const float* hh, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        float e = lh[i] * lh[i] + hl[i] * hl[i] + hh[i] * hh[i];
        dst[i] = std::sqrt(e);
    }
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend backend{
        "scalar",          fuse_couple_scalar, scale_clamp_scalar,
        clamp255_scalar,   rgb_sums_scalar,    edge_energy_scalar,
    };
    return backend;
}

}  // namespace amco::kernels
