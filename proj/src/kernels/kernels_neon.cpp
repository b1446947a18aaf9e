#if defined(__aarch64__) || defined(__ARM_NEON)

#include <arm_neon.h>

#include <cmath>

#include "amco/kernels/kernels.hpp"

// NEON variants, mirroring the scalar operation order (no FMA).

namespace amco::kernels {
namespace {

inline float32x4_t clamp255_f32x4(float32x4_t v) {
    return vminq_f32(vmaxq_f32(v, vdupq_n_f32(0.0f)), vdupq_n_f32(255.0f));
}

inline float clamp01_255(float v) {
    v = v < 0.0f ? 0.0f : v;
    return v > 255.0f ? 255.0f : v;
}

void fuse_couple_neon(float* dst, const float* cg, const float* ch,
                      const float* cp, float xi, std::size_t n) {
    const float32x4_t xi_vec = vdupq_n_f32(xi);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float32x4_t v = vaddq_f32(vld1q_f32(cg + i), vld1q_f32(ch + i));
        v = vmulq_f32(xi_vec, v);
        v = vaddq_f32(v, vld1q_f32(cp + i));
        vst1q_f32(dst + i, clamp255_f32x4(v));
    }
    for (; i < n; ++i)
        dst[i] = clamp01_255(xi * (cg[i] + ch[i]) + cp[i]);
}

void scale_clamp_neon(float* dst, const float* src, float scale,
                      std::size_t n) {
    const float32x4_t s = vdupq_n_f32(scale);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float32x4_t v = vmulq_f32(s, vld1q_f32(src + i));
        vst1q_f32(dst + i, clamp255_f32x4(v));
    }
    for (; i < n; ++i) dst[i] = clamp01_255(scale * src[i]);
}

void clamp255_neon(float* v, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        vst1q_f32(v + i, clamp255_f32x4(vld1q_f32(v + i)));
    for (; i < n; ++i) v[i] = clamp01_255(v[i]);
}

RgbSums rgb_sums_neon(const std::uint8_t* rgb, std::size_t pixel_count) {
    RgbSums s;
    std::size_t i = 0;
    uint64x2_t accr = vdupq_n_u64(0), accg = vdupq_n_u64(0),
               accb = vdupq_n_u64(0);
    for (; i + 16 <= pixel_count; i += 16) {
        uint8x16x3_t px = vld3q_u8(rgb + 3 * i);
        accr = vpadalq_u32(accr, vpaddlq_u16(vpaddlq_u8(px.val[0])));
        accg = vpadalq_u32(accg, vpaddlq_u16(vpaddlq_u8(px.val[1])));
        accb = vpadalq_u32(accb, vpaddlq_u16(vpaddlq_u8(px.val[2])));
    }
    s.r = vgetq_lane_u64(accr, 0) + vgetq_lane_u64(accr, 1);
    s.g = vgetq_lane_u64(accg, 0) + vgetq_lane_u64(accg, 1);
    s.b = vgetq_lane_u64(accb, 0) + vgetq_lane_u64(accb, 1);
    for (; i < pixel_count; ++i) {
        s.r += rgb[3 * i + 0];
        s.g += rgb[3 * i + 1];
        s.b += rgb[3 * i + 2];
    }
    return s;
}

void edge_energy_neon(float* dst, const float* lh, const float* hl,
                      const float* hh, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float32x4_t a = vld1q_f32(lh + i);
        float32x4_t b = vld1q_f32(hl + i);
        float32x4_t c = vld1q_f32(hh + i);
        float32x4_t e = vaddq_f32(vmulq_f32(a, a), vmulq_f32(b, b));
        e = vaddq_f32(e, vmulq_f32(c, c));
        vst1q_f32(dst + i, vsqrtq_f32(e));
    }
    for (; i < n; ++i) {
        float e = lh[i] * lh[i] + hl[i] * hl[i] + hh[i] * hh[i];
        dst[i] = std::sqrt(e);
    }
}

}  // namespace

const Backend& neon_backend() {
    static const Backend backend{
        "neon",          fuse_couple_neon, scale_clamp_neon,
        clamp255_neon,   rgb_sums_neon,    edge_energy_neon,
    };
    return backend;
}

}  // namespace amco::kernels

#endif  // NEON
