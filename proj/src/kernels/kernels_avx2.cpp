#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

#include "amco/kernels/kernels.hpp"

// AVX2 variants. Elementwise float kernels use mul/add/min/max in the same
// order as the scalar reference (no FMA) so results are bit-identical.

namespace amco::kernels {
namespace {

inline __m256 clamp255_ps(__m256 v) {
    const __m256 lo = _mm256_setzero_ps();
    const __m256 hi = _mm256_set1_ps(255.0f);
    return _mm256_min_ps(_mm256_max_ps(v, lo), hi);
}

inline float clamp01_255(float v) {
    v = v < 0.0f ? 0.0f : v;
    return v > 255.0f ? 255.0f : v;
}

void fuse_couple_avx2(float* dst, const float* cg, const float* ch,
                      const float* cp, float xi, std::size_t n) {
    const __m256 xi_vec = _mm256_set1_ps(xi);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 g = _mm256_loadu_ps(cg + i);
        __m256 h = _mm256_loadu_ps(ch + i);
        __m256 p = _mm256_loadu_ps(cp + i);
        __m256 v = _mm256_add_ps(g, h);
        v = _mm256_mul_ps(xi_vec, v);
        v = _mm256_add_ps(v, p);
        _mm256_storeu_ps(dst + i, clamp255_ps(v));
    }
    for (; i < n; ++i)
        dst[i] = clamp01_255(xi * (cg[i] + ch[i]) + cp[i]);
}

void scale_clamp_avx2(float* dst, const float* src, float scale,
                      std::size_t n) {
    const __m256 s = _mm256_set1_ps(scale);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 v = _mm256_mul_ps(s, _mm256_loadu_ps(src + i));
        _mm256_storeu_ps(dst + i, clamp255_ps(v));
    }
    for (; i < n; ++i) dst[i] = clamp01_255(scale * src[i]);
}

void clamp255_avx2(float* v, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_ps(v + i, clamp255_ps(_mm256_loadu_ps(v + i)));
    for (; i < n; ++i) v[i] = clamp01_255(v[i]);
}

// Channel sums over interleaved RGB. Each 32-byte block is masked down to
// one channel (byte index i belongs to channel (base + i) mod 3, where base
// rotates by 2 per block) and summed exactly with SAD against zero.
RgbSums rgb_sums_avx2(const std::uint8_t* rgb, std::size_t pixel_count) {
    alignas(32) std::uint8_t mask_bytes[3][32];
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 32; ++i)
            mask_bytes[k][i] = (i % 3 == k) ? 0xFF : 0x00;
    const __m256i masks[3] = {
        _mm256_load_si256(reinterpret_cast<const __m256i*>(mask_bytes[0])),
        _mm256_load_si256(reinterpret_cast<const __m256i*>(mask_bytes[1])),
        _mm256_load_si256(reinterpret_cast<const __m256i*>(mask_bytes[2]))};

    const std::size_t total = pixel_count * 3;
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc[3] = {zero, zero, zero};

    std::size_t off = 0;
    int base = 0;  // channel of the first byte in the current block
    for (; off + 32 <= total; off += 32) {
        __m256i chunk =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rgb + off));
        for (int c = 0; c < 3; ++c) {
            int k = (c - base + 3) % 3;
            __m256i sel = _mm256_and_si256(chunk, masks[k]);
            acc[c] = _mm256_add_epi64(acc[c], _mm256_sad_epu8(sel, zero));
        }
        base = (base + 2) % 3;  // 32 mod 3 == 2
    }

    RgbSums s;
    alignas(32) std::uint64_t lanes[4];
    std::uint64_t* out[3] = {&s.r, &s.g, &s.b};
    for (int c = 0; c < 3; ++c) {
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc[c]);
        *out[c] = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    }
    for (; off < total; ++off) *out[off % 3] += rgb[off];
    return s;
}

void edge_energy_avx2(float* dst, const float* lh, const float* hl,
                      const float* hh, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 a = _mm256_loadu_ps(lh + i);
        __m256 b = _mm256_loadu_ps(hl + i);
        __m256 c = _mm256_loadu_ps(hh + i);
        __m256 e = _mm256_add_ps(_mm256_mul_ps(a, a), _mm256_mul_ps(b, b));
        e = _mm256_add_ps(e, _mm256_mul_ps(c, c));
        _mm256_storeu_ps(dst + i, _mm256_sqrt_ps(e));
    }
    for (; i < n; ++i) {
        float e = lh[i] * lh[i] + hl[i] * hl[i] + hh[i] * hh[i];
        dst[i] = std::sqrt(e);
    }
}

}  // namespace

const Backend& avx2_backend() {
    static const Backend backend{
        "avx2",          fuse_couple_avx2, scale_clamp_avx2,
        clamp255_avx2,   rgb_sums_avx2,    edge_energy_avx2,
    };
    return backend;
}

}  // namespace amco::kernels

#endif  // x86_64
