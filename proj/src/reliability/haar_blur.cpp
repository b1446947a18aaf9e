#include "amco/reliability/haar_blur.hpp"

#include <algorithm>

#include "amco/kernels/kernels.hpp"
#include "amco/reliability/reliability.hpp"

namespace amco {
namespace {

struct FloatPlane {
    int w = 0, h = 0;
    std::vector<float> v;
    FloatPlane() = default;
    FloatPlane(int w_, int h_) : w(w_), h(h_), v(static_cast<std::size_t>(w_) * h_) {}
    float& at(int r, int c) { return v[static_cast<std::size_t>(r) * w + c]; }
    float at(int r, int c) const { return v[static_cast<std::size_t>(r) * w + c]; }
};

// One orthonormal Haar level: 2x2 block -> approximation + three details,
// all scaled by 0.5. The approximation amplitude doubles per level, which is
// what lets a fixed threshold catch wide gradual edges at the coarse scales.
void haar_level(const FloatPlane& in, FloatPlane& ll, FloatPlane& lh,
                FloatPlane& hl, FloatPlane& hh) {
    const int w = in.w / 2, h = in.h / 2;
    ll = FloatPlane(w, h);
    lh = FloatPlane(w, h);
    hl = FloatPlane(w, h);
    hh = FloatPlane(w, h);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const float p00 = in.at(2 * r, 2 * c);
            const float p01 = in.at(2 * r, 2 * c + 1);
            const float p10 = in.at(2 * r + 1, 2 * c);
            const float p11 = in.at(2 * r + 1, 2 * c + 1);
            ll.at(r, c) = (p00 + p01 + p10 + p11) * 0.5f;
            lh.at(r, c) = (p00 + p01 - p10 - p11) * 0.5f;  // horizontal edges
            hl.at(r, c) = (p00 - p01 + p10 - p11) * 0.5f;  // vertical edges
            hh.at(r, c) = (p00 - p01 - p10 + p11) * 0.5f;
        }
    }
}

// Max-pool with possibly partial border windows (ceil division).
FloatPlane max_pool(const FloatPlane& in, int window) {
    const int w = (in.w + window - 1) / window;
    const int h = (in.h + window - 1) / window;
    FloatPlane out(w, h);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            float m = 0.0f;
            const int r1 = std::min((r + 1) * window, in.h);
            const int c1 = std::min((c + 1) * window, in.w);
            for (int rr = r * window; rr < r1; ++rr)
                for (int cc = c * window; cc < c1; ++cc)
                    m = std::max(m, in.at(rr, cc));
            out.at(r, c) = m;
        }
    }
    return out;
}

}  // namespace

HaarBlurResult haar_sharpness(const RgbImage& img, double edge_threshold) {
    if (img.empty()) throw Error("haar_sharpness: empty image");
    if (std::min(img.width, img.height) < 8)
        throw Error("haar_sharpness: image side must be >= 8");

    FloatPlane gray(img.width, img.height);
    for (int r = 0; r < img.height; ++r) {
        for (int c = 0; c < img.width; ++c) {
            const std::uint8_t* p = img.pixel(r, c);
            gray.at(r, c) = static_cast<float>(kLumaR * p[0] + kLumaG * p[1] +
                                               kLumaB * p[2]);
        }
    }

    FloatPlane level = std::move(gray);
    FloatPlane emax[3];
    const int windows[3] = {8, 4, 2};
    for (int k = 0; k < 3; ++k) {
        FloatPlane ll, lh, hl, hh;
        haar_level(level, ll, lh, hl, hh);
        FloatPlane emap(ll.w, ll.h);
        kernels::edge_energy(emap.v.data(), lh.v.data(), hl.v.data(),
                             hh.v.data(), emap.v.size());
        emax[k] = max_pool(emap, windows[k]);
        level = std::move(ll);
    }

    HaarBlurResult res;
    const float thr = static_cast<float>(edge_threshold);
    const int h = std::min({emax[0].h, emax[1].h, emax[2].h});
    const int w = std::min({emax[0].w, emax[1].w, emax[2].w});
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const float e1 = emax[0].at(r, c);
            const float e2 = emax[1].at(r, c);
            const float e3 = emax[2].at(r, c);
            if (e1 <= thr && e2 <= thr && e3 <= thr) continue;
            ++res.n_edge;
            if (e1 > e2 && e2 > e3) {
                ++res.n_dirac_astep;
            } else if ((e1 < e2 && e2 < e3) || (e2 > e1 && e2 > e3)) {
                ++res.n_roof_gstep;
                if (e1 < thr) ++res.n_lost_sharpness;
            }
        }
    }

    if (res.n_roof_gstep > 0)
        res.blur_extent = static_cast<double>(res.n_lost_sharpness) /
                          static_cast<double>(res.n_roof_gstep);
    if (res.n_edge > 0)
        res.per = static_cast<double>(res.n_dirac_astep) /
                  static_cast<double>(res.n_edge);
    res.likely_blurred = res.n_edge > 0 && res.per < kHaarMinZero;
    res.r_hwt = 100.0 * (1.0 - res.blur_extent);
    return res;
}

}  // namespace amco
