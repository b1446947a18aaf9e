#pragma once

#include "amco/reliability/image.hpp"

namespace amco {

/// No-reference blur measure from a 3-level Haar decomposition.
///
/// The image is reduced to [0, 255] luma and decomposed with the orthonormal
/// Haar transform; per-level edge maps E_k = sqrt(LH^2 + HL^2 + HH^2) are
/// max-pooled with 8/4/2 windows so all three align. Edge points (any E
/// above the threshold) are classified by the cross-scale profile:
/// E1 > E2 > E3 marks Dirac/A-step structure, ascending or mid-peaked
/// profiles mark Roof/G-step. A Roof/G-step edge whose finest-scale response
/// fell below the threshold has lost sharpness.
struct HaarBlurResult {
    double blur_extent = 0.0;  // lost-sharpness fraction of Roof/G-step edges
    double r_hwt = 100.0;      // sharpness percentage, 100 * (1 - blur_extent)
    double per = 0.0;          // Dirac/A-step fraction of all edges
    bool likely_blurred = false;  // MinZero rule: per < 0.05
    int n_edge = 0;
    int n_dirac_astep = 0;
    int n_roof_gstep = 0;
    int n_lost_sharpness = 0;
};

inline constexpr double kHaarEdgeThreshold = 35.0;
inline constexpr double kHaarMinZero = 0.05;

/// Requires min(width, height) >= 8. Images with no edges at all score
/// blur_extent 0 (brightness already penalizes informationless frames).
HaarBlurResult haar_sharpness(const RgbImage& img,
                              double edge_threshold = kHaarEdgeThreshold);

}  // namespace amco
