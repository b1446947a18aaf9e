#pragma once

#include <array>
#include <functional>

#include "amco/reliability/image.hpp"

namespace amco {

/// Weights balancing brightness and blur contributions to the reliability
/// score. Defaults reproduce xi = 1 for a bright, sharp frame
/// (0.0008*255 + 0.001*255 + 0.0025*100 + 0.003*100 = 1.0089, clamped).
struct ReliabilityWeights {
    double lambda1 = 0.0008;  // r_mean
    double lambda2 = 0.001;   // r_luma
    double lambda3 = 0.0025;  // r_hwt
    double lambda4 = 0.003;   // O
};

/// Luma weights for r_luma.
inline constexpr double kLumaR = 0.299;
inline constexpr double kLumaG = 0.587;
inline constexpr double kLumaB = 0.114;

struct ReliabilityScore {
    double r_mean = 0.0;  // [0, 255]
    double r_luma = 0.0;  // [0, 255]
    double r_hwt = 0.0;   // sharpness percentage [0, 100]
    double blur_o = 0.0;  // provider sharpness percentage [0, 100]
    double xi = 0.0;      // [0, 1]
};

/// Mean over pixels of (R + G + B) / 3.
double brightness_mean(const RgbImage& img);

/// Mean over pixels of 0.299 R + 0.587 G + 0.114 B.
double luma(const RgbImage& img);

/// xi = clamp(l1*r_mean + l2*r_luma + l3*r_hwt + l4*O, 0, 1).
/// Negative weights are a configuration error.
double reliability_score(double r_mean, double r_luma, double r_hwt,
                         double blur_o, const ReliabilityWeights& w = {});

/// Pluggable sharpness oracle, a stand-in for a learned motion-blur model.
/// Returns a percentage in [0, 100]; must be safe for concurrent calls.
using BlurProvider = std::function<double(const RgbImage&)>;

enum class BlurProviderKind { Wavelet, GroundTruth, External };

BlurProviderKind blur_provider_from_name(std::string_view name);
std::string_view blur_provider_name(BlurProviderKind k);

/// Default provider: the wavelet sharpness surrogate (O = r_hwt).
double wavelet_blur_provider(const RgbImage& img);

/// Full score for one frame with an explicit provider; falls back to the
/// wavelet surrogate when `provider` is empty.
ReliabilityScore score_image(const RgbImage& img,
                             const ReliabilityWeights& w = {},
                             const BlurProvider& provider = {});

}  // namespace amco
