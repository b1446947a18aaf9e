#include "amco/reliability/reliability.hpp"

#include "amco/kernels/kernels.hpp"
#include "amco/reliability/haar_blur.hpp"

namespace amco {

double brightness_mean(const RgbImage& img) {
    if (img.empty()) throw Error("brightness_mean: empty image");
    const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
    const auto s = kernels::rgb_sums(img.px.data(), n);
    return static_cast<double>(s.r + s.g + s.b) / (3.0 * static_cast<double>(n));
}

double luma(const RgbImage& img) {
    if (img.empty()) throw Error("luma: empty image");
    const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
    const auto s = kernels::rgb_sums(img.px.data(), n);
    return (kLumaR * static_cast<double>(s.r) + kLumaG * static_cast<double>(s.g) +
            kLumaB * static_cast<double>(s.b)) /
           static_cast<double>(n);
}

double reliability_score(double r_mean, double r_luma, double r_hwt,
                         double blur_o, const ReliabilityWeights& w) {
    if (w.lambda1 < 0 || w.lambda2 < 0 || w.lambda3 < 0 || w.lambda4 < 0)
        throw Error("reliability_score: weights must be non-negative");
    const double xi = w.lambda1 * r_mean + w.lambda2 * r_luma +
                      w.lambda3 * r_hwt + w.lambda4 * blur_o;
    return std::clamp(xi, 0.0, 1.0);
}

BlurProviderKind blur_provider_from_name(std::string_view name) {
    if (name == "wavelet") return BlurProviderKind::Wavelet;
    if (name == "ground_truth") return BlurProviderKind::GroundTruth;
    if (name == "external") return BlurProviderKind::External;
    throw Error("unknown blur provider: " + std::string(name));
}

std::string_view blur_provider_name(BlurProviderKind k) {
    switch (k) {
        case BlurProviderKind::Wavelet: return "wavelet";
        case BlurProviderKind::GroundTruth: return "ground_truth";
        case BlurProviderKind::External: return "external";
    }
    return "wavelet";
}

double wavelet_blur_provider(const RgbImage& img) {
    return haar_sharpness(img).r_hwt;
}

ReliabilityScore score_image(const RgbImage& img, const ReliabilityWeights& w,
                             const BlurProvider& provider) {
    ReliabilityScore s;
    s.r_mean = brightness_mean(img);
    s.r_luma = luma(img);
    s.r_hwt = haar_sharpness(img).r_hwt;
    s.blur_o = provider ? provider(img) : s.r_hwt;
    s.xi = reliability_score(s.r_mean, s.r_luma, s.r_hwt, s.blur_o, w);
    return s;
}

}  // namespace amco
