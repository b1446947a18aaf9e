#pragma once

#include <Eigen/Dense>
#include <vector>

#include "amco/core/types.hpp"
#include "amco/proprioception/pca.hpp"

namespace amco {

/// Chi-square quantile with 2 degrees of freedom: -2 ln(1 - p).
inline double chi2_quantile_2dof(double p) {
    if (p <= 0.0 || p >= 1.0)
        throw Error("chi2_quantile_2dof: p must be in (0, 1)");
    return -2.0 * std::log(1.0 - p);
}

inline constexpr double kDefaultEllipseConfidence = 0.95;

/// Gaussian confidence ellipse of the 2D point cloud observed for one
/// (terrain, gait) pair. Smaller area means more stable.
struct GaitTerrainEllipse {
    TerrainClass terrain = TerrainClass::Stable;
    Gait gait = Gait::Trot;
    Eigen::Vector2d center = Eigen::Vector2d::Zero();
    Eigen::Matrix2d covariance = Eigen::Matrix2d::Identity();
    double confidence = kDefaultEllipseConfidence;

    /// True when a point lies inside the confidence boundary
    /// (squared Mahalanobis distance <= chi2 quantile).
    bool contains(const PcaPoint& p) const;
};

/// area = pi * chi2(confidence, 2) * sqrt(det(covariance))
double ellipse_area(const GaitTerrainEllipse& e);

/// Fit center (sample mean) and covariance (sample covariance, n-1) of a
/// point cloud; boundary at the chi-square quantile of `confidence`.
/// Collinear or insufficient points raise a degenerate-covariance error.
GaitTerrainEllipse fit_ellipse(const std::vector<PcaPoint>& points,
                               double confidence = kDefaultEllipseConfidence);

}  // namespace amco
