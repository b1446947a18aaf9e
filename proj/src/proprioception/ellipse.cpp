#include "amco/proprioception/ellipse.hpp"

namespace amco {

bool GaitTerrainEllipse::contains(const PcaPoint& p) const {
    const Eigen::Vector2d d = p - center;
    const double m2 = d.dot(covariance.inverse() * d);
    return m2 <= chi2_quantile_2dof(confidence);
}

double ellipse_area(const GaitTerrainEllipse& e) {
    const double det = e.covariance.determinant();
    const double tr = e.covariance.trace();
    if (!(det > 0.0) || !(tr > 0.0) ||
        std::abs(e.covariance(0, 1) - e.covariance(1, 0)) >
            1e-9 * std::max(1.0, tr))
        throw Error("ellipse_area: covariance is not symmetric positive-definite");
    return M_PI * chi2_quantile_2dof(e.confidence) * std::sqrt(det);
}

GaitTerrainEllipse fit_ellipse(const std::vector<PcaPoint>& points,
                               double confidence) {
    const int n = static_cast<int>(points.size());
    if (n < 3) throw Error("fit_ellipse: need at least 3 points");

    Eigen::Vector2d mean = Eigen::Vector2d::Zero();
    for (const auto& p : points) mean += p;
    mean /= static_cast<double>(n);

    Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
    for (const auto& p : points) {
        const Eigen::Vector2d d = p - mean;
        cov += d * d.transpose();
    }
    cov /= static_cast<double>(n - 1);

    const double det = cov.determinant();
    const double scale = cov.trace() * 0.5;
    if (det <= 1e-12 * scale * scale || scale <= 0.0)
        throw Error("fit_ellipse: degenerate covariance (collinear points)");

    GaitTerrainEllipse e;
    e.center = mean;
    e.covariance = cov;
    e.confidence = confidence;
    return e;
}

}  // namespace amco
