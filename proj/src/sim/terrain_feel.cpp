#include "amco/sim/terrain_feel.hpp"

#include <cmath>

#include "amco/proprioception/ellipse.hpp"

namespace amco {
namespace {

Eigen::Matrix2d diag_cov(double s1, double s2) {
    Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
    m(0, 0) = s1 * s1;
    m(1, 1) = s2 * s2;
    return m;
}

// Index [terrain][gait] with gait order Trot, Crawl, Amble. Per-terrain
// best gaits: stable->trot, granular->crawl, poor foothold->crawl,
// high resistance->amble. Sigma pairs are sized so the 0.9999-confidence
// areas land on the cost scale while |p| stays in the 0-4 band Eq. 5 maps.
const FeelModel kFeel[kWalkableTerrainCount][kGaitCount] = {
    // Stable
    {{{0.45, 0.20}, diag_cov(1.30, 1.20)},   // trot   A ~ 90
     {{0.65, 0.30}, diag_cov(1.65, 1.50)},   // crawl  A ~ 143
     {{0.55, 0.25}, diag_cov(1.45, 1.35)}},  // amble  A ~ 113
    // Granular
    {{{2.20, 1.20}, diag_cov(2.05, 1.80)},   // trot   A ~ 214
     {{1.35, 0.70}, diag_cov(1.40, 1.17)},   // crawl  A ~ 95
     {{1.70, 0.90}, diag_cov(1.70, 1.45)}},  // amble  A ~ 143
    // PoorFoothold
    {{{1.95, 1.05}, diag_cov(2.00, 1.75)},   // trot   A ~ 203
     {{1.30, 0.70}, diag_cov(1.52, 1.25)},   // crawl  A ~ 110
     {{1.60, 0.85}, diag_cov(1.75, 1.52)}},  // amble  A ~ 154
    // HighResistance
    {{{1.45, 0.80}, diag_cov(1.90, 1.60)},   // trot   A ~ 176
     {{1.15, 0.60}, diag_cov(1.70, 1.42)},   // crawl  A ~ 140
     {{0.95, 0.50}, diag_cov(1.48, 1.22)}},  // amble  A ~ 105
};

}  // namespace

const FeelModel& terrain_feel(TerrainClass terrain, Gait gait) {
    if (!is_walkable(terrain))
        throw Error("terrain_feel: no model for sentinel class " +
                    std::string(terrain_name(terrain)));
    return kFeel[static_cast<int>(terrain)][static_cast<int>(gait)];
}

double true_area(TerrainClass terrain, Gait gait, double confidence) {
    const auto& m = terrain_feel(terrain, gait);
    return M_PI * chi2_quantile_2dof(confidence) *
           std::sqrt(m.cov.determinant());
}

Gait true_best_gait(TerrainClass terrain) {
    Gait best = kGaitTieOrder[0];
    double best_area = true_area(terrain, best, kAssetConfidence);
    for (int k = 1; k < kGaitCount; ++k) {
        const double a = true_area(terrain, kGaitTieOrder[k], kAssetConfidence);
        if (a < best_area) {
            best_area = a;
            best = kGaitTieOrder[k];
        }
    }
    return best;
}

PcaPoint sample_feel(TerrainClass terrain, Gait gait, double deformability,
                     double drift, Rng& rng) {
    const auto& m = terrain_feel(terrain, gait);
    Eigen::Vector2d center = m.center;
    const double norm = center.norm();
    if (norm > 1e-12)
        center += (drift * deformability / norm) * center;
    const double widen = std::sqrt(1.0 + deformability);
    // Independent per-axis draws; the models use diagonal covariance.
    PcaPoint p;
    p.x() = center.x() + widen * std::sqrt(m.cov(0, 0)) * rng.normal();
    p.y() = center.y() + widen * std::sqrt(m.cov(1, 1)) * rng.normal();
    return p;
}

const PcaModel& true_embedding() {
    static const PcaModel model = [] {
        PcaModel m;
        // Nominal stance: 12 joint positions, zero velocities, standing
        // forces, battery draw.
        const double hip[kJointCount] = {0.10, 0.80, -1.60, -0.10, 0.80, -1.60,
                                         0.10, 0.95, -1.70, -0.10, 0.95, -1.70};
        for (int i = 0; i < kJointCount; ++i) {
            m.mean(i) = hip[i];
            m.mean(12 + i) = 0.0;
            m.mean(24 + i) = (i % 3 == 0) ? 9.0 : (i % 3 == 1 ? 14.0 : 24.0);
        }
        m.mean(36) = 6.0;

        // Fixed pseudo-random orthonormal pair spanning the feel plane.
        Rng rng(0xA3C0DEULL);
        Eigen::Matrix<double, kSignalDim, 1> u1, u2;
        for (int i = 0; i < kSignalDim; ++i) u1(i) = rng.normal();
        for (int i = 0; i < kSignalDim; ++i) u2(i) = rng.normal();
        u1.normalize();
        u2 -= u1.dot(u2) * u1;
        u2.normalize();
        m.components.row(0) = u1.transpose();
        m.components.row(1) = u2.transpose();
        m.eigenvalues << 1.0, 1.0;
        return m;
    }();
    return model;
}

RawSignal embed_signal(const PcaPoint& p, double noise, Rng& rng) {
    const PcaModel& e = true_embedding();
    RawSignal s = e.mean + e.components.row(0).transpose() * p.x() +
                  e.components.row(1).transpose() * p.y();
    for (int i = 0; i < kSignalDim; ++i) s(i) += noise * rng.normal();
    return s;
}

void synth_joints(double t, Gait gait, double roughness, double norm, Rng& rng,
                  double out[kJointCount]) {
    const double freq = gait == Gait::Trot ? 2.5 : (gait == Gait::Amble ? 2.0 : 1.2);
    const double amp =
        0.03 * (1.0 + roughness + 0.5 * std::max(0.0, norm - 2.0));
    const PcaModel& e = true_embedding();
    for (int j = 0; j < kJointCount; ++j) {
        out[j] = e.mean(j) + amp * std::sin(2.0 * M_PI * freq * t + j * M_PI / 6.0) +
                 0.005 * rng.normal();
    }
}

}  // namespace amco
