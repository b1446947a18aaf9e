#pragma once

#include "amco/core/rng.hpp"
#include "amco/proprioception/pca.hpp"

namespace amco {

/// Ground-truth generative model of how each (terrain, gait) pair feels in
/// the 2D signal space: the calibration ellipses are fitted from samples of
/// these Gaussians, so shipped assets stay self-consistent with the
/// simulator. Deformability shifts the center outward along its direction
/// and widens the covariance by (1 + deformability).
struct FeelModel {
    Eigen::Vector2d center;
    Eigen::Matrix2d cov;
};

const FeelModel& terrain_feel(TerrainClass terrain, Gait gait);

/// Gait with the smallest generative ellipse area for a terrain (what the
/// physics uses to decide gait mismatch).
Gait true_best_gait(TerrainClass terrain);

/// pi * chi2(confidence) * sqrt(det cov) of the generative model.
double true_area(TerrainClass terrain, Gait gait, double confidence);

/// Confidence mass used for the bundled calibration assets.
inline constexpr double kAssetConfidence = 0.9999;

/// Draw one 2D feel point for a cell.
PcaPoint sample_feel(TerrainClass terrain, Gait gait, double deformability,
                     double drift, Rng& rng);

/// Fixed orthonormal embedding of the 2D feel space into the 37-dim raw
/// signal layout (what a real robot's PCA would invert).
const PcaModel& true_embedding();

/// Back-project a feel point to a raw signal with isotropic noise so that
/// project(fit, embed(p)) round-trips within the noise bound.
RawSignal embed_signal(const PcaPoint& p, double noise, Rng& rng);

/// Synthesized hip/joint positions: nominal stance plus a gait-frequency
/// oscillation whose amplitude grows with roughness and instability.
void synth_joints(double t, Gait gait, double roughness, double norm, Rng& rng,
                  double out[kJointCount]);

}  // namespace amco
