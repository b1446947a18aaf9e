#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "amco/core/types.hpp"

namespace amco {

/// Raw proprioceptive signal layout: 12 joint positions (rad), 12 joint
/// velocities (rad/s), 12 joint forces (N-m), battery current (A).
inline constexpr int kSignalDim = 37;
inline constexpr int kJointCount = 12;

using RawSignal = Eigen::Matrix<double, kSignalDim, 1>;
using PcaPoint = Eigen::Vector2d;

/// Top-2 principal subspace of the raw signal distribution.
/// Component rows are orthonormal; eigenvalues sorted descending; the first
/// entry of each component with |entry| > 1e-12 is made non-negative so fits
/// are reproducible across runs and platforms.
struct PcaModel {
    RawSignal mean = RawSignal::Zero();
    Eigen::Matrix<double, 2, kSignalDim> components =
        Eigen::Matrix<double, 2, kSignalDim>::Zero();
    Eigen::Vector2d eigenvalues = Eigen::Vector2d::Zero();

    void save(const std::string& path) const;
    static PcaModel load(const std::string& path);
};

/// Fit the top-2 principal directions of the mean-centered sample covariance.
/// Requires >= 3 samples with variance in at least 2 directions.
PcaModel fit_pca(const std::vector<RawSignal>& samples);

/// p = components * (s - mean)
PcaPoint project(const PcaModel& model, const RawSignal& s);

/// Traversability measure: Euclidean norm of the projected point.
inline double traversability(const PcaPoint& p) { return p.norm(); }

}  // namespace amco
