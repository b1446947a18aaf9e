#pragma once

#include <string>
#include <vector>

#include "amco/sim/trial.hpp"

namespace amco {

using ReferenceJointRange = std::array<std::pair<double, double>, kJointCount>;

/// #Success / #trials.
double success_rate(const std::vector<TrialLog>& trials);

/// Polyline length of the logged poses divided by the straight-line
/// start-goal distance. Unsuccessful trials measure start to failure point
/// over the same denominator.
double normalized_trajectory_length(const TrialLog& log);

/// E_total = sum over samples of ax^2 + ay^2 + az^2.
double imu_energy_density(const TrialLog& log);

/// Cumulative out-of-band deviation of the joint positions against the
/// stable-terrain reference: below-min and above-max excesses summed over
/// joints and time.
double vibration_cost(const TrialLog& log, const ReferenceJointRange& ref);

/// One aggregated row per (policy, scenario): success rate and trajectory
/// length over all trials, IMU energy over the successful trials only,
/// vibration cost over all trials.
struct MetricsRow {
    std::string scenario;
    std::string policy;
    int trials = 0;
    int successes = 0;
    double success_rate = 0.0;
    double mean_norm_traj_len = 0.0;
    double mean_imu_energy = 0.0;  // NaN when no trial succeeded
    double mean_vibration = 0.0;
};

MetricsRow aggregate(const std::vector<TrialLog>& trials,
                     const ReferenceJointRange& ref);

/// CSV with a header row; one row per policy x scenario.
std::string report_csv(const std::vector<MetricsRow>& rows);
/// Fixed-width text table grouped by metric.
std::string report_table(const std::vector<MetricsRow>& rows);

}  // namespace amco
