#pragma once

#include <map>
#include <string>

#include "amco/fusion/maps.hpp"
#include "amco/planner/planner.hpp"
#include "amco/reliability/reliability.hpp"

namespace amco {

/// Simulation-side knobs (control rate, failure model, sensor synthesis).
struct SimParams {
    double control_dt = 0.1;        // s, 10 Hz perception + control
    double theta_fail = 3.5;        // sinkage norm threshold
    int fail_steps = 10;            // consecutive steps above threshold
    int freeze_steps = 20;          // consecutive stop commands -> Freeze
    double drift = 5.5;             // deformability -> proprio norm drift
    double signal_noise = 0.01;     // raw-signal isotropic noise
    double blur_speed_gain = 6.0;   // box-blur radius per m/s
    double blur_rough_gain = 3.0;   // box-blur radius per unit roughness
    double accel_base_matched = 0.06;
    double accel_base_mismatched = 0.13;
};

/// Every tunable in one place. Paper-reported values are the defaults;
/// dotted-key overrides (e.g. "fusion.alpha=4.5") come from scenario files
/// and the command line.
struct Params {
    int n = 40;  // semantic grid cell side, pixels
    FusionParams fusion;
    ReliabilityWeights lambdas;
    BlurProviderKind blur_provider = BlurProviderKind::Wavelet;
    PlannerParams planner;
    CameraModel camera;
    SimParams sim;

    /// Apply one "section.key=value" override; throws on unknown keys or
    /// unparsable values.
    void apply_override(const std::string& key, const std::string& value);
    void apply_overrides(const std::map<std::string, std::string>& kv);
};

}  // namespace amco
