#pragma once

#include <functional>
#include <string>

#include "amco/core/config.hpp"
#include "amco/core/semantic_grid.hpp"
#include "amco/fusion/maps.hpp"
#include "amco/proprioception/pca.hpp"
#include "amco/sim/render.hpp"
#include "amco/sim/world.hpp"

namespace amco {

enum class Policy {
    Amco,
    AmcoNoReliability,  // xi fixed to 1
    AmcoNoHistory,      // C_h zeroed
    VisionOnly,         // C_p zeroed
    ProprioOnly,        // C_g and C_h zeroed, no semantic gait input
    Straight,           // goal-seeking P-control, trot, ignores maps
};

Policy policy_from_name(std::string_view name);
std::string_view policy_name(Policy p);

enum class Outcome { Success, Sinkage, Collision, Timeout, Freeze };
std::string_view outcome_name(Outcome o);

struct StepRecord {
    double t = 0.0;
    Pose pose;
    VelocityCommand cmd;
    Gait gait = Gait::Trot;
    double norm = 0.0;  // |p|_2
    double ax = 0.0, ay = 0.0, az = 0.0;
    std::array<double, kJointCount> joints{};
    double xi = 1.0;
    TerrainClass cell = TerrainClass::Stable;
    bool freeze = false;
};

struct TrialLog {
    std::string scenario;
    std::string policy;
    std::uint64_t seed = 0;
    Pose start;
    double goal_x = 0.0, goal_y = 0.0;
    std::vector<StepRecord> steps;
    Outcome outcome = Outcome::Timeout;
    double sim_time = 0.0;

    /// Line-delimited JSON: one record per step plus a trailing summary.
    std::string to_jsonl() const;
    void save_jsonl(const std::string& path) const;
    static TrialLog load_jsonl(const std::string& path);
};

/// Calibration assets consumed by a trial.
struct Assets {
    EllipseTable table;
    PcaModel pca;
    std::array<std::pair<double, double>, kJointCount> joint_reference{};

    void save(const std::string& dir) const;
    static Assets load(const std::string& dir);
};

/// Regenerate assets from the simulator's own terrain models: PCA fitted on
/// pooled traverses, one ellipse per (terrain, gait), and the stable-terrain
/// joint reference band from a 30 s calibration run.
Assets calibrate_assets(double confidence = 0.9999, int samples_per_pair = 400,
                        std::uint64_t seed = 20240501);

/// Per-cycle view of the pipeline for observers (map export, acceptance
/// probes). References are valid only during the callback.
struct StepView {
    int step = 0;
    double t = 0.0;
    const CostMap& general;
    const CostMap& history;
    const CostMap& proprio;
    const CostMap& coupled;
    const SemanticGrid& grid;
    const RgbImage& image;
    double mud_dwell = 0.0;  // cumulative seconds on deformable granular cells
};
using StepObserver = std::function<void(const StepView&)>;

/// Closed-loop perception -> fusion -> plan -> step trial at a fixed control
/// rate. (scenario, policy, seed) fully determines the log.
TrialLog run_trial(const Scenario& scenario, Policy policy, std::uint64_t seed,
                   const Assets& assets, const Params& base_params = {},
                   const StepObserver& observer = {});

/// Unicycle step with deformability slowdown: effective speed is scaled by
/// (1 - 0.5 * deformability * gait_mismatch) for the cell under the robot.
RobotState step(const World& world, const RobotState& state,
                const VelocityCommand& cmd, Gait gait, double dt);

/// One proprioceptive sample for the cell under the robot: ground-truth feel
/// point, its raw-signal embedding, and the asset-model projection.
struct ProprioSample {
    RawSignal signal;
    PcaPoint p;
    double norm = 0.0;
};
ProprioSample synthesize_proprioception(const WorldCell& cell, Gait gait,
                                        const Assets& assets, double drift,
                                        double noise, Rng& rng);

}  // namespace amco
