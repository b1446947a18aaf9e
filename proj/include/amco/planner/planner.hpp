#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "amco/core/cost_map.hpp"
#include "amco/core/types.hpp"

namespace amco {

// ---------------------------------------------------------------------------
// Camera
// ---------------------------------------------------------------------------

/// Forward-looking pinhole camera. Robot frame: X forward, Y left, Z up;
/// the camera sits at (0, 0, height) pitched down toward the ground ahead.
struct CameraModel {
    int img_width = 320;
    int img_height = 240;
    double fx = 260.0;
    double fy = 260.0;
    double cx = 159.5;
    double cy = 119.5;
    double height = 0.5;   // meters above ground
    double pitch = 0.38;   // radians, downward

    /// Robot-frame ground point (z = 0) -> pixel (u, v); nullopt when the
    /// point is behind the camera or outside the image.
    std::optional<std::pair<double, double>> ground_to_pixel(double x,
                                                             double y) const;

    /// Pixel -> robot-frame ground point; nullopt for rays at or above the
    /// horizon (sky).
    std::optional<std::pair<double, double>> pixel_to_ground(double u,
                                                             double v) const;
};

// ---------------------------------------------------------------------------
// Planner types
// ---------------------------------------------------------------------------

struct Obstacle {
    double x = 0.0;
    double y = 0.0;
    double radius = 0.0;
};

struct PlannerParams {
    double v_max = 0.6;            // m/s (paper envelope)
    double w_max = 0.2;            // rad/s
    double accel_v = 0.5;          // m/s^2
    double accel_w = 0.5;          // rad/s^2
    double control_period = 0.1;   // s, one control cycle
    double horizon = 2.0;          // s, rollout length (Delta T)
    double dt = 0.1;               // s, rollout step
    int grid_v = 13;               // velocity samples
    int grid_w = 13;               // angular velocity samples
    double beta_goal = 2.4;
    double beta_obs = 3.2;
    double beta_sur = 0.05;
    double clearance_cap = 1.0;    // m
    double robot_radius = 0.3;     // m
    bool normalize_sur = false;    // raw 0-255 sur by default
    double u_moderate = 127.0;     // sur fallback for empty projections
};

struct RobotState {
    Pose pose;
    VelocityCommand vel;
    Gait gait = Gait::Trot;
};

struct PlanResult {
    VelocityCommand cmd;
    Gait gait = Gait::Trot;
    bool freeze = false;  // no admissible candidate, stop issued
    double j = 0.0;
    double goal_cost = 0.0;
    double obs_cost = 0.0;
    double sur_cost = 0.0;  // raw 0-255 mean over the winning trajectory
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Unicycle extrapolation in the robot frame: straight line for w = 0,
/// constant-curvature arc otherwise. ceil(horizon/dt) + 1 poses starting at
/// the origin.
std::vector<Pose> rollout(double v, double w, double horizon, double dt);

/// Min over the rollout of (distance to obstacle surface - robot radius),
/// world frame. Infinity when there are no obstacles.
double min_clearance(const std::vector<Pose>& robot_frame_points,
                     const Pose& pose, const std::vector<Obstacle>& obstacles,
                     double robot_radius);

/// Dynamically feasible, obstacle-admissible candidate commands: the uniform
/// grid over [0, gait v_max] x [-w_max, w_max] intersected with the dynamic
/// window and filtered so every rollout clears obstacles by the robot radius.
std::vector<VelocityCommand> restricted_velocity_space(
    const RobotState& state, Gait commanded_gait, const PlannerParams& params,
    const std::vector<Obstacle>& obstacles);

/// Perspective projection of robot-frame trajectory points onto cost-map
/// cells; invisible points dropped, duplicates removed preserving order.
std::vector<std::pair<int, int>> project_trajectory(
    const std::vector<Pose>& robot_frame_points, const CameraModel& cam,
    int grid_width, int grid_height, int n);

/// Mean coupled cost over the projected cells; U for empty projections.
double sur_cost(const std::vector<std::pair<int, int>>& traj_cells,
                const CostMap& coupled, double u_moderate = 127.0);

/// Goal attraction in [0, 1]: endpoint-heading error (/pi) blended 50/50
/// with the normalized remaining endpoint-to-goal distance.
double goal_cost(const std::vector<Pose>& robot_frame_points,
                 const Pose& pose, double goal_x, double goal_y);

/// Obstacle proximity in [0, 1]: 1 - clearance / cap, clamped.
double obs_cost(double clearance, double clearance_cap);

/// Grid cells covering the 1 x 1 m square directly ahead of the robot, for
/// Eq.-2-style gait selection.
std::vector<std::pair<int, int>> footprint_cells(const CameraModel& cam,
                                                 int grid_width,
                                                 int grid_height, int n);

/// One planning cycle: argmin of J = b1 goal + b2 obs + b3 sur over the
/// restricted velocity space. Ties break toward larger v, then smaller |w|,
/// then negative w. Empty candidate set stops the robot and sets `freeze`.
PlanResult plan(const RobotState& state, const CostMap& coupled,
                double goal_x, double goal_y,
                const std::vector<Obstacle>& obstacles,
                const PlannerParams& params, const CameraModel& cam, int n,
                Gait commanded_gait);

}  // namespace amco
