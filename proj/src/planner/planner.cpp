#include "amco/planner/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace amco {

// ---------------------------------------------------------------------------
// Camera
// ---------------------------------------------------------------------------

std::optional<std::pair<double, double>> CameraModel::ground_to_pixel(
    double x, double y) const {
    const double sa = std::sin(pitch), ca = std::cos(pitch);
    // Camera basis in the robot frame: right = -Y, down = (-sa, 0, -ca),
    // forward = (ca, 0, -sa); camera center at (0, 0, height).
    const double zc = x * ca + height * sa;
    if (zc <= 1e-9) return std::nullopt;
    const double xc = -y;
    const double yc = -x * sa + height * ca;
    const double u = cx + fx * xc / zc;
    const double v = cy + fy * yc / zc;
    if (u < 0.0 || u >= img_width || v < 0.0 || v >= img_height)
        return std::nullopt;
    return std::make_pair(u, v);
}

std::optional<std::pair<double, double>> CameraModel::pixel_to_ground(
    double u, double v) const {
    const double sa = std::sin(pitch), ca = std::cos(pitch);
    const double xn = (u - cx) / fx;
    const double yn = (v - cy) / fy;
    // Ray direction in the robot frame.
    const double denom = sa + yn * ca;  // -dir_z
    if (denom <= 1e-9) return std::nullopt;  // at or above the horizon
    const double t = height / denom;
    const double x = t * (ca - yn * sa);
    const double y = t * (-xn);
    return std::make_pair(x, y);
}

// ---------------------------------------------------------------------------
// Rollout and costs
// ---------------------------------------------------------------------------

std::vector<Pose> rollout(double v, double w, double horizon, double dt) {
    if (dt <= 0.0 || dt > horizon) throw Error("rollout: need 0 < dt <= horizon");
    const int steps = static_cast<int>(std::ceil(horizon / dt));
    std::vector<Pose> points;
    points.reserve(steps + 1);
    for (int k = 0; k <= steps; ++k) {
        const double t = std::min(k * dt, horizon);
        Pose p;
        if (std::abs(w) < 1e-9) {
            p.x = v * t;
            p.y = 0.0;
            p.theta = 0.0;
        } else {
            const double r = v / w;
            p.x = r * std::sin(w * t);
            p.y = r * (1.0 - std::cos(w * t));
            p.theta = wrap_angle(w * t);
        }
        points.push_back(p);
    }
    return points;
}

double min_clearance(const std::vector<Pose>& robot_frame_points,
                     const Pose& pose, const std::vector<Obstacle>& obstacles,
                     double robot_radius) {
    if (obstacles.empty()) return std::numeric_limits<double>::infinity();
    const double c = std::cos(pose.theta), s = std::sin(pose.theta);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : robot_frame_points) {
        const double wx = pose.x + c * p.x - s * p.y;
        const double wy = pose.y + s * p.x + c * p.y;
        for (const auto& ob : obstacles) {
            const double d = std::hypot(wx - ob.x, wy - ob.y) - ob.radius;
            best = std::min(best, d - robot_radius);
        }
    }
    return best;
}

std::vector<VelocityCommand> restricted_velocity_space(
    const RobotState& state, Gait commanded_gait, const PlannerParams& params,
    const std::vector<Obstacle>& obstacles) {
    const double v_cap = std::min(params.v_max, max_linear_velocity(commanded_gait));
    const double dv = params.accel_v * params.control_period;
    const double dw = params.accel_w * params.control_period;
    const double v_lo = state.vel.v - dv, v_hi = state.vel.v + dv;
    const double w_lo = state.vel.w - dw, w_hi = state.vel.w + dw;

    std::vector<VelocityCommand> admissible;
    for (int iv = 0; iv < params.grid_v; ++iv) {
        const double v =
            params.grid_v > 1 ? v_cap * iv / (params.grid_v - 1) : 0.0;
        if (v < v_lo - 1e-12 || v > v_hi + 1e-12) continue;
        for (int iw = 0; iw < params.grid_w; ++iw) {
            // Symmetric spacing with an exact zero for odd grid sizes.
            const double w =
                params.grid_w > 1
                    ? params.w_max * (2 * iw - (params.grid_w - 1)) /
                          (params.grid_w - 1)
                    : 0.0;
            if (w < w_lo - 1e-12 || w > w_hi + 1e-12) continue;
            const auto points = rollout(v, w, params.horizon, params.dt);
            const double clearance =
                min_clearance(points, state.pose, obstacles, params.robot_radius);
            if (clearance < 0.0) continue;
            admissible.push_back({v, w});
        }
    }
    return admissible;
}

std::vector<std::pair<int, int>> project_trajectory(
    const std::vector<Pose>& robot_frame_points, const CameraModel& cam,
    int grid_width, int grid_height, int n) {
    std::vector<std::pair<int, int>> cells;
    for (const auto& p : robot_frame_points) {
        const auto px = cam.ground_to_pixel(p.x, p.y);
        if (!px) continue;
        const int i = static_cast<int>(px->second) / n;
        const int j = static_cast<int>(px->first) / n;
        if (i < 0 || i >= grid_height || j < 0 || j >= grid_width) continue;
        const auto cell = std::make_pair(i, j);
        if (std::find(cells.begin(), cells.end(), cell) == cells.end())
            cells.push_back(cell);
    }
    return cells;
}

double sur_cost(const std::vector<std::pair<int, int>>& traj_cells,
                const CostMap& coupled, double u_moderate) {
    if (traj_cells.empty()) return u_moderate;
    double sum = 0.0;
    for (const auto& [i, j] : traj_cells) sum += coupled.at(i, j);
    return sum / static_cast<double>(traj_cells.size());
}

double goal_cost(const std::vector<Pose>& robot_frame_points, const Pose& pose,
                 double goal_x, double goal_y) {
    const Pose& end = robot_frame_points.back();
    const double c = std::cos(pose.theta), s = std::sin(pose.theta);
    const double ex = pose.x + c * end.x - s * end.y;
    const double ey = pose.y + s * end.x + c * end.y;
    const double eth = wrap_angle(pose.theta + end.theta);

    const double bearing = std::atan2(goal_y - ey, goal_x - ex);
    const double heading_term = std::abs(wrap_angle(bearing - eth)) / M_PI;

    const double d_now = std::hypot(goal_x - pose.x, goal_y - pose.y);
    const double d_end = std::hypot(goal_x - ex, goal_y - ey);
    const double dist_term = std::min(1.0, d_end / std::max(d_now, 1e-9));
    return 0.5 * heading_term + 0.5 * dist_term;
}

double obs_cost(double clearance, double clearance_cap) {
    if (clearance_cap <= 0.0) throw Error("obs_cost: cap must be > 0");
    const double c = 1.0 - clearance / clearance_cap;
    return std::clamp(c, 0.0, 1.0);
}

std::vector<std::pair<int, int>> footprint_cells(const CameraModel& cam,
                                                 int grid_width,
                                                 int grid_height, int n) {
    // Sample the 1 x 1 m square just ahead of the robot and collect the
    // distinct cells it lands in.
    std::vector<Pose> samples;
    const double x0 = 0.3;
    const int k = 9;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            samples.push_back(
                {x0 + i / (k - 1.0), -0.5 + j / (k - 1.0), 0.0});
    return project_trajectory(samples, cam, grid_width, grid_height, n);
}

PlanResult plan(const RobotState& state, const CostMap& coupled, double goal_x,
                double goal_y, const std::vector<Obstacle>& obstacles,
                const PlannerParams& params, const CameraModel& cam, int n,
                Gait commanded_gait) {
    const auto candidates =
        restricted_velocity_space(state, commanded_gait, params, obstacles);

    PlanResult best;
    best.gait = commanded_gait;
    if (candidates.empty()) {
        best.freeze = true;
        return best;  // stop command (0, 0)
    }

    bool have_best = false;
    double best_v = 0.0, best_w = 0.0;
    for (const auto& cand : candidates) {
        const auto points = rollout(cand.v, cand.w, params.horizon, params.dt);
        const double clearance =
            min_clearance(points, state.pose, obstacles, params.robot_radius);
        const auto cells =
            project_trajectory(points, cam, coupled.width(), coupled.height(), n);
        const double sur = sur_cost(cells, coupled, params.u_moderate);
        const double g = goal_cost(points, state.pose, goal_x, goal_y);
        const double o = obs_cost(clearance, params.clearance_cap);
        const double sur_term = params.normalize_sur ? sur / 255.0 : sur;
        const double j = params.beta_goal * g + params.beta_obs * o +
                         params.beta_sur * sur_term;

        // Deterministic, evaluation-order-independent selection:
        // (J, -v, |w|, w) lexicographic.
        bool take = false;
        if (!have_best) {
            take = true;
        } else if (j != best.j) {
            take = j < best.j;
        } else if (cand.v != best_v) {
            take = cand.v > best_v;
        } else if (std::abs(cand.w) != std::abs(best_w)) {
            take = std::abs(cand.w) < std::abs(best_w);
        } else {
            take = cand.w < best_w;
        }
        if (take) {
            have_best = true;
            best_v = cand.v;
            best_w = cand.w;
            best.j = j;
            best.goal_cost = g;
            best.obs_cost = o;
            best.sur_cost = sur;
        }
    }

    best.cmd.v = std::min(best_v, max_linear_velocity(commanded_gait));
    best.cmd.w = best_w;
    return best;
}

}  // namespace amco
