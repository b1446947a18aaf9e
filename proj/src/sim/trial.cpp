#include "amco/sim/trial.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "amco/reliability/haar_blur.hpp"
#include "amco/sim/terrain_feel.hpp"

namespace amco {

using nlohmann::json;

Policy policy_from_name(std::string_view name) {
    if (name == "amco") return Policy::Amco;
    if (name == "amco_no_reliability") return Policy::AmcoNoReliability;
    if (name == "amco_no_history") return Policy::AmcoNoHistory;
    if (name == "vision_only") return Policy::VisionOnly;
    if (name == "proprio_only") return Policy::ProprioOnly;
    if (name == "straight") return Policy::Straight;
    throw Error("unknown policy: " + std::string(name));
}

std::string_view policy_name(Policy p) {
    switch (p) {
        case Policy::Amco: return "amco";
        case Policy::AmcoNoReliability: return "amco_no_reliability";
        case Policy::AmcoNoHistory: return "amco_no_history";
        case Policy::VisionOnly: return "vision_only";
        case Policy::ProprioOnly: return "proprio_only";
        case Policy::Straight: return "straight";
    }
    return "amco";
}

std::string_view outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Success: return "success";
        case Outcome::Sinkage: return "sinkage";
        case Outcome::Collision: return "collision";
        case Outcome::Timeout: return "timeout";
        case Outcome::Freeze: return "freeze";
    }
    return "timeout";
}

static Outcome outcome_from_name(std::string_view name) {
    if (name == "success") return Outcome::Success;
    if (name == "sinkage") return Outcome::Sinkage;
    if (name == "collision") return Outcome::Collision;
    if (name == "timeout") return Outcome::Timeout;
    if (name == "freeze") return Outcome::Freeze;
    throw Error("unknown outcome: " + std::string(name));
}

// ---------------------------------------------------------------------------
// Physics step and proprioception synthesis
// ---------------------------------------------------------------------------

RobotState step(const World& world, const RobotState& state,
                const VelocityCommand& cmd, Gait gait, double dt) {
    if (dt <= 0.0) throw Error("step: dt must be positive");
    const WorldCell& cell = world.cell_at(state.pose.x, state.pose.y);
    const bool mismatch =
        is_walkable(cell.terrain) && gait != true_best_gait(cell.terrain);
    const double slowdown =
        1.0 - 0.5 * static_cast<double>(cell.deformability) * (mismatch ? 1.0 : 0.0);
    const double v = cmd.v * slowdown;
    const double w = cmd.w;

    RobotState next = state;
    if (std::abs(w) < 1e-9) {
        next.pose.x += v * std::cos(state.pose.theta) * dt;
        next.pose.y += v * std::sin(state.pose.theta) * dt;
    } else {
        const double r = v / w;
        next.pose.x += r * (std::sin(state.pose.theta + w * dt) -
                            std::sin(state.pose.theta));
        next.pose.y += r * (std::cos(state.pose.theta) -
                            std::cos(state.pose.theta + w * dt));
        next.pose.theta += w * dt;
    }
    next.pose.normalize();
    next.vel = cmd;
    next.gait = gait;
    return next;
}

ProprioSample synthesize_proprioception(const WorldCell& cell, Gait gait,
                                        const Assets& assets, double drift,
                                        double noise, Rng& rng) {
    if (!is_walkable(cell.terrain))
        throw Error("synthesize_proprioception: cell terrain has no feel model");
    ProprioSample out;
    const PcaPoint p_true =
        sample_feel(cell.terrain, gait, cell.deformability, drift, rng);
    out.signal = embed_signal(p_true, noise, rng);
    out.p = project(assets.pca, out.signal);
    out.norm = traversability(out.p);
    return out;
}

// ---------------------------------------------------------------------------
// Trial loop
// ---------------------------------------------------------------------------

namespace {

CostMap zero_like(const CostMap& m, MapKind kind) {
    return CostMap(m.width(), m.height(), kind, 0.0f);
}

VelocityCommand straight_control(const Pose& pose, double gx, double gy,
                                 const PlannerParams& pp) {
    const double bearing = std::atan2(gy - pose.y, gx - pose.x);
    const double err = wrap_angle(bearing - pose.theta);
    VelocityCommand cmd;
    cmd.w = std::clamp(1.5 * err, -pp.w_max, pp.w_max);
    const double cap = std::min(pp.v_max, max_linear_velocity(Gait::Trot));
    cmd.v = cap * std::max(0.0, 1.0 - std::abs(err) / M_PI);
    return cmd;
}

}  // namespace

TrialLog run_trial(const Scenario& scenario, Policy policy, std::uint64_t seed,
                   const Assets& assets, const Params& base_params,
                   const StepObserver& observer) {
    Params params = base_params;
    params.apply_overrides(scenario.overrides);
    if (params.blur_provider == BlurProviderKind::External)
        throw Error("run_trial: external blur provider has no registered hook");
    assets.table.validate();

    const World& world = scenario.world;
    const CameraModel& cam = params.camera;
    const int grid_w = (cam.img_width + params.n - 1) / params.n;
    const int grid_h = (cam.img_height + params.n - 1) / params.n;
    const auto obstacles = world.obstacle_circles();
    const auto footprint = footprint_cells(cam, grid_w, grid_h, params.n);

    TrialLog log;
    log.scenario = scenario.name;
    log.policy = std::string(policy_name(policy));
    log.seed = seed;
    log.start = world.start;
    log.goal_x = world.goal_x;
    log.goal_y = world.goal_y;

    Rng rng(seed);
    const std::uint64_t corruption_salt = rng.next_u64();
    RobotState state{world.start, {0.0, 0.0}, Gait::Trot};
    HistoryStore history(params.fusion.t_window);

    Outcome outcome = Outcome::Timeout;
    int sink_run = 0;
    int freeze_run = 0;
    double mud_dwell = 0.0;
    const double dt = params.sim.control_dt;
    const int max_steps = static_cast<int>(std::ceil(scenario.limits.t_max / dt));

    for (int k = 0; k < max_steps; ++k) {
        const double t = k * dt;
        const WorldCell& cell = world.cell_at(state.pose.x, state.pose.y);

        // Proprioception for the cell under foot.
        const ProprioSample sample = synthesize_proprioception(
            cell, state.gait, assets, params.sim.drift, params.sim.signal_noise,
            rng);
        history.record(cell.terrain, sample.norm, t);

        // Vision.
        const RenderResult rr = render_camera(
            world, state.pose, cam, std::abs(state.vel.v),
            params.sim.blur_speed_gain, params.sim.blur_rough_gain, rng);
        const double r_mean = brightness_mean(rr.image);
        const double r_luma = luma(rr.image);
        const double r_hwt = haar_sharpness(rr.image).r_hwt;
        const double o_truth = 100.0 * (1.0 - rr.blur_level);

        // Physical segmentation degradation follows the frame's actual
        // quality; the policy's xi below is its belief about it.
        const double xi_true = reliability_score(r_mean, r_luma, r_hwt, o_truth,
                                                 params.lambdas);
        const LabelImage seg = corrupt_segmentation(rr.labels, xi_true, corruption_salt);
        const SemanticGrid grid = discretize_semantic(seg, params.n);

        double xi = 1.0;
        if (policy != Policy::AmcoNoReliability) {
            const double o = params.blur_provider == BlurProviderKind::GroundTruth
                                 ? o_truth
                                 : r_hwt;
            xi = reliability_score(r_mean, r_luma, r_hwt, o, params.lambdas);
        }

        // Maps, with the policy's ablations.
        CostMap cg = general_knowledge_map(grid, assets.table, params.fusion);
        CostMap ch = policy == Policy::AmcoNoHistory
                         ? zero_like(cg, MapKind::History)
                         : history_map(history, cg, grid, params.fusion);
        CostMap cp = proprioception_map(sample.norm, grid_w, grid_h, params.fusion);
        if (policy == Policy::VisionOnly) cp = zero_like(cg, MapKind::Proprio);
        if (policy == Policy::ProprioOnly) {
            cg = zero_like(cg, MapKind::General);
            ch = zero_like(cg, MapKind::History);
        }
        const CostMap coupled = couple(cg, ch, cp, xi);

        // Gait (Eq.-2 pathway needs the semantic grid; proprio-only and the
        // straight baseline have no vision input and keep their gait).
        Gait g_cmd = state.gait;
        if (policy != Policy::ProprioOnly && policy != Policy::Straight) {
            g_cmd = select_gait(grid, assets.table, footprint).value_or(state.gait);
        }

        // Action.
        VelocityCommand cmd;
        bool froze = false;
        if (policy == Policy::Straight) {
            cmd = straight_control(state.pose, world.goal_x, world.goal_y,
                                   params.planner);
        } else {
            const PlanResult pr =
                plan(state, coupled, world.goal_x, world.goal_y, obstacles,
                     params.planner, cam, params.n, g_cmd);
            cmd = pr.cmd;
            froze = pr.freeze;
        }

        if (is_walkable(cell.terrain) && cell.terrain == TerrainClass::Granular &&
            cell.deformability > 0.2f)
            mud_dwell += dt;

        StepRecord rec;
        rec.t = t;
        rec.pose = state.pose;
        rec.cmd = cmd;
        rec.gait = g_cmd;
        rec.norm = sample.norm;
        const bool matched =
            is_walkable(cell.terrain) && state.gait == true_best_gait(cell.terrain);
        const double accel_base = matched ? params.sim.accel_base_matched
                                          : params.sim.accel_base_mismatched;
        const double accel_scale =
            accel_base * (1.0 + cell.roughness + sample.norm);
        rec.ax = accel_scale * rng.normal();
        rec.ay = accel_scale * rng.normal();
        rec.az = accel_scale * rng.normal();
        synth_joints(t, state.gait, cell.roughness, sample.norm, rng,
                     rec.joints.data());
        rec.xi = xi;
        rec.cell = cell.terrain;
        rec.freeze = froze;
        log.steps.push_back(rec);
        log.sim_time = t + dt;

        if (observer)
            observer(StepView{k, t, cg, ch, cp, coupled, grid, rr.image,
                              mud_dwell});

        // Failure bookkeeping on the cell we stood on this cycle.
        if (cell.deformability > 0.5f && sample.norm > params.sim.theta_fail) {
            if (++sink_run >= params.sim.fail_steps) {
                outcome = Outcome::Sinkage;
                break;
            }
        } else {
            sink_run = 0;
        }
        if (froze) {
            if (++freeze_run >= params.sim.freeze_steps) {
                outcome = Outcome::Freeze;
                break;
            }
        } else {
            freeze_run = 0;
        }

        state = step(world, state, cmd, g_cmd, dt);
        if (!world.in_bounds(state.pose.x, state.pose.y) ||
            world.cell_at(state.pose.x, state.pose.y).obstacle) {
            outcome = Outcome::Collision;
            break;
        }
        if (std::hypot(world.goal_x - state.pose.x,
                       world.goal_y - state.pose.y) <= scenario.limits.goal_radius) {
            outcome = Outcome::Success;
            break;
        }
    }

    // Terminal record so the logged polyline ends where the trial did.
    if (!log.steps.empty()) {
        StepRecord last = log.steps.back();
        last.t += dt;
        last.pose = state.pose;
        last.cmd = {0.0, 0.0};
        last.ax = last.ay = last.az = 0.0;
        for (int j = 0; j < kJointCount; ++j)
            last.joints[j] = true_embedding().mean(j);  // resting stance
        last.freeze = false;
        log.steps.push_back(last);
        log.sim_time = last.t;
    }

    log.outcome = outcome;
    return log;
}

// ---------------------------------------------------------------------------
// Log serialization
// ---------------------------------------------------------------------------

std::string TrialLog::to_jsonl() const {
    std::string out;
    out.reserve(steps.size() * 256);
    for (const auto& s : steps) {
        json j{{"t", s.t},
               {"x", s.pose.x},
               {"y", s.pose.y},
               {"theta", s.pose.theta},
               {"v", s.cmd.v},
               {"w", s.cmd.w},
               {"gait", gait_name(s.gait)},
               {"norm", s.norm},
               {"ax", s.ax},
               {"ay", s.ay},
               {"az", s.az},
               {"joints", s.joints},
               {"xi", s.xi},
               {"cell", terrain_name(s.cell)},
               {"freeze", s.freeze}};
        out += j.dump();
        out += '\n';
    }
    json summary{{"summary",
                  {{"scenario", scenario},
                   {"policy", policy},
                   {"seed", seed},
                   {"outcome", outcome_name(outcome)},
                   {"steps", steps.size()},
                   {"sim_time", sim_time},
                   {"start", {start.x, start.y, start.theta}},
                   {"goal", {goal_x, goal_y}}}}};
    out += summary.dump();
    out += '\n';
    return out;
}

void TrialLog::save_jsonl(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << to_jsonl();
    if (!out) throw Error("write failed: " + path);
}

TrialLog TrialLog::load_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open trial log: " + path);
    TrialLog log;
    std::string line;
    bool saw_summary = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw Error("trial log " + path + ": " + e.what());
        }
        if (j.contains("summary")) {
            const json& s = j.at("summary");
            log.scenario = s.at("scenario").get<std::string>();
            log.policy = s.at("policy").get<std::string>();
            log.seed = s.at("seed").get<std::uint64_t>();
            log.outcome = outcome_from_name(s.at("outcome").get<std::string>());
            log.sim_time = s.at("sim_time").get<double>();
            log.start.x = s.at("start").at(0).get<double>();
            log.start.y = s.at("start").at(1).get<double>();
            log.start.theta = s.at("start").at(2).get<double>();
            log.goal_x = s.at("goal").at(0).get<double>();
            log.goal_y = s.at("goal").at(1).get<double>();
            saw_summary = true;
            continue;
        }
        StepRecord r;
        r.t = j.at("t").get<double>();
        r.pose = {j.at("x").get<double>(), j.at("y").get<double>(),
                  j.at("theta").get<double>()};
        r.cmd = {j.at("v").get<double>(), j.at("w").get<double>()};
        r.gait = gait_from_name(j.at("gait").get<std::string>());
        r.norm = j.at("norm").get<double>();
        r.ax = j.at("ax").get<double>();
        r.ay = j.at("ay").get<double>();
        r.az = j.at("az").get<double>();
        const auto& joints = j.at("joints");
        for (int i = 0; i < kJointCount; ++i) r.joints[i] = joints.at(i).get<double>();
        r.xi = j.at("xi").get<double>();
        r.cell = terrain_from_name(j.at("cell").get<std::string>());
        r.freeze = j.at("freeze").get<bool>();
        log.steps.push_back(r);
    }
    if (!saw_summary) throw Error("trial log missing summary line: " + path);
    return log;
}

}  // namespace amco
