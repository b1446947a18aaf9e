#include "amco/core/config.hpp"

#include <charconv>

namespace amco {
namespace {

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(value, &pos);
        if (pos != value.size()) throw Error("");
        return d;
    } catch (...) {
        throw Error("override " + key + ": cannot parse '" + value +
                    "' as a number");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    const double d = parse_double(key, value);
    const int i = static_cast<int>(d);
    if (static_cast<double>(i) != d)
        throw Error("override " + key + ": expected an integer");
    return i;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "on") return true;
    if (value == "false" || value == "0" || value == "off") return false;
    throw Error("override " + key + ": expected a boolean");
}

}  // namespace

void Params::apply_override(const std::string& key, const std::string& value) {
    if (key == "core.n") { n = parse_int(key, value); return; }

    if (key == "fusion.gamma") { fusion.gamma = parse_double(key, value); return; }
    if (key == "fusion.alpha") { fusion.alpha = parse_double(key, value); return; }
    if (key == "fusion.kappa") { fusion.kappa = parse_double(key, value); return; }
    if (key == "fusion.u_moderate") {
        fusion.u_moderate = parse_double(key, value);
        planner.u_moderate = fusion.u_moderate;
        return;
    }
    if (key == "fusion.delta") { fusion.delta = parse_double(key, value); return; }
    if (key == "fusion.t_window") { fusion.t_window = parse_double(key, value); return; }

    if (key == "reliability.lambda1") { lambdas.lambda1 = parse_double(key, value); return; }
    if (key == "reliability.lambda2") { lambdas.lambda2 = parse_double(key, value); return; }
    if (key == "reliability.lambda3") { lambdas.lambda3 = parse_double(key, value); return; }
    if (key == "reliability.lambda4") { lambdas.lambda4 = parse_double(key, value); return; }
    if (key == "reliability.blur_provider") {
        blur_provider = blur_provider_from_name(value);
        return;
    }

    if (key == "planner.v_max") { planner.v_max = parse_double(key, value); return; }
    if (key == "planner.w_max") { planner.w_max = parse_double(key, value); return; }
    if (key == "planner.accel_v") { planner.accel_v = parse_double(key, value); return; }
    if (key == "planner.accel_w") { planner.accel_w = parse_double(key, value); return; }
    if (key == "planner.horizon") { planner.horizon = parse_double(key, value); return; }
    if (key == "planner.dt") { planner.dt = parse_double(key, value); return; }
    if (key == "planner.grid_v") { planner.grid_v = parse_int(key, value); return; }
    if (key == "planner.grid_w") { planner.grid_w = parse_int(key, value); return; }
    if (key == "planner.beta1") { planner.beta_goal = parse_double(key, value); return; }
    if (key == "planner.beta2") { planner.beta_obs = parse_double(key, value); return; }
    if (key == "planner.beta3") { planner.beta_sur = parse_double(key, value); return; }
    if (key == "planner.clearance_cap") { planner.clearance_cap = parse_double(key, value); return; }
    if (key == "planner.robot_radius") { planner.robot_radius = parse_double(key, value); return; }
    if (key == "planner.normalize_sur") { planner.normalize_sur = parse_bool(key, value); return; }

    if (key == "camera.width") { camera.img_width = parse_int(key, value); return; }
    if (key == "camera.height") { camera.img_height = parse_int(key, value); return; }
    if (key == "camera.fx") { camera.fx = parse_double(key, value); return; }
    if (key == "camera.fy") { camera.fy = parse_double(key, value); return; }
    if (key == "camera.cx") { camera.cx = parse_double(key, value); return; }
    if (key == "camera.cy") { camera.cy = parse_double(key, value); return; }
    if (key == "camera.camera_height") { camera.height = parse_double(key, value); return; }
    if (key == "camera.pitch") { camera.pitch = parse_double(key, value); return; }

    if (key == "sim.control_dt") { sim.control_dt = parse_double(key, value); return; }
    if (key == "sim.theta_fail") { sim.theta_fail = parse_double(key, value); return; }
    if (key == "sim.fail_steps") { sim.fail_steps = parse_int(key, value); return; }
    if (key == "sim.freeze_steps") { sim.freeze_steps = parse_int(key, value); return; }
    if (key == "sim.drift") { sim.drift = parse_double(key, value); return; }
    if (key == "sim.signal_noise") { sim.signal_noise = parse_double(key, value); return; }
    if (key == "sim.blur_speed_gain") { sim.blur_speed_gain = parse_double(key, value); return; }
    if (key == "sim.blur_rough_gain") { sim.blur_rough_gain = parse_double(key, value); return; }
    if (key == "sim.accel_base_matched") { sim.accel_base_matched = parse_double(key, value); return; }
    if (key == "sim.accel_base_mismatched") { sim.accel_base_mismatched = parse_double(key, value); return; }

    throw Error("unknown configuration key: " + key);
}

void Params::apply_overrides(const std::map<std::string, std::string>& kv) {
    for (const auto& [k, v] : kv) apply_override(k, v);
}

}  // namespace amco
