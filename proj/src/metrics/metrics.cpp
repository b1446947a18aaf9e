#include "amco/metrics/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace amco {

double success_rate(const std::vector<TrialLog>& trials) {
    if (trials.empty()) throw Error("success_rate: no trials");
    int ok = 0;
    for (const auto& t : trials)
        if (t.outcome == Outcome::Success) ++ok;
    return static_cast<double>(ok) / static_cast<double>(trials.size());
}

double normalized_trajectory_length(const TrialLog& log) {
    if (log.steps.size() < 2)
        throw Error("normalized_trajectory_length: need at least 2 poses");
    const double straight =
        std::hypot(log.goal_x - log.start.x, log.goal_y - log.start.y);
    if (straight <= 1e-12)
        throw Error("normalized_trajectory_length: zero start-goal distance");
    double len = 0.0;
    for (std::size_t i = 1; i < log.steps.size(); ++i) {
        len += std::hypot(log.steps[i].pose.x - log.steps[i - 1].pose.x,
                          log.steps[i].pose.y - log.steps[i - 1].pose.y);
    }
    return len / straight;
}

double imu_energy_density(const TrialLog& log) {
    double e = 0.0;
    for (const auto& s : log.steps)
        e += s.ax * s.ax + s.ay * s.ay + s.az * s.az;
    return e;
}

double vibration_cost(const TrialLog& log, const ReferenceJointRange& ref) {
    double total = 0.0;
    for (const auto& s : log.steps) {
        for (int j = 0; j < kJointCount; ++j) {
            const double p = s.joints[j];
            const auto [lo, hi] = ref[j];
            if (lo > hi) throw Error("vibration_cost: inverted reference band");
            if (p < lo)
                total += lo - p;
            else if (p > hi)
                total += p - hi;
        }
    }
    return total;
}

MetricsRow aggregate(const std::vector<TrialLog>& trials,
                     const ReferenceJointRange& ref) {
    if (trials.empty()) throw Error("aggregate: no trials");
    MetricsRow row;
    row.scenario = trials.front().scenario;
    row.policy = trials.front().policy;
    row.trials = static_cast<int>(trials.size());

    double len_sum = 0.0, vib_sum = 0.0, imu_sum = 0.0;
    for (const auto& t : trials) {
        if (t.outcome == Outcome::Success) {
            ++row.successes;
            imu_sum += imu_energy_density(t);
        }
        len_sum += normalized_trajectory_length(t);
        vib_sum += vibration_cost(t, ref);
    }
    row.success_rate = static_cast<double>(row.successes) / row.trials;
    row.mean_norm_traj_len = len_sum / row.trials;
    row.mean_imu_energy = row.successes > 0
                              ? imu_sum / row.successes
                              : std::numeric_limits<double>::quiet_NaN();
    row.mean_vibration = vib_sum / row.trials;
    return row;
}

namespace {
std::string fmt(double v, int prec = 3) {
    if (std::isnan(v)) return "-";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}
}  // namespace

std::string report_csv(const std::vector<MetricsRow>& rows) {
    std::ostringstream out;
    out << "scenario,policy,trials,successes,success_rate,"
           "mean_norm_traj_len,mean_imu_energy,mean_vibration_cost\n";
    for (const auto& r : rows) {
        out << r.scenario << ',' << r.policy << ',' << r.trials << ','
            << r.successes << ',' << fmt(r.success_rate, 4) << ','
            << fmt(r.mean_norm_traj_len, 4) << ',' << fmt(r.mean_imu_energy, 2)
            << ',' << fmt(r.mean_vibration, 3) << '\n';
    }
    return out.str();
}

std::string report_table(const std::vector<MetricsRow>& rows) {
    std::ostringstream out;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-22s %-20s %9s %9s %12s %12s\n",
                  "scenario", "policy", "success%", "traj-len", "imu-energy",
                  "vibration");
    out << buf;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%-22s %-20s %9s %9s %12s %12s\n",
                      r.scenario.c_str(), r.policy.c_str(),
                      fmt(100.0 * r.success_rate, 1).c_str(),
                      fmt(r.mean_norm_traj_len, 3).c_str(),
                      fmt(r.mean_imu_energy, 1).c_str(),
                      fmt(r.mean_vibration, 2).c_str());
        out << buf;
    }
    return out.str();
}

}  // namespace amco
