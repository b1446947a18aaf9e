#include <doctest.h>

#include "amco/metrics/metrics.hpp"

using namespace amco;

namespace {

TrialLog make_log(std::vector<Pose> poses, Outcome outcome, Pose start,
                  double gx, double gy) {
    TrialLog log;
    log.scenario = "synthetic";
    log.policy = "amco";
    log.start = start;
    log.goal_x = gx;
    log.goal_y = gy;
    log.outcome = outcome;
    double t = 0.0;
    for (const auto& p : poses) {
        StepRecord r;
        r.t = t;
        t += 0.1;
        r.pose = p;
        log.steps.push_back(r);
    }
    return log;
}

ReferenceJointRange flat_ref(double lo, double hi) {
    ReferenceJointRange ref;
    for (auto& band : ref) band = {lo, hi};
    return ref;
}

}  // namespace

TEST_CASE("success rate") {
    std::vector<TrialLog> trials;
    for (int i = 0; i < 10; ++i)
        trials.push_back(make_log({{0, 0, 0}, {1, 0, 0}},
                                  i < 9 ? Outcome::Success : Outcome::Sinkage,
                                  {0, 0, 0}, 1, 0));
    CHECK(success_rate(trials) == doctest::Approx(0.9));

    std::vector<TrialLog> all_ok(trials.begin(), trials.begin() + 9);
    CHECK(success_rate(all_ok) == 1.0);

    // Count oracle over a mixed batch.
    int want = 0;
    for (const auto& t : trials)
        if (t.outcome == Outcome::Success) ++want;
    CHECK(success_rate(trials) == doctest::Approx(double(want) / trials.size()));

    CHECK_THROWS_AS(success_rate({}), Error);
}

TEST_CASE("normalized trajectory length") {
    // Straight run: ratio 1.
    const TrialLog straight = make_log(
        {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {5, 0, 0}},
        Outcome::Success, {0, 0, 0}, 5, 0);
    CHECK(normalized_trajectory_length(straight) == doctest::Approx(1.0));

    // L-shaped path with legs 3 and 4 to a goal 5 away: 7/5 = 1.4.
    const TrialLog ell = make_log({{0, 0, 0}, {3, 0, 0}, {3, 4, 0}},
                                  Outcome::Success, {0, 0, 0}, 3, 4);
    CHECK(normalized_trajectory_length(ell) == doctest::Approx(1.4));

    // Triangle inequality: any goal-reaching path scores >= 1.
    CHECK(normalized_trajectory_length(ell) >= 1.0);

    const TrialLog degenerate =
        make_log({{0, 0, 0}, {1, 0, 0}}, Outcome::Success, {0, 0, 0}, 0, 0);
    CHECK_THROWS_AS(normalized_trajectory_length(degenerate), Error);
    TrialLog one = make_log({{0, 0, 0}}, Outcome::Success, {0, 0, 0}, 1, 0);
    CHECK_THROWS_AS(normalized_trajectory_length(one), Error);
}

TEST_CASE("imu energy density") {
    TrialLog log = make_log({{0, 0, 0}, {1, 0, 0}}, Outcome::Success, {0, 0, 0}, 1, 0);
    CHECK(imu_energy_density(log) == 0.0);  // all-zero accelerations

    log.steps[0].ax = 1.0;
    log.steps[0].ay = 2.0;
    log.steps[0].az = 2.0;
    CHECK(imu_energy_density(log) == doctest::Approx(9.0));

    // Additivity over concatenation.
    TrialLog other = log;
    other.steps[1].ax = 3.0;
    TrialLog joined = log;
    joined.steps.insert(joined.steps.end(), other.steps.begin(), other.steps.end());
    CHECK(imu_energy_density(joined) ==
          doctest::Approx(imu_energy_density(log) + imu_energy_density(other)));
    CHECK(imu_energy_density(joined) >= 0.0);
}

TEST_CASE("vibration cost piecewise form") {
    TrialLog log = make_log({{0, 0, 0}}, Outcome::Success, {0, 0, 0}, 1, 0);
    for (int j = 0; j < kJointCount; ++j) log.steps[0].joints[j] = 0.5;

    // Everything inside the band.
    CHECK(vibration_cost(log, flat_ref(0.0, 1.0)) == 0.0);

    // One joint 0.1 above max.
    log.steps[0].joints[3] = 1.1;
    CHECK(vibration_cost(log, flat_ref(0.0, 1.0)) == doctest::Approx(0.1));

    // One joint below min adds its excess.
    log.steps[0].joints[7] = -0.2;
    CHECK(vibration_cost(log, flat_ref(0.0, 1.0)) == doctest::Approx(0.3));

    // Widening the band never increases the cost.
    CHECK(vibration_cost(log, flat_ref(-0.5, 1.5)) <=
          vibration_cost(log, flat_ref(0.0, 1.0)));
    CHECK(vibration_cost(log, flat_ref(-1.0, 2.0)) == 0.0);

    ReferenceJointRange inverted = flat_ref(1.0, 0.0);
    CHECK_THROWS_AS(vibration_cost(log, inverted), Error);
}

TEST_CASE("metrics are invariant under rigid world translation") {
    TrialLog log = make_log({{0, 0, 0}, {1, 0.5, 0}, {2, 0.2, 0}, {3, 1, 0}},
                            Outcome::Success, {0, 0, 0}, 3, 1);
    log.steps[1].ax = 0.3;
    log.steps[2].ay = -0.7;
    for (auto& s : log.steps)
        for (int j = 0; j < kJointCount; ++j) s.joints[j] = 0.4;
    log.steps[2].joints[5] = 1.4;

    TrialLog moved = log;
    for (auto& s : moved.steps) {
        s.pose.x += 13.0;
        s.pose.y -= 4.0;
    }
    moved.start.x += 13.0;
    moved.start.y -= 4.0;
    moved.goal_x += 13.0;
    moved.goal_y -= 4.0;

    const auto ref = flat_ref(0.0, 1.0);
    CHECK(normalized_trajectory_length(moved) ==
          doctest::Approx(normalized_trajectory_length(log)).epsilon(1e-12));
    CHECK(imu_energy_density(moved) == imu_energy_density(log));
    CHECK(vibration_cost(moved, ref) == vibration_cost(log, ref));
}

TEST_CASE("aggregation: imu over successful trials only") {
    std::vector<TrialLog> trials;
    for (int i = 0; i < 4; ++i) {
        TrialLog log = make_log({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}},
                                i < 2 ? Outcome::Success : Outcome::Timeout,
                                {0, 0, 0}, 2, 0);
        log.steps[0].ax = double(i + 1);  // energies 1, 4, 9, 16
        for (auto& s : log.steps)
            for (int j = 0; j < kJointCount; ++j) s.joints[j] = 0.5;
        trials.push_back(log);
    }
    const MetricsRow row = aggregate(trials, flat_ref(0, 1));
    CHECK(row.trials == 4);
    CHECK(row.successes == 2);
    CHECK(row.success_rate == doctest::Approx(0.5));
    CHECK(row.mean_imu_energy == doctest::Approx((1.0 + 4.0) / 2.0));
    CHECK(row.mean_norm_traj_len == doctest::Approx(1.0));

    // No successes: the IMU column is undefined (NaN).
    std::vector<TrialLog> failures(trials.begin() + 2, trials.end());
    const MetricsRow none = aggregate(failures, flat_ref(0, 1));
    CHECK(std::isnan(none.mean_imu_energy));

    const std::string csv = report_csv({row, none});
    CHECK(csv.find("scenario,policy,") == 0);
    CHECK(csv.find("synthetic,amco,4,2,0.5000") != std::string::npos);
    const std::string table = report_table({row});
    CHECK(table.find("amco") != std::string::npos);
}
