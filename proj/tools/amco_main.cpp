// Command-line front end: run trial batches, regenerate calibration assets,
// score images, and re-aggregate existing logs.
//
// Exit codes: 0 success, 2 input/configuration error, 3 runtime failure.

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include <CLI11.hpp>

#include "amco/metrics/metrics.hpp"
#include "amco/reliability/haar_blur.hpp"
#include "amco/sim/trial.hpp"

namespace fs = std::filesystem;
using namespace amco;

namespace {

std::string asset_dir_default() {
    if (const char* env = std::getenv("AMCO_ASSET_DIR")) return env;
    return "assets";
}

std::map<std::string, std::string> parse_sets(
    const std::vector<std::string>& kvs) {
    std::map<std::string, std::string> out;
    for (const auto& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw Error("--set expects key=value, got '" + kv + "'");
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

const char* gait_color(Gait g) {
    switch (g) {
        case Gait::Trot: return "#8b4513";   // brown
        case Gait::Crawl: return "#cc2222";  // red
        case Gait::Amble: return "#ff9ecf";  // pink
    }
    return "#8b4513";
}

const char* terrain_color(const WorldCell& c) {
    if (c.obstacle) return "#462d26";
    switch (c.terrain) {
        case TerrainClass::Stable: return "#7e7c78";
        case TerrainClass::Granular: return "#c0b07e";
        case TerrainClass::PoorFoothold: return "#6e6a64";
        case TerrainClass::HighResistance: return "#40702f";
        default: return "#888888";
    }
}

/// World backdrop plus one gait-colored polyline per trial.
void write_trajectory_svg(const std::string& path, const World& world,
                          const std::vector<TrialLog>& logs) {
    const double px_per_m = 60.0;
    const double w = world.width * world.cell_size * px_per_m;
    const double h = world.height * world.cell_size * px_per_m;
    std::ofstream out(path);
    if (!out) throw Error("cannot open for writing: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
        << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
        << "\">\n";
    auto X = [&](double x) { return x * px_per_m; };
    auto Y = [&](double y) { return h - y * px_per_m; };  // +y up

    for (int iy = 0; iy < world.height; ++iy) {
        for (int ix = 0; ix < world.width; ++ix) {
            const auto& c = world.cell(ix, iy);
            double shade = 0.45 + 0.55 * c.lighting;
            out << "<rect x=\"" << X(ix * world.cell_size) << "\" y=\""
                << Y((iy + 1) * world.cell_size) << "\" width=\""
                << world.cell_size * px_per_m << "\" height=\""
                << world.cell_size * px_per_m << "\" fill=\""
                << terrain_color(c) << "\" fill-opacity=\"" << shade
                << "\"/>\n";
        }
    }
    for (const auto& log : logs) {
        for (std::size_t i = 1; i < log.steps.size(); ++i) {
            out << "<line x1=\"" << X(log.steps[i - 1].pose.x) << "\" y1=\""
                << Y(log.steps[i - 1].pose.y) << "\" x2=\""
                << X(log.steps[i].pose.x) << "\" y2=\"" << Y(log.steps[i].pose.y)
                << "\" stroke=\"" << gait_color(log.steps[i].gait)
                << "\" stroke-width=\"2\"/>\n";
        }
    }
    out << "<circle cx=\"" << X(world.goal_x) << "\" cy=\"" << Y(world.goal_y)
        << "\" r=\"6\" fill=\"none\" stroke=\"#111\" stroke-width=\"2\"/>\n";
    out << "<circle cx=\"" << X(world.start.x) << "\" cy=\"" << Y(world.start.y)
        << "\" r=\"4\" fill=\"#111\"/>\n";
    out << "</svg>\n";
}

void export_step_maps(const std::string& dir, const StepView& view) {
    char name[64];
    auto dump = [&](const CostMap& m, const char* tag) {
        std::snprintf(name, sizeof name, "/step%04d_%s.pgm", view.step, tag);
        if (m.kind() == MapKind::History) {
            // Signed map: mid-gray is zero.
            CostMap shifted = m;
            for (int i = 0; i < shifted.height(); ++i)
                for (int j = 0; j < shifted.width(); ++j)
                    shifted.at(i, j) += 127.0f;
            shifted.write_pgm(dir + name);
        } else {
            m.write_pgm(dir + name);
        }
    };
    dump(view.general, "cg");
    dump(view.history, "ch");
    dump(view.proprio, "cp");
    dump(view.coupled, "coupled");
}

struct TrialJob {
    const Scenario* scenario;
    Policy policy;
    std::uint64_t seed;
};

int cmd_run(const std::vector<std::string>& scenario_paths,
            const std::string& policies_csv, int trials_override,
            long long seed_override, const std::string& out_dir,
            bool export_maps, bool export_traj,
            const std::vector<std::string>& sets, const std::string& assets_dir,
            int workers) {
    Params base;
    base.apply_overrides(parse_sets(sets));
    const Assets assets = Assets::load(assets_dir);

    std::vector<Policy> policies;
    for (const auto& name : split_csv(policies_csv))
        policies.push_back(policy_from_name(name));
    if (policies.empty()) throw Error("no policies given");

    std::vector<Scenario> scenarios;
    for (const auto& p : scenario_paths) scenarios.push_back(Scenario::load(p));
    if (scenarios.empty()) throw Error("no scenarios given");

    fs::create_directories(out_dir);

    std::vector<TrialJob> jobs;
    for (const auto& sc : scenarios) {
        const int trials = trials_override > 0 ? trials_override : sc.trials;
        const std::uint64_t seed_base =
            seed_override >= 0 ? static_cast<std::uint64_t>(seed_override) : sc.seed;
        for (const auto& pol : policies)
            for (int i = 0; i < trials; ++i)
                jobs.push_back({&sc, pol, seed_base + static_cast<std::uint64_t>(i)});
    }

    std::vector<TrialLog> logs(jobs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex error_mu;

    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size() || failed.load()) break;
            const TrialJob& job = jobs[i];
            try {
                StepObserver observer;
                std::string map_dir;
                if (export_maps) {
                    map_dir = out_dir + "/maps/" + job.scenario->name + "__" +
                              std::string(policy_name(job.policy)) + "__" +
                              std::to_string(job.seed);
                    fs::create_directories(map_dir);
                    observer = [&map_dir](const StepView& v) {
                        export_step_maps(map_dir, v);
                    };
                }
                logs[i] = run_trial(*job.scenario, job.policy, job.seed, assets,
                                    base, observer);
                logs[i].save_jsonl(out_dir + "/" + job.scenario->name + "__" +
                                   std::string(policy_name(job.policy)) + "__" +
                                   std::to_string(job.seed) + ".jsonl");
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!failed.exchange(true)) first_error = e.what();
            }
        }
    };

    const int n_workers =
        std::max(1, std::min<int>(workers, static_cast<int>(jobs.size())));
    std::vector<std::thread> pool;
    for (int i = 0; i < n_workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (failed.load()) throw Error("trial failed: " + first_error);

    // Aggregate in fixed (scenario, policy) order.
    std::vector<MetricsRow> rows;
    for (const auto& sc : scenarios) {
        for (const auto& pol : policies) {
            std::vector<TrialLog> group;
            for (std::size_t i = 0; i < jobs.size(); ++i)
                if (jobs[i].scenario == &sc && jobs[i].policy == pol)
                    group.push_back(logs[i]);
            rows.push_back(aggregate(group, assets.joint_reference));
        }
        if (export_traj) {
            std::vector<TrialLog> all;
            for (std::size_t i = 0; i < jobs.size(); ++i)
                if (jobs[i].scenario == &sc) all.push_back(logs[i]);
            write_trajectory_svg(out_dir + "/traj_" + sc.name + ".svg", sc.world,
                                 all);
        }
    }

    const std::string csv = report_csv(rows);
    std::ofstream(out_dir + "/report.csv") << csv;
    const std::string table = report_table(rows);
    std::ofstream(out_dir + "/report.txt") << table;
    std::cout << table;
    return 0;
}

int cmd_calibrate(const std::string& out_dir, double confidence, int samples,
                  std::uint64_t seed) {
    const Assets assets = calibrate_assets(confidence, samples, seed);
    assets.save(out_dir);
    std::cout << "wrote " << out_dir << "/{ellipses,pca_model,joint_reference}.txt\n";
    std::cout << "areas by terrain (most stable gait first):\n";
    for (int t = 0; t < kWalkableTerrainCount; ++t) {
        const auto terrain = static_cast<TerrainClass>(t);
        std::vector<std::pair<double, Gait>> rows;
        for (int g = 0; g < kGaitCount; ++g)
            rows.push_back(
                {assets.table.area(terrain, static_cast<Gait>(g)),
                 static_cast<Gait>(g)});
        std::sort(rows.begin(), rows.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::printf("  %-16s", std::string(terrain_name(terrain)).c_str());
        for (const auto& [area, gait] : rows)
            std::printf("  %s=%.1f", std::string(gait_name(gait)).c_str(), area);
        std::printf("\n");
    }
    return 0;
}

int cmd_score_image(const std::string& path) {
    const RgbImage img = read_ppm(path);
    const ReliabilityScore s = score_image(img);
    std::printf(
        "r_mean=%.4f r_luma=%.4f r_hwt=%.4f O=%.4f xi=%.6f\n", s.r_mean,
        s.r_luma, s.r_hwt, s.blur_o, s.xi);
    return 0;
}

int cmd_report(const std::string& logs_dir, const std::string& assets_dir) {
    const Assets assets = Assets::load(assets_dir);
    std::map<std::pair<std::string, std::string>, std::vector<TrialLog>> groups;
    for (const auto& entry : fs::directory_iterator(logs_dir)) {
        if (entry.path().extension() != ".jsonl") continue;
        TrialLog log = TrialLog::load_jsonl(entry.path().string());
        groups[{log.scenario, log.policy}].push_back(std::move(log));
    }
    if (groups.empty()) throw Error("no .jsonl logs in " + logs_dir);
    std::vector<MetricsRow> rows;
    for (auto& [key, logs] : groups)
        rows.push_back(aggregate(logs, assets.joint_reference));
    const std::string csv = report_csv(rows);
    std::ofstream(logs_dir + "/report.csv") << csv;
    std::cout << report_table(rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adaptive multimodal traversability navigation bench"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run trial batches");
    std::vector<std::string> scenario_paths;
    std::string policies = "amco";
    int trials = 0;
    long long seed = -1;
    std::string out_dir = "out";
    bool export_maps = false, export_traj = false;
    std::vector<std::string> sets;
    std::string assets_dir = asset_dir_default();
    int workers = std::max(1u, std::thread::hardware_concurrency());
    run->add_option("--scenario", scenario_paths, "scenario json path(s)")
        ->required()
        ->expected(-1);
    run->add_option("--policies", policies, "comma-separated policy list");
    run->add_option("--trials", trials, "override scenario trial count");
    run->add_option("--seed", seed, "override scenario seed base");
    run->add_option("--out", out_dir, "output directory");
    run->add_flag("--export-maps", export_maps,
                  "write the four cost-map rasters every step");
    run->add_flag("--export-trajectories", export_traj,
                  "write a gait-colored trajectory overlay svg per scenario");
    run->add_option("--set", sets, "parameter override key=value");
    run->add_option("--assets", assets_dir, "calibration asset directory");
    run->add_option("--workers", workers, "parallel trial workers");

    // calibrate
    auto* cal = app.add_subcommand("calibrate", "regenerate calibration assets");
    std::string cal_out = asset_dir_default();
    double confidence = 0.9999;
    int samples = 400;
    std::uint64_t cal_seed = 20240501;
    cal->add_option("--out", cal_out, "asset output directory");
    cal->add_option("--confidence", confidence, "ellipse confidence mass");
    cal->add_option("--samples", samples, "samples per (terrain, gait)");
    cal->add_option("--seed", cal_seed, "calibration rng seed");

    // score-image
    auto* score = app.add_subcommand("score-image", "reliability score of a ppm");
    std::string image_path;
    score->add_option("image", image_path, "ppm image path")->required();

    // report
    auto* rep = app.add_subcommand("report", "re-aggregate existing trial logs");
    std::string logs_dir;
    std::string rep_assets = asset_dir_default();
    rep->add_option("--logs", logs_dir, "directory of .jsonl trial logs")
        ->required();
    rep->add_option("--assets", rep_assets, "calibration asset directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (run->parsed())
            return cmd_run(scenario_paths, policies, trials, seed, out_dir,
                           export_maps, export_traj, sets, assets_dir, workers);
        if (cal->parsed()) return cmd_calibrate(cal_out, confidence, samples, cal_seed);
        if (score->parsed()) return cmd_score_image(image_path);
        if (rep->parsed()) return cmd_report(logs_dir, rep_assets);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "runtime failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
