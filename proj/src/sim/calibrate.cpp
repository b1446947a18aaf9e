#include <filesystem>
#include <fstream>
#include <sstream>

#include "amco/sim/terrain_feel.hpp"
#include "amco/sim/trial.hpp"

namespace amco {

Assets calibrate_assets(double confidence, int samples_per_pair,
                        std::uint64_t seed) {
    if (samples_per_pair < 10)
        throw Error("calibrate_assets: need at least 10 samples per pair");
    Rng rng(seed);

    // Scripted flat-terrain traverses, pooled for the PCA fit.
    std::vector<RawSignal> pooled;
    std::vector<RawSignal> per_pair[kWalkableTerrainCount][kGaitCount];
    pooled.reserve(static_cast<std::size_t>(samples_per_pair) *
                   kWalkableTerrainCount * kGaitCount);
    for (int t = 0; t < kWalkableTerrainCount; ++t) {
        for (int g = 0; g < kGaitCount; ++g) {
            auto& bucket = per_pair[t][g];
            bucket.reserve(samples_per_pair);
            for (int i = 0; i < samples_per_pair; ++i) {
                const PcaPoint p = sample_feel(static_cast<TerrainClass>(t),
                                               static_cast<Gait>(g), 0.0, 0.0, rng);
                bucket.push_back(embed_signal(p, 0.01, rng));
            }
            pooled.insert(pooled.end(), bucket.begin(), bucket.end());
        }
    }

    Assets assets;
    assets.pca = fit_pca(pooled);
    for (int t = 0; t < kWalkableTerrainCount; ++t) {
        for (int g = 0; g < kGaitCount; ++g) {
            std::vector<PcaPoint> points;
            points.reserve(per_pair[t][g].size());
            for (const auto& s : per_pair[t][g])
                points.push_back(project(assets.pca, s));
            GaitTerrainEllipse e;
            try {
                e = fit_ellipse(points, confidence);
            } catch (const Error& err) {
                throw Error("calibrate: degenerate fit for " +
                            std::string(terrain_name(static_cast<TerrainClass>(t))) +
                            "/" + std::string(gait_name(static_cast<Gait>(g))) +
                            ": " + err.what());
            }
            e.terrain = static_cast<TerrainClass>(t);
            e.gait = static_cast<Gait>(g);
            assets.table.set(e);
        }
    }

    // 30 s joint-position reference on stable terrain with the trot gait.
    for (auto& [lo, hi] : assets.joint_reference) {
        lo = std::numeric_limits<double>::infinity();
        hi = -std::numeric_limits<double>::infinity();
    }
    for (int k = 0; k < 300; ++k) {
        const double t = k * 0.1;
        const PcaPoint p =
            sample_feel(TerrainClass::Stable, Gait::Trot, 0.0, 0.0, rng);
        const double norm = traversability(project(assets.pca, embed_signal(p, 0.01, rng)));
        double joints[kJointCount];
        synth_joints(t, Gait::Trot, 0.05, norm, rng, joints);
        for (int j = 0; j < kJointCount; ++j) {
            assets.joint_reference[j].first =
                std::min(assets.joint_reference[j].first, joints[j]);
            assets.joint_reference[j].second =
                std::max(assets.joint_reference[j].second, joints[j]);
        }
    }
    return assets;
}

void Assets::save(const std::string& dir) const {
    std::filesystem::create_directories(dir);
    table.save(dir + "/ellipses.txt");
    pca.save(dir + "/pca_model.txt");
    std::ofstream out(dir + "/joint_reference.txt");
    if (!out) throw Error("cannot open for writing: " + dir + "/joint_reference.txt");
    out.precision(17);
    out << "# per-joint position reference band from stable-terrain calibration\n";
    for (const auto& [lo, hi] : joint_reference) out << lo << ' ' << hi << '\n';
    if (!out) throw Error("write failed: " + dir + "/joint_reference.txt");
}

Assets Assets::load(const std::string& dir) {
    Assets assets;
    assets.table = EllipseTable::load(dir + "/ellipses.txt");
    assets.pca = PcaModel::load(dir + "/pca_model.txt");
    std::ifstream in(dir + "/joint_reference.txt");
    if (!in) throw Error("cannot open joint reference: " + dir + "/joint_reference.txt");
    std::string line;
    int j = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (j >= kJointCount) throw Error("joint reference has too many rows");
        std::istringstream ls(line);
        if (!(ls >> assets.joint_reference[j].first >>
              assets.joint_reference[j].second))
            throw Error("malformed joint reference line: " + line);
        if (assets.joint_reference[j].first > assets.joint_reference[j].second)
            throw Error("joint reference band inverted");
        ++j;
    }
    if (j != kJointCount) throw Error("joint reference needs 12 rows");
    return assets;
}

}  // namespace amco
