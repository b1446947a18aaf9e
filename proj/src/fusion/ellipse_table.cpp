#include "amco/fusion/ellipse_table.hpp"

#include <fstream>
#include <sstream>

namespace amco {

int EllipseTable::idx(TerrainClass t, Gait g) {
    if (!is_walkable(t))
        throw Error("EllipseTable: no ellipse for sentinel class " +
                    std::string(terrain_name(t)));
    return static_cast<int>(t) * kGaitCount + static_cast<int>(g);
}

void EllipseTable::set(const GaitTerrainEllipse& e) {
    const int i = idx(e.terrain, e.gait);
    areas_[i] = ellipse_area(e);
    if (!(areas_[i] > 0.0)) throw Error("EllipseTable: non-positive area");
    entries_[i] = e;
}

const GaitTerrainEllipse& EllipseTable::get(TerrainClass t, Gait g) const {
    const auto& e = entries_[idx(t, g)];
    if (!e)
        throw Error("EllipseTable: missing entry for " +
                    std::string(terrain_name(t)) + "/" +
                    std::string(gait_name(g)));
    return *e;
}

double EllipseTable::area(TerrainClass t, Gait g) const {
    get(t, g);
    return areas_[idx(t, g)];
}

bool EllipseTable::complete() const {
    for (const auto& e : entries_)
        if (!e) return false;
    return true;
}

void EllipseTable::validate() const {
    for (int t = 0; t < kWalkableTerrainCount; ++t)
        for (int g = 0; g < kGaitCount; ++g)
            get(static_cast<TerrainClass>(t), static_cast<Gait>(g));
}

double EllipseTable::min_area(TerrainClass t) const {
    double best = areas_[idx(t, kGaitTieOrder[0])];
    get(t, kGaitTieOrder[0]);
    for (int k = 1; k < kGaitCount; ++k) {
        const Gait g = kGaitTieOrder[k];
        get(t, g);
        best = std::min(best, areas_[idx(t, g)]);
    }
    return best;
}

Gait EllipseTable::argmin_gait(TerrainClass t) const {
    Gait best = kGaitTieOrder[0];
    double best_area = area(t, best);
    for (int k = 1; k < kGaitCount; ++k) {
        const Gait g = kGaitTieOrder[k];
        const double a = area(t, g);
        if (a < best_area) {
            best = g;
            best_area = a;
        }
    }
    return best;
}

void EllipseTable::save(const std::string& path) const {
    validate();
    std::ofstream out(path);
    if (!out) throw Error("cannot open for writing: " + path);
    out.precision(17);
    out << "# gait-terrain ellipse table\n"
        << "# terrain gait cx cy cov_xx cov_xy cov_yy confidence\n";
    for (int t = 0; t < kWalkableTerrainCount; ++t) {
        for (int g = 0; g < kGaitCount; ++g) {
            const auto& e = get(static_cast<TerrainClass>(t), static_cast<Gait>(g));
            out << terrain_name(e.terrain) << ' ' << gait_name(e.gait) << ' '
                << e.center.x() << ' ' << e.center.y() << ' '
                << e.covariance(0, 0) << ' ' << e.covariance(0, 1) << ' '
                << e.covariance(1, 1) << ' ' << e.confidence << '\n';
        }
    }
    if (!out) throw Error("write failed: " + path);
}

EllipseTable EllipseTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open ellipse table: " + path);
    EllipseTable table;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string terrain, gait;
        GaitTerrainEllipse e;
        double cxx, cxy, cyy;
        if (!(ls >> terrain >> gait >> e.center.x() >> e.center.y() >> cxx >>
              cxy >> cyy >> e.confidence))
            throw Error("malformed ellipse record in " + path + ": " + line);
        e.terrain = terrain_from_name(terrain);
        e.gait = gait_from_name(gait);
        e.covariance << cxx, cxy, cxy, cyy;
        table.set(e);
    }
    table.validate();
    return table;
}

}  // namespace amco
