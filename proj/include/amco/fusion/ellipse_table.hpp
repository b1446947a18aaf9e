#pragma once

#include <array>
#include <optional>
#include <string>

#include "amco/proprioception/ellipse.hpp"

namespace amco {

/// Complete calibration table: one ellipse (and its area) per
/// (walkable terrain, gait) pair, 4 x 3 = 12 entries.
class EllipseTable {
public:
    void set(const GaitTerrainEllipse& e);
    const GaitTerrainEllipse& get(TerrainClass t, Gait g) const;
    double area(TerrainClass t, Gait g) const;

    bool complete() const;
    /// Throws unless all 12 entries are present with positive area.
    void validate() const;

    /// Smallest area over gaits for a terrain (the most stable gait's).
    double min_area(TerrainClass t) const;
    /// Gait with the smallest area; ties break Trot < Amble < Crawl.
    Gait argmin_gait(TerrainClass t) const;

    /// One whitespace-separated record per pair:
    /// terrain gait cx cy cov_xx cov_xy cov_yy confidence
    void save(const std::string& path) const;
    static EllipseTable load(const std::string& path);

private:
    static int idx(TerrainClass t, Gait g);
    std::array<std::optional<GaitTerrainEllipse>, kWalkableTerrainCount * kGaitCount>
        entries_;
    std::array<double, kWalkableTerrainCount * kGaitCount> areas_{};
};

}  // namespace amco
