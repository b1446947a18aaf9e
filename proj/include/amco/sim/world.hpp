#pragma once

#include <map>
#include <string>
#include <vector>

#include "amco/core/types.hpp"
#include "amco/planner/planner.hpp"

namespace amco {

struct WorldCell {
    TerrainClass terrain = TerrainClass::Stable;
    float deformability = 0.0f;  // [0, 1]; Stable cells stay 0
    float lighting = 1.0f;       // [0, 1]
    float roughness = 0.05f;     // [0, 1]
    bool obstacle = false;
};

/// Deterministic 2D world. Cell (ix, iy) covers
/// [ix*cell_size, (ix+1)*cell_size) x [iy*cell_size, ...); +x right, +y up.
/// Everything outside the grid behaves as an obstacle.
struct World {
    int width = 0;   // cells
    int height = 0;  // cells
    double cell_size = 0.25;  // meters
    std::vector<WorldCell> cells;
    Pose start;
    double goal_x = 0.0;
    double goal_y = 0.0;

    WorldCell& cell(int ix, int iy);
    const WorldCell& cell(int ix, int iy) const;

    bool in_bounds(double x, double y) const;
    /// Cell under a world position; a synthetic obstacle cell outside.
    const WorldCell& cell_at(double x, double y) const;

    /// One circle per obstacle cell, for the planner's admissibility check.
    std::vector<Obstacle> obstacle_circles() const;

    void validate() const;
};

struct TrialLimits {
    double t_max = 60.0;      // seconds
    double goal_radius = 0.4; // meters
};

/// One scenario file: world recipe, trial batch size, base seed, limits and
/// parameter overrides (dotted keys).
struct Scenario {
    std::string name;
    World world;
    int trials = 20;
    std::uint64_t seed = 1;
    TrialLimits limits;
    std::map<std::string, std::string> overrides;

    static Scenario load(const std::string& path);
};

}  // namespace amco
