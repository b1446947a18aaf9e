#pragma once

#include <optional>
#include <vector>

#include "amco/core/cost_map.hpp"
#include "amco/core/semantic_grid.hpp"
#include "amco/fusion/ellipse_table.hpp"
#include "amco/fusion/history.hpp"

namespace amco {

struct FusionParams {
    double gamma = 1.0;       // general-knowledge scale
    double alpha = 4.5;       // history adjustment factor
    double kappa = 31.875;    // norm -> cost scale (same bridge Eq. 5 uses)
    double u_moderate = 127.0;  // cost of a moderately traversable terrain
    double delta = 31.875;    // proprioception norm scale
    double t_window = 60.0;   // seconds of history kept
};

/// Vision-derived typical-traversability map: per cell, gamma/n^2 times the
/// sum over its pixels of the min-over-gaits ellipse area of the pixel's
/// class. Obstacle pixels contribute 255, Unknown pixels contribute U.
CostMap general_knowledge_map(const SemanticGrid& grid,
                              const EllipseTable& table,
                              const FusionParams& params = {});

/// Most stable gait for the predominant class over the footprint cells
/// (pixel-count majority across their histograms). Returns nullopt when the
/// footprint holds no walkable pixels (keep the current gait).
std::optional<Gait> select_gait(const SemanticGrid& grid,
                                const EllipseTable& table,
                                const std::vector<std::pair<int, int>>& footprint);

/// Signed pre-clamp history correction: cells whose majority class has been
/// traversed recently get alpha * sum over stored samples of
/// (kappa * |p^l| - C_g(i,j)); everything else is 0.
CostMap history_map(const HistoryStore& store, const CostMap& general,
                    const SemanticGrid& grid, const FusionParams& params = {});

/// Radial extrapolation of the instantaneous norm:
/// clamp((U - delta * |p|) * (1 - d), 0, 255), with d the normalized
/// distance from the bottom-center cell (0 there, 1 at the farthest cell).
CostMap proprioception_map(double norm, int width, int height,
                           const FusionParams& params = {});

/// Normalized distances (1 - d is what Eq. 5 consumes); cached by callers
/// that build the map every cycle.
std::vector<float> radial_falloff(int width, int height);

/// C_coupled = clamp(xi * (C_g + C_h) + C_p, 0, 255), cellwise.
CostMap couple(const CostMap& general, const CostMap& history,
               const CostMap& proprio, double xi);

}  // namespace amco
