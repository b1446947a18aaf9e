#include "amco/fusion/maps.hpp"

#include <cmath>

#include "amco/kernels/kernels.hpp"

namespace amco {

CostMap general_knowledge_map(const SemanticGrid& grid,
                              const EllipseTable& table,
                              const FusionParams& params) {
    if (params.gamma <= 0.0) throw Error("general_knowledge_map: gamma must be > 0");
    table.validate();

    // Per-class min-over-gaits area, shared by every cell.
    double class_cost[kTerrainClassCount];
    for (int t = 0; t < kWalkableTerrainCount; ++t)
        class_cost[t] = table.min_area(static_cast<TerrainClass>(t));
    class_cost[static_cast<int>(TerrainClass::Obstacle)] = 255.0;
    class_cost[static_cast<int>(TerrainClass::Unknown)] = params.u_moderate;

    CostMap map(grid.width(), grid.height(), MapKind::General);
    const double scale =
        params.gamma / (static_cast<double>(grid.n()) * grid.n());
    for (int i = 0; i < grid.height(); ++i) {
        for (int j = 0; j < grid.width(); ++j) {
            const auto& cell = grid.at(i, j);
            double sum = 0.0;
            for (int k = 0; k < kTerrainClassCount; ++k)
                sum += static_cast<double>(cell.histogram[k]) * class_cost[k];
            map.at(i, j) = static_cast<float>(scale * sum);
        }
    }
    map.clamp_all();
    return map;
}

std::optional<Gait> select_gait(const SemanticGrid& grid,
                                const EllipseTable& table,
                                const std::vector<std::pair<int, int>>& footprint) {
    if (footprint.empty()) throw Error("select_gait: empty footprint");
    std::uint64_t counts[kWalkableTerrainCount] = {0, 0, 0, 0};
    for (const auto& [i, j] : footprint) {
        const auto& cell = grid.at(i, j);
        for (int k = 0; k < kWalkableTerrainCount; ++k)
            counts[k] += cell.histogram[k];
    }
    int pred = -1;
    std::uint64_t best = 0;
    for (int k = 0; k < kWalkableTerrainCount; ++k) {
        if (counts[k] > best) {  // ties keep the lower class index
            best = counts[k];
            pred = k;
        }
    }
    if (pred < 0) return std::nullopt;  // nothing walkable in view: keep gait
    return table.argmin_gait(static_cast<TerrainClass>(pred));
}

CostMap history_map(const HistoryStore& store, const CostMap& general,
                    const SemanticGrid& grid, const FusionParams& params) {
    if (general.width() != grid.width() || general.height() != grid.height())
        throw Error("history_map: general map and grid are misaligned");

    double norm_sum[kWalkableTerrainCount];
    double count[kWalkableTerrainCount];
    for (int t = 0; t < kWalkableTerrainCount; ++t) {
        const auto terrain = static_cast<TerrainClass>(t);
        norm_sum[t] = store.norm_sum(terrain);
        count[t] = static_cast<double>(store.count(terrain));
    }

    CostMap map(grid.width(), grid.height(), MapKind::History, 0.0f);
    for (int i = 0; i < grid.height(); ++i) {
        for (int j = 0; j < grid.width(); ++j) {
            const TerrainClass tau = grid.at(i, j).majority;
            if (!is_walkable(tau)) continue;
            const int t = static_cast<int>(tau);
            if (count[t] == 0.0) continue;  // tau not in Gamma
            const double cg = static_cast<double>(general.at(i, j));
            map.at(i, j) = static_cast<float>(
                params.alpha * (params.kappa * norm_sum[t] - count[t] * cg));
        }
    }
    return map;  // signed, pre-clamp
}

std::vector<float> radial_falloff(int width, int height) {
    if (width <= 0 || height <= 0)
        throw Error("radial_falloff: dimensions must be positive");
    const int anchor_row = height - 1;
    const int anchor_col = (width - 1) / 2;
    const double far_col =
        std::max(anchor_col, width - 1 - anchor_col);
    const double diag =
        std::sqrt(static_cast<double>(anchor_row) * anchor_row + far_col * far_col);
    std::vector<float> falloff(static_cast<std::size_t>(width) * height);
    for (int i = 0; i < height; ++i) {
        for (int j = 0; j < width; ++j) {
            const double di = i - anchor_row;
            const double dj = j - anchor_col;
            const double d =
                diag > 0.0 ? std::sqrt(di * di + dj * dj) / diag : 0.0;
            falloff[static_cast<std::size_t>(i) * width + j] =
                static_cast<float>(1.0 - d);
        }
    }
    return falloff;
}

CostMap proprioception_map(double norm, int width, int height,
                           const FusionParams& params) {
    if (params.u_moderate <= 0.0 || params.delta <= 0.0)
        throw Error("proprioception_map: U and delta must be > 0");
    const auto falloff = radial_falloff(width, height);
    CostMap map(width, height, MapKind::Proprio);
    const float base = static_cast<float>(params.u_moderate - params.delta * norm);
    kernels::scale_clamp(map.data(), falloff.data(), base, falloff.size());
    return map;
}

CostMap couple(const CostMap& general, const CostMap& history,
               const CostMap& proprio, double xi) {
    if (!general.same_shape(history) || !general.same_shape(proprio))
        throw Error("couple: cost maps are misaligned");
    if (!(xi >= 0.0 && xi <= 1.0)) throw Error("couple: xi must be in [0, 1]");
    CostMap out(general.width(), general.height(), MapKind::Coupled);
    kernels::fuse_couple(out.data(), general.data(), history.data(),
                         proprio.data(), static_cast<float>(xi), out.size());
    return out;
}

}  // namespace amco
