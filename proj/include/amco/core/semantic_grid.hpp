#pragma once

#include <array>
#include <vector>

#include "amco/core/types.hpp"

namespace amco {

/// Per-pixel terrain class map (segmentation output or ground truth).
struct LabelImage {
    int width = 0;
    int height = 0;
    std::vector<TerrainClass> px;

    LabelImage() = default;
    LabelImage(int w, int h, TerrainClass fill = TerrainClass::Unknown)
        : width(w), height(h),
          px(static_cast<std::size_t>(w) * h, fill) {}

    TerrainClass& at(int row, int col) {
        return px[static_cast<std::size_t>(row) * width + col];
    }
    TerrainClass at(int row, int col) const {
        return px[static_cast<std::size_t>(row) * width + col];
    }
};

/// One grid cell: class histogram over its n x n source pixels (border cells
/// are padded with Unknown so counts always sum to n^2) and the majority
/// class. Majority ties break by class order Stable < Granular <
/// PoorFoothold < HighResistance < Obstacle < Unknown.
struct SemanticCell {
    std::array<std::uint32_t, kTerrainClassCount> histogram{};
    TerrainClass majority = TerrainClass::Unknown;
};

class SemanticGrid {
public:
    SemanticGrid() = default;
    SemanticGrid(int width, int height, int n);

    int width() const { return width_; }
    int height() const { return height_; }
    int n() const { return n_; }

    SemanticCell& at(int row, int col) { return cells_[index(row, col)]; }
    const SemanticCell& at(int row, int col) const {
        return cells_[index(row, col)];
    }

private:
    std::size_t index(int row, int col) const {
        if (row < 0 || row >= height_ || col < 0 || col >= width_)
            throw Error("SemanticGrid index out of range");
        return static_cast<std::size_t>(row) * width_ + col;
    }

    int width_ = 0;
    int height_ = 0;
    int n_ = 0;
    std::vector<SemanticCell> cells_;
};

/// Discretize a per-pixel class map into cells of n x n pixels.
/// Grid dims are ceil(image dims / n); partial border cells pad with Unknown.
SemanticGrid discretize_semantic(const LabelImage& image, int n);

}  // namespace amco
