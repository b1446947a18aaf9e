#pragma once

#include <string>
#include <vector>

#include "amco/core/types.hpp"

namespace amco {

inline constexpr float kCostMin = 0.0f;
inline constexpr float kCostMax = 255.0f;

inline float clamp_cost(float v) {
    if (v < kCostMin) return kCostMin;
    if (v > kCostMax) return kCostMax;
    return v;
}

enum class MapKind : std::uint8_t { General, History, Proprio, Coupled };

std::string_view map_kind_name(MapKind k);

/// Grid-resolution traversability cost map. Values live in [0, 255] for
/// every kind except History, which is a signed pre-clamp correction.
/// Row 0 is the top of the camera image (far ground / horizon), the last
/// row is nearest the robot.
class CostMap {
public:
    CostMap() = default;
    CostMap(int width, int height, MapKind kind, float fill = 0.0f);

    int width() const { return width_; }
    int height() const { return height_; }
    MapKind kind() const { return kind_; }
    std::size_t size() const { return values_.size(); }

    float& at(int row, int col) { return values_[index(row, col)]; }
    float at(int row, int col) const { return values_[index(row, col)]; }

    float* data() { return values_.data(); }
    const float* data() const { return values_.data(); }
    const std::vector<float>& values() const { return values_; }

    bool same_shape(const CostMap& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

    /// Clamp every cell to [0, 255]. Idempotent.
    void clamp_all();

    /// 8-bit grayscale PGM (P5), rounded + clamped.
    void write_pgm(const std::string& path) const;
    /// CSV of rounded integer costs, one row per grid row.
    void write_csv(const std::string& path) const;

private:
    std::size_t index(int row, int col) const {
        if (row < 0 || row >= height_ || col < 0 || col >= width_)
            throw Error("CostMap index out of range");
        return static_cast<std::size_t>(row) * width_ + col;
    }

    int width_ = 0;
    int height_ = 0;
    MapKind kind_ = MapKind::General;
    std::vector<float> values_;
};

}  // namespace amco
