#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "amco/core/types.hpp"

namespace amco {

/// 8-bit interleaved RGB image.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> px;  // size = 3 * width * height

    RgbImage() = default;
    RgbImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h),
          px(static_cast<std::size_t>(3) * w * h, fill) {}

    bool empty() const { return width <= 0 || height <= 0 || px.empty(); }

    std::uint8_t* pixel(int row, int col) {
        return px.data() + 3 * (static_cast<std::size_t>(row) * width + col);
    }
    const std::uint8_t* pixel(int row, int col) const {
        return px.data() + 3 * (static_cast<std::size_t>(row) * width + col);
    }

    void set(int row, int col, std::uint8_t r, std::uint8_t g,
             std::uint8_t b) {
        auto* p = pixel(row, col);
        p[0] = r; p[1] = g; p[2] = b;
    }
};

/// Binary PPM (P6).
RgbImage read_ppm(const std::string& path);
void write_ppm(const RgbImage& img, const std::string& path);

/// Horizontal box blur with odd kernel width (clamped edges); width 1 is the
/// identity. The camera model uses this for motion blur.
RgbImage box_blur_horizontal(const RgbImage& img, int width);

/// Separable width x width box blur (horizontal then vertical pass).
RgbImage box_blur(const RgbImage& img, int width);

}  // namespace amco
