#pragma once

#include "amco/core/rng.hpp"
#include "amco/core/semantic_grid.hpp"
#include "amco/reliability/image.hpp"
#include "amco/sim/world.hpp"

namespace amco {

struct RenderResult {
    RgbImage image;
    LabelImage labels;   // ground truth, never blurred
    int blur_width = 1;  // horizontal box kernel actually applied
    double blur_level = 0.0;  // (width - 1) / 14, clamped to [0, 1]
};

/// Synthetic forward camera: inverse ground-plane projection per pixel,
/// per-terrain base colors with hash texture, lighting multiplier, and a
/// horizontal motion/vibration blur whose width grows with speed and the
/// roughness under the robot. Pixels above the horizon are sky and labeled
/// Unknown.
RenderResult render_camera(const World& world, const Pose& pose,
                           const CameraModel& cam, double speed,
                           double blur_speed_gain, double blur_rough_gain,
                           Rng& rng);

/// Block-coherent segmentation corruption: each 8x8 block flips to a
/// uniformly drawn different class with probability 0.6 * (1 - xi).
/// Block decisions hash a salt, so for a fixed salt the phantom pattern is
/// temporally coherent across frames (a dark scene keeps fooling the
/// segmenter the same way) while its density still follows xi.
LabelImage corrupt_segmentation(const LabelImage& ground_truth, double xi,
                                std::uint64_t salt);
/// Convenience overload drawing the salt from the rng.
LabelImage corrupt_segmentation(const LabelImage& ground_truth, double xi,
                                Rng& rng);

}  // namespace amco
