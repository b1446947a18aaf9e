#include "amco/sim/render.hpp"

#include <cmath>

namespace amco {
namespace {

struct Color {
    double r, g, b;
};

Color base_color(TerrainClass t, double deformability) {
    switch (t) {
        case TerrainClass::Stable: return {126, 124, 120};
        case TerrainClass::Granular: {
            // Wet granular terrain reads darker.
            const double k = 1.0 - 0.35 * deformability;
            return {192 * k, 176 * k, 126 * k};
        }
        case TerrainClass::PoorFoothold: return {110, 106, 100};
        case TerrainClass::HighResistance: return {64, 110, 48};
        case TerrainClass::Obstacle: return {70, 45, 38};
        case TerrainClass::Unknown: break;
    }
    return {168, 196, 222};  // sky
}

// Deterministic value noise on ~5 cm world quanta; keeps the texture static
// across frames without consuming RNG state.
double hash_noise(std::int64_t qx, std::int64_t qy) {
    std::uint64_t h = static_cast<std::uint64_t>(qx) * 0x9E3779B97F4A7C15ULL ^
                      static_cast<std::uint64_t>(qy) * 0xC2B2AE3D27D4EB4FULL;
    h ^= h >> 33;
    h *= 0xFF51AFD7ED558CCDULL;
    h ^= h >> 33;
    return (static_cast<double>(h >> 11) * 0x1.0p-53) * 2.0 - 1.0;  // [-1, 1)
}

std::uint8_t quantize(double v) {
    if (v < 0.0) v = 0.0;
    if (v > 255.0) v = 255.0;
    return static_cast<std::uint8_t>(v + 0.5);
}

}  // namespace

RenderResult render_camera(const World& world, const Pose& pose,
                           const CameraModel& cam, double speed,
                           double blur_speed_gain, double blur_rough_gain,
                           Rng& rng) {
    RenderResult out;
    out.image = RgbImage(cam.img_width, cam.img_height);
    out.labels = LabelImage(cam.img_width, cam.img_height);

    const double exposure = 1.0 + 0.02 * (2.0 * rng.uniform() - 1.0);
    const WorldCell& under = world.cell_at(pose.x, pose.y);
    const double ambient = under.lighting;
    const double c = std::cos(pose.theta), s = std::sin(pose.theta);

    for (int v = 0; v < cam.img_height; ++v) {
        for (int u = 0; u < cam.img_width; ++u) {
            const auto ground = cam.pixel_to_ground(u + 0.5, v + 0.5);
            Color col{};
            double light = ambient;
            if (!ground) {
                col = base_color(TerrainClass::Unknown, 0.0);
                out.labels.at(v, u) = TerrainClass::Unknown;
            } else {
                const double wx = pose.x + c * ground->first - s * ground->second;
                const double wy = pose.y + s * ground->first + c * ground->second;
                const WorldCell& cell = world.cell_at(wx, wy);
                const TerrainClass t =
                    cell.obstacle ? TerrainClass::Obstacle : cell.terrain;
                col = base_color(t, cell.deformability);
                light = cell.lighting;
                out.labels.at(v, u) = t;
                const double n =
                    hash_noise(static_cast<std::int64_t>(std::floor(wx / 0.05)),
                               static_cast<std::int64_t>(std::floor(wy / 0.05))) *
                    10.0 * (0.5 + cell.roughness);
                col.r += n;
                col.g += n;
                col.b += n;
            }
            const double k = light * exposure;
            out.image.set(v, u, quantize(col.r * k), quantize(col.g * k),
                          quantize(col.b * k));
        }
    }

    const double radius =
        blur_speed_gain * std::abs(speed) + blur_rough_gain * under.roughness;
    int width = 1 + 2 * static_cast<int>(std::lround(radius));
    width = std::min(width, 15);
    if (width > 1) out.image = box_blur_horizontal(out.image, width);
    out.blur_width = width;
    out.blur_level = std::min(1.0, (width - 1) / 14.0);
    return out;
}

namespace {

double hash01(std::uint64_t salt, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = salt ^ (a * 0x9E3779B97F4A7C15ULL) ^
                      (b * 0xC2B2AE3D27D4EB4FULL);
    h ^= h >> 30;
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 27;
    h *= 0x94D049BB133111EBULL;
    h ^= h >> 31;
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace

LabelImage corrupt_segmentation(const LabelImage& ground_truth, double xi,
                                std::uint64_t salt) {
    if (!(xi >= 0.0 && xi <= 1.0))
        throw Error("corrupt_segmentation: xi must be in [0, 1]");
    LabelImage out = ground_truth;
    const double p_flip = 0.6 * (1.0 - xi);
    const int block = 8;
    for (int r0 = 0; r0 < ground_truth.height; r0 += block) {
        for (int c0 = 0; c0 < ground_truth.width; c0 += block) {
            if (hash01(salt, r0 / block, c0 / block) >= p_flip) continue;
            // Candidates: four terrain classes plus Obstacle, minus the
            // block's own class, so a fired flip always changes it.
            const TerrainClass original = ground_truth.at(r0, c0);
            int pick = static_cast<int>(
                hash01(salt ^ 0xABCDULL, r0 / block, c0 / block) * 4.0);
            for (int k = 0; k <= pick; ++k)
                if (k == static_cast<int>(original)) ++pick;
            const auto target = static_cast<TerrainClass>(pick);
            const int r1 = std::min(r0 + block, ground_truth.height);
            const int c1 = std::min(c0 + block, ground_truth.width);
            for (int r = r0; r < r1; ++r)
                for (int cc = c0; cc < c1; ++cc) out.at(r, cc) = target;
        }
    }
    return out;
}

LabelImage corrupt_segmentation(const LabelImage& ground_truth, double xi,
                                Rng& rng) {
    return corrupt_segmentation(ground_truth, xi, rng.next_u64());
}

}  // namespace amco
