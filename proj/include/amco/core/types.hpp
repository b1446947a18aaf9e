#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace amco {

/// Error type thrown by every module for contract violations
/// (bad inputs, degenerate data, malformed files).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Terrain classes
// ---------------------------------------------------------------------------

enum class TerrainClass : std::uint8_t {
    Stable = 0,         // concrete, asphalt
    Granular,           // sand, dirt, gravel, mulch
    PoorFoothold,       // rocks, rockbed
    HighResistance,     // grass, bush
    Obstacle,           // non-traversable
    Unknown,            // sky / unsegmented / padding
};

inline constexpr int kWalkableTerrainCount = 4;
inline constexpr int kTerrainClassCount = 6;

inline constexpr bool is_walkable(TerrainClass t) {
    return static_cast<int>(t) < kWalkableTerrainCount;
}

std::string_view terrain_name(TerrainClass t);
TerrainClass terrain_from_name(std::string_view name);

// ---------------------------------------------------------------------------
// Gaits
// ---------------------------------------------------------------------------

enum class Gait : std::uint8_t {
    Trot = 0,   // two feet down, fast
    Crawl,      // three feet down, speed-capped
    Amble,      // crawl-like stability, unrestricted speed
};

inline constexpr int kGaitCount = 3;

/// Per-gait linear velocity cap (m/s). Crawl is restricted; amble matches trot.
inline constexpr double max_linear_velocity(Gait g) {
    return g == Gait::Crawl ? 0.25 : 0.6;
}

std::string_view gait_name(Gait g);
Gait gait_from_name(std::string_view name);

/// Gait preference order used to break area ties: Trot < Amble < Crawl.
inline constexpr std::array<Gait, kGaitCount> kGaitTieOrder = {
    Gait::Trot, Gait::Amble, Gait::Crawl};

// ---------------------------------------------------------------------------
// Pose and commands
// ---------------------------------------------------------------------------

/// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a <= -M_PI) a += 2.0 * M_PI;
    if (a > M_PI) a -= 2.0 * M_PI;
    return a;
}

/// World-frame pose. Robot frame: X forward, Y left, heading CCW from +X.
struct Pose {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;  // normalized to (-pi, pi]

    void normalize() { theta = wrap_angle(theta); }
};

struct VelocityCommand {
    double v = 0.0;  // linear, m/s
    double w = 0.0;  // angular, rad/s
};

}  // namespace amco
