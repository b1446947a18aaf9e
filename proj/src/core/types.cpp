#include "amco/core/types.hpp"

namespace amco {

std::string_view terrain_name(TerrainClass t) {
    switch (t) {
        case TerrainClass::Stable: return "stable";
        case TerrainClass::Granular: return "granular";
        case TerrainClass::PoorFoothold: return "poor_foothold";
        case TerrainClass::HighResistance: return "high_resistance";
        case TerrainClass::Obstacle: return "obstacle";
        case TerrainClass::Unknown: return "unknown";
    }
    return "unknown";
}

TerrainClass terrain_from_name(std::string_view name) {
    if (name == "stable") return TerrainClass::Stable;
    if (name == "granular") return TerrainClass::Granular;
    if (name == "poor_foothold") return TerrainClass::PoorFoothold;
    if (name == "high_resistance") return TerrainClass::HighResistance;
    if (name == "obstacle") return TerrainClass::Obstacle;
    if (name == "unknown") return TerrainClass::Unknown;
    throw Error("unknown terrain class name: " + std::string(name));
}

std::string_view gait_name(Gait g) {
    switch (g) {
        case Gait::Trot: return "trot";
        case Gait::Crawl: return "crawl";
        case Gait::Amble: return "amble";
    }
    return "trot";
}

Gait gait_from_name(std::string_view name) {
    if (name == "trot") return Gait::Trot;
    if (name == "crawl") return Gait::Crawl;
    if (name == "amble") return Gait::Amble;
    throw Error("unknown gait name: " + std::string(name));
}

}  // namespace amco
