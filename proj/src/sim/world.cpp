#include "amco/sim/world.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

namespace amco {

using nlohmann::json;

WorldCell& World::cell(int ix, int iy) {
    if (ix < 0 || ix >= width || iy < 0 || iy >= height)
        throw Error("World::cell index out of range");
    return cells[static_cast<std::size_t>(iy) * width + ix];
}

const WorldCell& World::cell(int ix, int iy) const {
    return const_cast<World*>(this)->cell(ix, iy);
}

bool World::in_bounds(double x, double y) const {
    return x >= 0.0 && y >= 0.0 && x < width * cell_size &&
           y < height * cell_size;
}

const WorldCell& World::cell_at(double x, double y) const {
    static const WorldCell kBoundary{TerrainClass::Obstacle, 0.0f, 1.0f, 0.0f,
                                     true};
    if (!in_bounds(x, y)) return kBoundary;
    const int ix = static_cast<int>(x / cell_size);
    const int iy = static_cast<int>(y / cell_size);
    return cell(std::min(ix, width - 1), std::min(iy, height - 1));
}

std::vector<Obstacle> World::obstacle_circles() const {
    std::vector<Obstacle> out;
    for (int iy = 0; iy < height; ++iy) {
        for (int ix = 0; ix < width; ++ix) {
            if (!cell(ix, iy).obstacle) continue;
            out.push_back({(ix + 0.5) * cell_size, (iy + 0.5) * cell_size,
                           0.55 * cell_size});
        }
    }
    return out;
}

void World::validate() const {
    if (width <= 0 || height <= 0 || cell_size <= 0.0)
        throw Error("world: bad grid geometry");
    if (cells.size() != static_cast<std::size_t>(width) * height)
        throw Error("world: cell count mismatch");
    if (!in_bounds(start.x, start.y) || cell_at(start.x, start.y).obstacle)
        throw Error("world: start must be on a free in-bounds cell");
    if (!in_bounds(goal_x, goal_y) || cell_at(goal_x, goal_y).obstacle)
        throw Error("world: goal must be on a free in-bounds cell");
    for (const auto& c : cells) {
        if (c.terrain == TerrainClass::Stable && c.deformability != 0.0f)
            throw Error("world: stable cells must have deformability 0");
        if (c.deformability < 0.0f || c.deformability > 1.0f ||
            c.lighting < 0.0f || c.lighting > 1.0f || c.roughness < 0.0f ||
            c.roughness > 1.0f)
            throw Error("world: cell attribute out of range");
    }
}

namespace {

void apply_cell_props(WorldCell& cell, const json& j) {
    if (j.contains("terrain"))
        cell.terrain = terrain_from_name(j.at("terrain").get<std::string>());
    if (j.contains("deformability"))
        cell.deformability = j.at("deformability").get<float>();
    if (j.contains("lighting")) cell.lighting = j.at("lighting").get<float>();
    if (j.contains("roughness")) cell.roughness = j.at("roughness").get<float>();
    if (j.contains("obstacle")) cell.obstacle = j.at("obstacle").get<bool>();
    if (cell.terrain == TerrainClass::Obstacle) cell.obstacle = true;
    if (cell.terrain == TerrainClass::Stable) cell.deformability = 0.0f;
}

void run_generator(World& world, const json& gen) {
    const std::string type = gen.at("type").get<std::string>();
    if (type == "fill") {
        for (auto& c : world.cells) apply_cell_props(c, gen);
        return;
    }
    if (type == "rect" || type == "obstacle_rect") {
        const double x0 = gen.at("x0").get<double>();
        const double y0 = gen.at("y0").get<double>();
        const double x1 = gen.at("x1").get<double>();
        const double y1 = gen.at("y1").get<double>();
        const int ix0 = std::max(0, static_cast<int>(std::floor(x0 / world.cell_size)));
        const int iy0 = std::max(0, static_cast<int>(std::floor(y0 / world.cell_size)));
        const int ix1 = std::min(world.width - 1,
                                 static_cast<int>(std::ceil(x1 / world.cell_size)) - 1);
        const int iy1 = std::min(world.height - 1,
                                 static_cast<int>(std::ceil(y1 / world.cell_size)) - 1);
        for (int iy = iy0; iy <= iy1; ++iy) {
            for (int ix = ix0; ix <= ix1; ++ix) {
                WorldCell& c = world.cell(ix, iy);
                if (type == "obstacle_rect") {
                    c.obstacle = true;
                    c.terrain = TerrainClass::Obstacle;
                } else {
                    apply_cell_props(c, gen);
                }
            }
        }
        return;
    }
    throw Error("scenario: unknown generator type '" + type + "'");
}

std::string scalar_to_string(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
        return buf;
    }
    throw Error("scenario: override values must be scalars");
}

}  // namespace

Scenario Scenario::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open scenario: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw Error("scenario " + path + ": " + e.what());
    }

    Scenario sc;
    try {
        sc.name = j.at("name").get<std::string>();
        const json& jw = j.at("world");
        sc.world.width = jw.at("grid").at(0).get<int>();
        sc.world.height = jw.at("grid").at(1).get<int>();
        sc.world.cell_size = jw.value("cell_size", 0.25);
        if (sc.world.width <= 0 || sc.world.height <= 0)
            throw Error("scenario: grid dims must be positive");
        sc.world.cells.assign(
            static_cast<std::size_t>(sc.world.width) * sc.world.height, {});

        if (jw.contains("generators"))
            for (const auto& gen : jw.at("generators")) run_generator(sc.world, gen);
        if (jw.contains("cells")) {
            for (const auto& jc : jw.at("cells")) {
                WorldCell& c =
                    sc.world.cell(jc.at("ix").get<int>(), jc.at("iy").get<int>());
                apply_cell_props(c, jc);
            }
        }

        sc.world.start.x = jw.at("start").at("x").get<double>();
        sc.world.start.y = jw.at("start").at("y").get<double>();
        sc.world.start.theta = jw.at("start").value("theta", 0.0);
        sc.world.start.normalize();
        sc.world.goal_x = jw.at("goal").at("x").get<double>();
        sc.world.goal_y = jw.at("goal").at("y").get<double>();

        sc.trials = j.value("trials", 20);
        sc.seed = j.value("seed", 1ULL);
        if (j.contains("limits")) {
            sc.limits.t_max = j.at("limits").value("t_max", 60.0);
            sc.limits.goal_radius = j.at("limits").value("goal_radius", 0.4);
        }
        if (j.contains("overrides"))
            for (const auto& [k, v] : j.at("overrides").items())
                sc.overrides[k] = scalar_to_string(v);
    } catch (const json::exception& e) {
        throw Error("scenario " + path + ": " + e.what());
    }

    sc.world.validate();
    if (sc.trials <= 0) throw Error("scenario: trials must be positive");
    if (sc.limits.t_max <= 0.0 || sc.limits.goal_radius <= 0.0)
        throw Error("scenario: limits must be positive");
    return sc;
}

}  // namespace amco
