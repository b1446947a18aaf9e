#include "amco/core/cost_map.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "amco/kernels/kernels.hpp"

namespace amco {

std::string_view map_kind_name(MapKind k) {
    switch (k) {
        case MapKind::General: return "general";
        case MapKind::History: return "history";
        case MapKind::Proprio: return "proprio";
        case MapKind::Coupled: return "coupled";
    }
    return "general";
}

CostMap::CostMap(int width, int height, MapKind kind, float fill)
    : width_(width), height_(height), kind_(kind) {
    if (width <= 0 || height <= 0)
        throw Error("CostMap dimensions must be positive");
    values_.assign(static_cast<std::size_t>(width) * height, fill);
}

void CostMap::clamp_all() {
    kernels::clamp255(values_.data(), values_.size());
}

static std::uint8_t to_byte(float v) {
    float c = clamp_cost(std::round(v));
    return static_cast<std::uint8_t>(c);
}

void CostMap::write_pgm(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << "P5\n" << width_ << " " << height_ << "\n255\n";
    std::vector<std::uint8_t> row(width_);
    for (int i = 0; i < height_; ++i) {
        for (int j = 0; j < width_; ++j) row[j] = to_byte(at(i, j));
        out.write(reinterpret_cast<const char*>(row.data()), row.size());
    }
    if (!out) throw Error("write failed: " + path);
}

void CostMap::write_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw Error("cannot open for writing: " + path);
    for (int i = 0; i < height_; ++i) {
        for (int j = 0; j < width_; ++j) {
            if (j) out << ',';
            out << static_cast<int>(to_byte(at(i, j)));
        }
        out << '\n';
    }
    if (!out) throw Error("write failed: " + path);
}

}  // namespace amco
