#include "amco/fusion/history.hpp"

namespace amco {

int HistoryStore::ring_index(TerrainClass t) const {
    if (!is_walkable(t))
        throw Error("HistoryStore: only walkable terrain classes carry history");
    return static_cast<int>(t);
}

void HistoryStore::record(TerrainClass terrain, double norm, double t) {
    const int ring = ring_index(terrain);
    if (t < last_t_) throw Error("HistoryStore: time regression");
    last_t_ = t;
    rings_[ring].push_back({t, norm});
    evict(t);
}

void HistoryStore::evict(double now) {
    for (auto& ring : rings_)
        while (!ring.empty() && ring.front().t < now - window_) ring.pop_front();
}

bool HistoryStore::traversed(TerrainClass terrain) const {
    return !rings_[ring_index(terrain)].empty();
}

std::size_t HistoryStore::count(TerrainClass terrain) const {
    return rings_[ring_index(terrain)].size();
}

double HistoryStore::norm_sum(TerrainClass terrain) const {
    double s = 0.0;
    for (const auto& sample : rings_[ring_index(terrain)]) s += sample.norm;
    return s;
}

const std::deque<HistoryStore::Sample>& HistoryStore::samples(
    TerrainClass terrain) const {
    return rings_[ring_index(terrain)];
}

void HistoryStore::clear() {
    for (auto& ring : rings_) ring.clear();
    last_t_ = -std::numeric_limits<double>::infinity();
}

}  // namespace amco
