#pragma once

#include <array>
#include <deque>

#include "amco/core/types.hpp"

namespace amco {

/// Sliding-window store of recent traversability samples, one ring per
/// walkable terrain class. Single writer (the control loop); readers may
/// copy the whole store by value.
class HistoryStore {
public:
    struct Sample {
        double t = 0.0;     // seconds
        double norm = 0.0;  // |p|_2
    };

    explicit HistoryStore(double window_seconds = 60.0)
        : window_(window_seconds) {}

    double window_seconds() const { return window_; }

    /// Append a sample; time must be non-decreasing across calls.
    /// Entries older than the window are evicted from every ring.
    void record(TerrainClass terrain, double norm, double t);

    bool traversed(TerrainClass terrain) const;  // terrain in Gamma?
    std::size_t count(TerrainClass terrain) const;
    double norm_sum(TerrainClass terrain) const;
    const std::deque<Sample>& samples(TerrainClass terrain) const;

    void clear();

private:
    int ring_index(TerrainClass t) const;
    void evict(double now);

    double window_;
    double last_t_ = -std::numeric_limits<double>::infinity();
    std::array<std::deque<Sample>, kWalkableTerrainCount> rings_;
};

}  // namespace amco
