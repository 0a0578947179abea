#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "landuse/geometry.hpp"

namespace landuse {

// Uniform bucket grid over a bounding rectangle, for k-nearest-neighbor
// queries against a fixed point set. Queries expand outward ring by ring and
// stop once the ring's minimum possible distance exceeds the current k-th
// best, so results are exact.
class PointIndex {
public:
    PointIndex() = default;
    PointIndex(const std::vector<Point>& points, const Rect& bounds);

    std::size_t size() const { return points_.size(); }

    // k nearest points to p, sorted by ascending squared distance (ties by
    // ascending index). Returns fewer than k when the set is smaller.
    std::vector<std::pair<double, std::uint32_t>> nearest(const Point& p, std::size_t k) const;

    std::uint32_t nearest_one(const Point& p) const { return nearest(p, 1).front().second; }

private:
    std::vector<Point> points_;
    Rect bounds_;
    int nx_ = 0, ny_ = 0;
    double inv_h_ = 0.0;
    std::vector<std::uint32_t> bucket_start_; // CSR layout over buckets
    std::vector<std::uint32_t> bucket_items_;

    int bucket_x(double x) const;
    int bucket_y(double y) const;
};

} // namespace landuse
