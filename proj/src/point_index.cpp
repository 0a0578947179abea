#include "landuse/point_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace landuse {

PointIndex::PointIndex(const std::vector<Point>& points, const Rect& bounds)
    : points_(points), bounds_(bounds) {
    const std::size_t n = points_.size();
    // Aim for ~1 point per bucket, capped to keep the bucket table small.
    const double target = std::sqrt(std::max(1.0, static_cast<double>(n)));
    nx_ = std::clamp(static_cast<int>(target), 1, 2048);
    ny_ = nx_;
    const double hx = bounds_.width() / nx_;
    const double hy = bounds_.height() / ny_;
    const double h = std::max({hx, hy, 1e-12});
    inv_h_ = 1.0 / h;
    nx_ = std::max(1, static_cast<int>(std::ceil(bounds_.width() * inv_h_)));
    ny_ = std::max(1, static_cast<int>(std::ceil(bounds_.height() * inv_h_)));

    std::vector<std::uint32_t> counts(static_cast<std::size_t>(nx_) * ny_ + 1, 0);
    auto bucket_of = [&](const Point& p) {
        return static_cast<std::size_t>(bucket_y(p.y)) * nx_ + bucket_x(p.x);
    };
    for (const Point& p : points_) ++counts[bucket_of(p) + 1];
    for (std::size_t b = 1; b < counts.size(); ++b) counts[b] += counts[b - 1];
    bucket_start_ = counts;
    bucket_items_.resize(n);
    std::vector<std::uint32_t> cursor(bucket_start_.begin(), bucket_start_.end() - 1);
    for (std::uint32_t i = 0; i < n; ++i) {
        bucket_items_[cursor[bucket_of(points_[i])]++] = i;
    }
}

int PointIndex::bucket_x(double x) const {
    int b = static_cast<int>((x - bounds_.xmin) * inv_h_);
    return std::clamp(b, 0, nx_ - 1);
}

int PointIndex::bucket_y(double y) const {
    int b = static_cast<int>((y - bounds_.ymin) * inv_h_);
    return std::clamp(b, 0, ny_ - 1);
}

std::vector<std::pair<double, std::uint32_t>> PointIndex::nearest(const Point& p,
                                                                  std::size_t k) const {
    k = std::min(k, points_.size());
    std::vector<std::pair<double, std::uint32_t>> best;
    if (k == 0) return best;
    best.reserve(k + 8);

    const int bx = bucket_x(p.x);
    const int by = bucket_y(p.y);
    const double h = 1.0 / inv_h_;
    const int max_ring = std::max(nx_, ny_);

    auto scan_bucket = [&](int cx, int cy) {
        if (cx < 0 || cy < 0 || cx >= nx_ || cy >= ny_) return;
        const std::size_t b = static_cast<std::size_t>(cy) * nx_ + cx;
        for (std::uint32_t it = bucket_start_[b]; it < bucket_start_[b + 1]; ++it) {
            const std::uint32_t idx = bucket_items_[it];
            best.emplace_back(squared_distance(p, points_[idx]), idx);
        }
    };

    for (int ring = 0; ring <= max_ring; ++ring) {
        if (ring == 0) {
            scan_bucket(bx, by);
        } else {
            for (int cx = bx - ring; cx <= bx + ring; ++cx) {
                scan_bucket(cx, by - ring);
                scan_bucket(cx, by + ring);
            }
            for (int cy = by - ring + 1; cy <= by + ring - 1; ++cy) {
                scan_bucket(bx - ring, cy);
                scan_bucket(bx + ring, cy);
            }
        }
        if (best.size() >= k) {
            std::nth_element(best.begin(), best.begin() + (k - 1), best.end());
            const double kth = best[k - 1].first;
            // Any point beyond ring r is at least r*h away from p's bucket.
            const double ring_min = ring * h;
            if (ring_min * ring_min >= kth) break;
        }
    }

    if (best.size() > k) {
        std::nth_element(best.begin(), best.begin() + (k - 1), best.end());
        best.resize(k);
    }
    std::sort(best.begin(), best.end());
    return best;
}

} // namespace landuse
