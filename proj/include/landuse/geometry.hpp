#pragma once

#include <cmath>
#include <vector>

namespace landuse {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double squared_distance(const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

struct Rect {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 0.0;
    double ymax = 0.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    double area() const { return width() * height(); }
    bool contains(const Point& p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }
    std::vector<Point> corners_ccw() const {
        return {{xmin, ymin}, {xmax, ymin}, {xmax, ymax}, {xmin, ymax}};
    }
};

// Signed polygon area (shoelace); positive for counter-clockwise vertex order.
inline double polygon_area(const std::vector<Point>& poly) {
    if (poly.size() < 3) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        acc += (poly[j].x + poly[i].x) * (poly[i].y - poly[j].y);
    }
    return 0.5 * acc;
}

// Clips `poly` with the half-plane { p : (p - origin) . normal <= 0 }
// (Sutherland-Hodgman against a single line).
inline std::vector<Point> clip_halfplane(const std::vector<Point>& poly,
                                         const Point& origin, const Point& normal) {
    std::vector<Point> out;
    if (poly.empty()) return out;
    out.reserve(poly.size() + 2);
    auto side = [&](const Point& p) {
        return (p.x - origin.x) * normal.x + (p.y - origin.y) * normal.y;
    };
    const std::size_t n = poly.size();
    double sp = side(poly[n - 1]);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& prev = poly[(i + n - 1) % n];
        const Point& cur = poly[i];
        const double sc = side(cur);
        if (sp <= 0.0) {
            out.push_back(prev);
            if (sc > 0.0) {
                const double t = sp / (sp - sc);
                out.push_back({prev.x + t * (cur.x - prev.x), prev.y + t * (cur.y - prev.y)});
            }
        } else if (sc <= 0.0) {
            const double t = sp / (sp - sc);
            out.push_back({prev.x + t * (cur.x - prev.x), prev.y + t * (cur.y - prev.y)});
        }
        sp = sc;
    }
    return out;
}

// Even-odd point-in-polygon test; boundary points may land either way.
inline bool point_in_polygon(const Point& p, const std::vector<Point>& poly) {
    bool inside = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const Point& a = poly[j];
        const Point& b = poly[i];
        if ((b.y > p.y) != (a.y > p.y)) {
            const double xint = b.x + (p.y - b.y) * (a.x - b.x) / (a.y - b.y);
            if (p.x < xint) inside = !inside;
        }
    }
    return inside;
}

} // namespace landuse
