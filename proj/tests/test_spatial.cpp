#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "landuse/errors.hpp"
#include "landuse/rng.hpp"
#include "landuse/spatial.hpp"

using namespace landuse;

namespace {

std::vector<TowerSite> make_sites(const std::vector<Point>& pts) {
    std::vector<TowerSite> sites;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        sites.push_back({"T" + std::to_string(i), pts[i]});
    }
    return sites;
}

// Independent area oracle: rasterize the bounds and count nearest-site hits.
std::vector<double> brute_force_areas(const std::vector<Point>& pts, const Rect& bounds,
                                      double resolution) {
    std::vector<double> area(pts.size(), 0.0);
    const double cell = resolution * resolution;
    const int nx = static_cast<int>(std::round(bounds.width() / resolution));
    const int ny = static_cast<int>(std::round(bounds.height() / resolution));
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const Point p{bounds.xmin + (ix + 0.5) * resolution,
                          bounds.ymin + (iy + 0.5) * resolution};
            std::size_t best = 0;
            double best_d2 = squared_distance(p, pts[0]);
            for (std::size_t s = 1; s < pts.size(); ++s) {
                const double d2 = squared_distance(p, pts[s]);
                if (d2 < best_d2) {
                    best_d2 = d2;
                    best = s;
                }
            }
            area[best] += cell;
        }
    }
    return area;
}

} // namespace

TEST_SUITE("spatial") {

TEST_CASE("voronoi of two symmetric sites splits the rectangle at the bisector") {
    const Rect bounds{-5, -5, 15, 5};
    const auto diagram = build_voronoi(make_sites({{0, 0}, {10, 0}}), bounds);
    CHECK(diagram.cells[0].area == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(diagram.cells[1].area == doctest::Approx(100.0).epsilon(1e-12));
    // Every vertex of the left cell lies on or left of the bisector x = 5.
    for (const Point& v : diagram.cells[0].polygon) CHECK(v.x <= 5.0 + 1e-9);
    for (const Point& v : diagram.cells[1].polygon) CHECK(v.x >= 5.0 - 1e-9);
}

TEST_CASE("voronoi of one site covers the full bounds") {
    const Rect bounds{0, 0, 30, 20};
    const auto diagram = build_voronoi(make_sites({{7, 13}}), bounds);
    CHECK(diagram.cells[0].area == doctest::Approx(600.0).epsilon(1e-12));
}

TEST_CASE("voronoi areas match brute-force nearest-site rasterization") {
    Rng rng(42);
    const Rect bounds{0, 0, 100, 80};
    std::vector<Point> pts;
    for (int i = 0; i < 5; ++i) {
        pts.push_back({rng.uniform(5, 95), rng.uniform(5, 75)});
    }
    const auto diagram = build_voronoi(make_sites(pts), bounds);
    const auto oracle = brute_force_areas(pts, bounds, 0.1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(diagram.cells[i].area == doctest::Approx(oracle[i]).epsilon(0.01));
    }
}

TEST_CASE("voronoi area conservation across site counts") {
    Rng rng(7);
    const Rect bounds{-50, 10, 250, 140};
    for (int n : {1, 2, 3, 17, 150, 1200}) {
        std::vector<Point> pts;
        for (int i = 0; i < n; ++i) {
            pts.push_back({rng.uniform(bounds.xmin, bounds.xmax),
                           rng.uniform(bounds.ymin, bounds.ymax)});
        }
        const auto diagram = build_voronoi(make_sites(pts), bounds);
        double total = 0.0;
        for (const auto& cell : diagram.cells) {
            CHECK(cell.area > 0.0);
            total += cell.area;
        }
        CHECK(total == doctest::Approx(bounds.area()).epsilon(1e-6));
    }
}

TEST_CASE("voronoi nearest-site ownership") {
    Rng rng(1234);
    const Rect bounds{0, 0, 60, 60};
    std::vector<Point> pts;
    for (int i = 0; i < 40; ++i) {
        pts.push_back({rng.uniform(1, 59), rng.uniform(1, 59)});
    }
    const auto diagram = build_voronoi(make_sites(pts), bounds);
    for (int trial = 0; trial < 500; ++trial) {
        const Point p{rng.uniform(0.1, 59.9), rng.uniform(0.1, 59.9)};
        std::size_t best = 0;
        for (std::size_t s = 1; s < pts.size(); ++s) {
            if (squared_distance(p, pts[s]) < squared_distance(p, pts[best])) best = s;
        }
        CHECK(point_in_polygon(p, diagram.cells[best].polygon));
    }
}

TEST_CASE("voronoi rejects duplicates and empty input") {
    const Rect bounds{0, 0, 10, 10};
    CHECK_THROWS_AS(build_voronoi({}, bounds), EmptySites);
    CHECK_THROWS_AS(build_voronoi(make_sites({{1, 1}, {1, 1}}), bounds), DuplicateSite);
}

TEST_CASE("volume density divides totals by polygon area") {
    const Rect bounds{0, 0, 20, 20};
    const auto single = build_voronoi(make_sites({{10, 10}}), bounds);
    CHECK(volume_density(single, {800.0})[0] == doctest::Approx(2.0));
    CHECK(volume_density(single, {0.0})[0] == 0.0);

    const Rect two_bounds{-5, -5, 15, 5};
    const auto two = build_voronoi(make_sites({{0, 0}, {10, 0}}), two_bounds);
    const auto density = volume_density(two, {100.0, 300.0});
    CHECK(density[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(density[1] == doctest::Approx(3.0).epsilon(1e-12));

    CHECK_THROWS_AS(volume_density(two, {1.0}), MissingTower);
}

TEST_CASE("idw constant field and exact hits") {
    GridSpec spec{0, 0, 1.0, 4, 4};
    const auto constant = idw_interpolate({{1.3, 2.2}}, {7.0}, spec);
    for (double v : constant.values) CHECK(v == 7.0);

    // Sample exactly on the center of cell (row 3, col 0) -> (0.5, 0.5).
    const auto hit = idw_interpolate({{0.5, 0.5}, {3.0, 3.0}}, {3.5, 9.0}, spec);
    CHECK(hit.at(3, 0) == 3.5);
}

TEST_CASE("idw two-sample hand-computed value") {
    // Samples (0,0)=0 and (4,0)=8, cell center at (1,0), power 2:
    // (0*1 + 8*(1/9)) / (1 + 1/9) = 0.8
    GridSpec spec{0.5, -0.5, 1.0, 1, 1};
    const auto grid = idw_interpolate({{0, 0}, {4, 0}}, {0.0, 8.0}, spec, 2.0, 2);
    CHECK(grid.at(0, 0) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("idw output is bounded and exact at sample locations") {
    Rng rng(99);
    GridSpec spec{0, 0, 10.0, 20, 20};
    std::vector<Point> pts;
    std::vector<double> values;
    for (int i = 0; i < 60; ++i) {
        pts.push_back({rng.uniform(0, 200), rng.uniform(0, 200)});
        values.push_back(rng.uniform(-3, 12));
    }
    const double lo = *std::min_element(values.begin(), values.end());
    const double hi = *std::max_element(values.begin(), values.end());
    const auto grid = idw_interpolate(pts, values, spec, 2.0, 12);
    for (double v : grid.values) {
        CHECK(v >= lo);
        CHECK(v <= hi);
    }
}

TEST_CASE("idw is invariant under rigid translation") {
    Rng rng(55);
    std::vector<Point> pts;
    std::vector<double> values;
    for (int i = 0; i < 25; ++i) {
        pts.push_back({rng.uniform(0, 100), rng.uniform(0, 100)});
        values.push_back(rng.uniform(0, 5));
    }
    GridSpec spec{0, 0, 5.0, 20, 20};
    const auto base = idw_interpolate(pts, values, spec, 2.0, 8);

    const double tx = 12345.0, ty = -777.0;
    std::vector<Point> shifted;
    for (const Point& p : pts) shifted.push_back({p.x + tx, p.y + ty});
    GridSpec shifted_spec{spec.x_ll + tx, spec.y_ll + ty, 5.0, 20, 20};
    const auto moved = idw_interpolate(shifted, values, shifted_spec, 2.0, 8);
    for (std::size_t i = 0; i < base.values.size(); ++i) {
        CHECK(moved.values[i] == doctest::Approx(base.values[i]).epsilon(1e-12));
    }
}

TEST_CASE("idw rejects empty samples") {
    GridSpec spec{0, 0, 1.0, 2, 2};
    CHECK_THROWS_AS(idw_interpolate({}, {}, spec), EmptySamples);
}

TEST_CASE("towers_per_cell counts and conservation") {
    GridSpec spec{0, 0, 10.0, 4, 4};
    CHECK(towers_per_cell({}, spec).values == std::vector<double>(16, 0.0));

    const auto three = towers_per_cell(make_sites({{15, 35}, {16, 34}, {14.2, 33.7}}), spec);
    CHECK(three.at(0, 1) == 3.0);

    Rng rng(11);
    std::vector<Point> pts;
    for (int i = 0; i < 100; ++i) {
        pts.push_back({rng.uniform(-5, 45), rng.uniform(-5, 45)}); // some outside
    }
    const auto grid = towers_per_cell(make_sites(pts), spec);
    double total = 0.0;
    for (double v : grid.values) total += v;
    std::size_t direct = 0;
    for (const Point& p : pts) {
        if (p.x >= 0 && p.x <= 40 && p.y >= 0 && p.y <= 40) ++direct;
    }
    CHECK(total == static_cast<double>(direct));
}

TEST_CASE("shared-edge sites go to the lower cell index") {
    GridSpec spec{0, 0, 10.0, 4, 4};
    // x = 20 is the edge between col 1 and col 2.
    auto rc = spec.cell_of(20.0, 5.0);
    REQUIRE(rc.has_value());
    CHECK(rc->second == 1);
    CHECK(rc->first == 3); // y = 5 is in the bottom row
    // y = 30 is the edge between row 0 and row 1 (rows count from the top).
    rc = spec.cell_of(5.0, 30.0);
    REQUIRE(rc.has_value());
    CHECK(rc->first == 0);
    // Grid corners stay inside.
    CHECK(spec.cell_of(0.0, 40.0) == std::make_pair(0, 0));
    CHECK(spec.cell_of(40.0, 0.0) == std::make_pair(3, 3));
    CHECK_FALSE(spec.cell_of(-0.001, 5.0).has_value());
}

} // TEST_SUITE
