#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "landuse/geometry.hpp"
#include "landuse/raster.hpp"

namespace landuse {

struct TowerSite {
    std::string id;
    Point position;
};

struct VoronoiCell {
    std::vector<Point> polygon; // convex, counter-clockwise, clipped to bounds
    double area = 0.0;
};

struct VoronoiDiagram {
    Rect bounds;
    std::vector<VoronoiCell> cells; // index-aligned with the input sites
};

// Voronoi tessellation of the sites clipped to `bounds`, by half-plane
// intersection against neighbors in ascending distance (a neighbor farther
// than twice the cell's current vertex radius cannot cut it, so the scan
// stops early).
VoronoiDiagram build_voronoi(const std::vector<TowerSite>& sites, const Rect& bounds);

// density[t] = totals[t] / area[t], in calls per m^2.
std::vector<double> volume_density(const VoronoiDiagram& diagram,
                                   const std::vector<double>& totals);

// Precomputed IDW neighborhood: per cell, up to k contributing samples with
// normalized weights. The plan depends only on geometry, so one plan serves
// any number of value layers over the same sample positions.
struct IdwPlan {
    GridSpec spec;
    int k = 0;
    std::vector<std::uint32_t> index;  // n_cells * k entries
    std::vector<double> weight;        // normalized; unused tail entries are 0
    std::vector<std::uint8_t> count;   // contributing samples per cell
};

IdwPlan idw_plan(const std::vector<Point>& samples, const GridSpec& spec,
                 double power = 2.0, int k_neighbors = 12);
RasterGrid idw_apply(const IdwPlan& plan, const std::vector<double>& values);

RasterGrid idw_interpolate(const std::vector<Point>& positions,
                           const std::vector<double>& values, const GridSpec& spec,
                           double power = 2.0, int k_neighbors = 12);

// Integer tower counts per cell; a site on a shared cell edge counts toward
// the cell with the lower (row, col) index, sites outside the grid are
// ignored.
RasterGrid towers_per_cell(const std::vector<TowerSite>& sites, const GridSpec& spec);

// Axis-aligned bounding rectangle of the sites expanded by `margin` on every
// side (the default study bounds when none are configured).
Rect expanded_bounds(const std::vector<TowerSite>& sites, double margin);

} // namespace landuse
