#include "landuse/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "landuse/errors.hpp"
#include "landuse/point_index.hpp"

namespace landuse {

namespace {

std::vector<Point> site_points(const std::vector<TowerSite>& sites) {
    std::vector<Point> pts;
    pts.reserve(sites.size());
    for (const auto& s : sites) pts.push_back(s.position);
    return pts;
}

double max_vertex_sqdist(const Point& site, const std::vector<Point>& poly) {
    double r2 = 0.0;
    for (const Point& v : poly) r2 = std::max(r2, squared_distance(site, v));
    return r2;
}

} // namespace

VoronoiDiagram build_voronoi(const std::vector<TowerSite>& sites, const Rect& bounds) {
    if (sites.empty()) throw EmptySites("build_voronoi: no sites");
    for (const auto& s : sites) {
        if (!std::isfinite(s.position.x) || !std::isfinite(s.position.y)) {
            throw Error("build_voronoi: non-finite site position for tower " + s.id);
        }
        if (!bounds.contains(s.position)) {
            throw Error("build_voronoi: site " + s.id + " outside bounds");
        }
    }

    const std::vector<Point> pts = site_points(sites);
    {
        // Duplicate detection via the index: exact position collisions only.
        PointIndex idx(pts, bounds);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            auto nn = idx.nearest(pts[i], 2);
            if (nn.size() > 1 && nn[1].first == 0.0) {
                throw DuplicateSite("build_voronoi: duplicate site position (" + sites[i].id + ")");
            }
        }
    }

    VoronoiDiagram diagram;
    diagram.bounds = bounds;
    diagram.cells.resize(sites.size());

    const std::vector<Point> rect = bounds.corners_ccw();
    PointIndex index(pts, bounds);

    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point& site = pts[i];
        std::vector<Point> poly = rect;
        double r2 = max_vertex_sqdist(site, poly);

        std::size_t k = 9; // first batch: the 8 nearest neighbors + self
        std::size_t processed = 1;
        bool done = false;
        while (!done && processed < pts.size()) {
            const auto nn = index.nearest(site, k);
            for (std::size_t j = processed; j < nn.size(); ++j) {
                const double d2 = nn[j].first;
                if (d2 >= 4.0 * r2) {
                    done = true;
                    break;
                }
                const Point& other = pts[nn[j].second];
                const Point mid{0.5 * (site.x + other.x), 0.5 * (site.y + other.y)};
                const Point normal{other.x - site.x, other.y - site.y};
                poly = clip_halfplane(poly, mid, normal);
                r2 = max_vertex_sqdist(site, poly);
            }
            if (nn.size() >= pts.size()) break;
            processed = nn.size();
            k *= 2;
        }

        VoronoiCell& cell = diagram.cells[i];
        cell.polygon = std::move(poly);
        cell.area = polygon_area(cell.polygon);
        if (cell.area <= 0.0) {
            throw Error("build_voronoi: degenerate cell for site " + sites[i].id);
        }
    }
    return diagram;
}

std::vector<double> volume_density(const VoronoiDiagram& diagram,
                                   const std::vector<double>& totals) {
    if (totals.size() != diagram.cells.size()) {
        throw MissingTower("volume_density: totals for " + std::to_string(totals.size()) +
                           " towers but diagram has " + std::to_string(diagram.cells.size()));
    }
    std::vector<double> density(totals.size());
    for (std::size_t i = 0; i < totals.size(); ++i) {
        density[i] = totals[i] / diagram.cells[i].area;
    }
    return density;
}

IdwPlan idw_plan(const std::vector<Point>& samples, const GridSpec& spec, double power,
                 int k_neighbors) {
    if (samples.empty()) throw EmptySamples("idw_plan: no samples");
    if (power <= 0.0) throw Error("idw_plan: power must be positive");
    if (k_neighbors < 1) throw Error("idw_plan: k_neighbors must be >= 1");

    constexpr double kExactHit = 1e-9; // meters

    if (k_neighbors > 255) throw Error("idw_plan: k_neighbors must be <= 255");

    IdwPlan plan;
    plan.spec = spec;
    plan.k = static_cast<int>(std::min<std::size_t>(k_neighbors, samples.size()));
    const std::size_t n = spec.n_cells();
    plan.index.assign(n * plan.k, 0);
    plan.weight.assign(n * plan.k, 0.0);
    plan.count.assign(n, 0);

    Rect bounds = spec.bounds();
    for (const Point& p : samples) {
        bounds.xmin = std::min(bounds.xmin, p.x);
        bounds.xmax = std::max(bounds.xmax, p.x);
        bounds.ymin = std::min(bounds.ymin, p.y);
        bounds.ymax = std::max(bounds.ymax, p.y);
    }
    PointIndex index(samples, bounds);

    for (int r = 0; r < spec.n_rows; ++r) {
        for (int c = 0; c < spec.n_cols; ++c) {
            const std::size_t cell = static_cast<std::size_t>(r) * spec.n_cols + c;
            const Point center = spec.cell_center(r, c);
            const auto nn = index.nearest(center, plan.k);
            double* w = plan.weight.data() + cell * plan.k;
            std::uint32_t* ix = plan.index.data() + cell * plan.k;

            if (nn.front().first <= kExactHit * kExactHit) {
                ix[0] = nn.front().second;
                w[0] = 1.0;
                plan.count[cell] = 1;
                continue;
            }
            double wsum = 0.0;
            for (std::size_t j = 0; j < nn.size(); ++j) {
                ix[j] = nn[j].second;
                w[j] = std::pow(nn[j].first, -0.5 * power); // d^-power from d^2
                wsum += w[j];
            }
            for (std::size_t j = 0; j < nn.size(); ++j) w[j] /= wsum;
            plan.count[cell] = static_cast<std::uint8_t>(nn.size());
        }
    }
    return plan;
}

RasterGrid idw_apply(const IdwPlan& plan, const std::vector<double>& values) {
    RasterGrid grid(plan.spec);
    const std::size_t n = plan.spec.n_cells();
    for (std::size_t cell = 0; cell < n; ++cell) {
        const double* w = plan.weight.data() + cell * plan.k;
        const std::uint32_t* ix = plan.index.data() + cell * plan.k;
        const int cnt = plan.count[cell];
        double acc = 0.0;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < cnt; ++j) {
            const double v = values[ix[j]];
            acc += w[j] * v;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        // Convex combination; pin rounding spill back into [lo, hi].
        grid.values[cell] = std::clamp(acc, lo, hi);
    }
    return grid;
}

RasterGrid idw_interpolate(const std::vector<Point>& positions,
                           const std::vector<double>& values, const GridSpec& spec,
                           double power, int k_neighbors) {
    if (positions.size() != values.size()) {
        throw DimensionMismatch("idw_interpolate: positions/values size mismatch");
    }
    return idw_apply(idw_plan(positions, spec, power, k_neighbors), values);
}

RasterGrid towers_per_cell(const std::vector<TowerSite>& sites, const GridSpec& spec) {
    RasterGrid grid(spec, 0.0);
    for (const auto& s : sites) {
        if (auto rc = spec.cell_of(s.position.x, s.position.y)) {
            grid.at(rc->first, rc->second) += 1.0;
        }
    }
    return grid;
}

Rect expanded_bounds(const std::vector<TowerSite>& sites, double margin) {
    if (sites.empty()) throw EmptySites("expanded_bounds: no sites");
    Rect r{sites[0].position.x, sites[0].position.y, sites[0].position.x, sites[0].position.y};
    for (const auto& s : sites) {
        r.xmin = std::min(r.xmin, s.position.x);
        r.xmax = std::max(r.xmax, s.position.x);
        r.ymin = std::min(r.ymin, s.position.y);
        r.ymax = std::max(r.ymax, s.position.y);
    }
    r.xmin -= margin;
    r.ymin -= margin;
    r.xmax += margin;
    r.ymax += margin;
    return r;
}

} // namespace landuse
