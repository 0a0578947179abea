#include "landuse/synthcity.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>

#include "landuse/errors.hpp"
#include "landuse/evaluation.hpp"
#include "landuse/format.hpp"
#include "landuse/io.hpp"
#include "landuse/point_index.hpp"
#include "landuse/rng.hpp"
#include "landuse/spatial.hpp"

namespace landuse {

namespace {

// Largest-remainder apportionment of n slots to the target shares, then a
// seeded shuffle so class placement carries no positional bias.
std::vector<int> apportion_classes(int n, const std::vector<double>& shares, Rng& rng) {
    const int k = static_cast<int>(shares.size());
    double total = 0.0;
    for (double s : shares) total += s;
    std::vector<int> count(k, 0);
    std::vector<std::pair<double, int>> remainder;
    int assigned = 0;
    for (int i = 0; i < k; ++i) {
        const double exact = n * shares[i] / total;
        count[i] = static_cast<int>(exact);
        assigned += count[i];
        remainder.push_back({exact - count[i], i});
    }
    std::sort(remainder.begin(), remainder.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    for (int i = 0; i < n - assigned; ++i) ++count[remainder[i % k].second];

    std::vector<int> classes;
    classes.reserve(n);
    for (int i = 0; i < k; ++i) classes.insert(classes.end(), count[i], i + 1);
    rng.shuffle(classes);
    return classes;
}

} // namespace

ZoneModel ZoneModel::blocks(const GridSpec& grid, int block_cols, int block_rows,
                            const std::vector<double>& shares, int n_classes,
                            std::uint64_t seed) {
    if (block_cols < 1 || block_rows < 1) throw Error("ZoneModel: invalid block layout");
    ZoneModel zm;
    zm.kind_ = Zoning::Blocks;
    zm.n_classes_ = n_classes;
    zm.bounds_ = grid.bounds();
    zm.block_cols_ = block_cols;
    zm.block_rows_ = block_rows;
    zm.block_w_ = zm.bounds_.width() / block_cols;
    zm.block_h_ = zm.bounds_.height() / block_rows;
    Rng rng(mix_seed(seed, 0x20E5));
    zm.block_class_ = apportion_classes(block_cols * block_rows, shares, rng);
    return zm;
}

ZoneModel ZoneModel::voronoi(const GridSpec& grid, int n_seeds,
                             const std::vector<double>& shares, int n_classes,
                             std::uint64_t seed) {
    if (n_seeds < 1) throw Error("ZoneModel: need at least one zone seed");
    ZoneModel zm;
    zm.kind_ = Zoning::VoronoiZones;
    zm.n_classes_ = n_classes;
    zm.bounds_ = grid.bounds();
    Rng rng(mix_seed(seed, 0x20E5));
    zm.seeds_.reserve(n_seeds);
    for (int i = 0; i < n_seeds; ++i) {
        zm.seeds_.push_back({rng.uniform(zm.bounds_.xmin, zm.bounds_.xmax),
                             rng.uniform(zm.bounds_.ymin, zm.bounds_.ymax)});
    }

    // Assign classes by largest remaining share deficit, biggest zones first,
    // so realized area shares track the requested ones closely.
    std::vector<TowerSite> sites;
    sites.reserve(n_seeds);
    for (int i = 0; i < n_seeds; ++i) {
        sites.push_back({"Z" + std::to_string(i), zm.seeds_[i]});
    }
    const VoronoiDiagram zones = build_voronoi(sites, zm.bounds_);
    std::vector<std::size_t> order(n_seeds);
    for (int i = 0; i < n_seeds; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (zones.cells[a].area != zones.cells[b].area) {
            return zones.cells[a].area > zones.cells[b].area;
        }
        return a < b;
    });

    double share_total = 0.0;
    for (double s : shares) share_total += s;
    std::vector<double> deficit(n_classes);
    for (int k = 0; k < n_classes; ++k) {
        deficit[k] = shares[k] / share_total * zm.bounds_.area();
    }
    zm.seed_class_.assign(n_seeds, 1);
    for (std::size_t idx : order) {
        int best = 0;
        for (int k = 1; k < n_classes; ++k) {
            if (deficit[k] > deficit[best]) best = k;
        }
        zm.seed_class_[idx] = best + 1;
        deficit[best] -= zones.cells[idx].area;
    }
    return zm;
}

int ZoneModel::block_index(const Point& p) const {
    int bx = static_cast<int>((p.x - bounds_.xmin) / block_w_);
    int by = static_cast<int>((p.y - bounds_.ymin) / block_h_);
    bx = std::clamp(bx, 0, block_cols_ - 1);
    by = std::clamp(by, 0, block_rows_ - 1);
    return by * block_cols_ + bx;
}

int ZoneModel::class_at(const Point& p) const {
    if (kind_ == Zoning::Blocks) return block_class_[block_index(p)];
    std::size_t best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < seeds_.size(); ++i) {
        const double d2 = squared_distance(p, seeds_[i]);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return seed_class_[best];
}

void ZoneModel::mixture_at(const Point& p, double bandwidth, std::vector<double>& w) const {
    std::fill(w.begin(), w.end(), 0.0);

    if (kind_ == Zoning::Blocks) {
        const int bx = std::clamp(static_cast<int>((p.x - bounds_.xmin) / block_w_), 0,
                                  block_cols_ - 1);
        const int by = std::clamp(static_cast<int>((p.y - bounds_.ymin) / block_h_), 0,
                                  block_rows_ - 1);
        const int own = block_class_[by * block_cols_ + bx];

        // Distance to the nearest internal block edge and the block beyond it.
        double edge_dist = std::numeric_limits<double>::infinity();
        int other = own;
        const double dl = p.x - (bounds_.xmin + bx * block_w_);
        const double dr = (bounds_.xmin + (bx + 1) * block_w_) - p.x;
        const double db = p.y - (bounds_.ymin + by * block_h_);
        const double dt = (bounds_.ymin + (by + 1) * block_h_) - p.y;
        if (bx > 0 && dl < edge_dist) {
            edge_dist = dl;
            other = block_class_[by * block_cols_ + bx - 1];
        }
        if (bx + 1 < block_cols_ && dr < edge_dist) {
            edge_dist = dr;
            other = block_class_[by * block_cols_ + bx + 1];
        }
        if (by > 0 && db < edge_dist) {
            edge_dist = db;
            other = block_class_[(by - 1) * block_cols_ + bx];
        }
        if (by + 1 < block_rows_ && dt < edge_dist) {
            edge_dist = dt;
            other = block_class_[(by + 1) * block_cols_ + bx];
        }
        if (bandwidth <= 0.0 || other == own || edge_dist >= bandwidth) {
            w[own - 1] = 1.0;
            return;
        }
        const double w_own = 0.5 + edge_dist / (2.0 * bandwidth);
        w[own - 1] = w_own;
        w[other - 1] += 1.0 - w_own;
        return;
    }

    // Voronoi zones: blend by the signed distance to the bisector between the
    // nearest seed and the nearest seed of a different class.
    std::size_t best = 0;
    double d_own = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < seeds_.size(); ++i) {
        const double d2 = squared_distance(p, seeds_[i]);
        if (d2 < d_own) {
            d_own = d2;
            best = i;
        }
    }
    const int own = seed_class_[best];
    double d_other = std::numeric_limits<double>::infinity();
    int other = own;
    for (std::size_t i = 0; i < seeds_.size(); ++i) {
        if (seed_class_[i] == own) continue;
        const double d2 = squared_distance(p, seeds_[i]);
        if (d2 < d_other) {
            d_other = d2;
            other = seed_class_[i];
        }
    }
    if (other == own) { // single-class layout
        w[own - 1] = 1.0;
        return;
    }
    const double s = 0.5 * (std::sqrt(d_other) - std::sqrt(d_own));
    if (bandwidth <= 0.0 || s >= bandwidth) {
        w[own - 1] = 1.0;
        return;
    }
    const double w_own = 0.5 + s / (2.0 * bandwidth);
    w[own - 1] = w_own;
    w[other - 1] += 1.0 - w_own;
}

std::vector<double> expected_tower_series(const std::vector<double>& class_area,
                                          const std::vector<ClassProfile>& profiles) {
    std::vector<double> series(kHoursPerWeek, 0.0);
    for (std::size_t k = 0; k < profiles.size(); ++k) {
        if (class_area[k] <= 0.0) continue;
        const double scale = class_area[k] * profiles[k].volume;
        for (int h = 0; h < kHoursPerWeek; ++h) series[h] += scale * profiles[k].shape[h];
    }
    return series;
}

namespace {

void validate(const SynthConfig& cfg) {
    if (cfg.n_classes < 2) throw Error("synth config: need at least 2 classes");
    if (static_cast<int>(cfg.profiles.size()) != cfg.n_classes ||
        static_cast<int>(cfg.class_share.size()) != cfg.n_classes ||
        static_cast<int>(cfg.samples_per_class.size()) != cfg.n_classes) {
        throw Error("synth config: profiles, shares, and sample counts must match n_classes");
    }
    for (int k = 0; k < cfg.n_classes; ++k) {
        if (cfg.profiles[k].class_id != k + 1) {
            throw Error("synth config: profile class ids must be contiguous from 1");
        }
        if (cfg.class_share[k] <= 0.0) throw Error("synth config: class shares must be positive");
        bool any = false;
        for (double v : cfg.profiles[k].shape) {
            if (v < 0.0) throw Error("synth config: negative profile shape");
            if (v > 0.0) any = true;
        }
        if (!any) throw Error("synth config: all-zero profile shape");
        if (cfg.profiles[k].sigma < 0.0) throw Error("synth config: negative sigma");
    }
    if (cfg.grid.n_rows < 1 || cfg.grid.n_cols < 1 || cfg.grid.cell_size <= 0.0) {
        throw Error("synth config: invalid grid");
    }
    if (cfg.fine_resolution_m <= 0.0 || cfg.fine_resolution_m > cfg.grid.cell_size) {
        throw Error("synth config: fine resolution must be in (0, cell_size]");
    }
    if (cfg.tower_intensity_per_km2 <= 0.0) throw Error("synth config: invalid tower intensity");
}

ZoneModel build_zones(const SynthConfig& cfg) {
    if (cfg.zoning == Zoning::Blocks) {
        return ZoneModel::blocks(cfg.grid, cfg.block_cols, cfg.block_rows, cfg.class_share,
                                 cfg.n_classes, cfg.seed);
    }
    return ZoneModel::voronoi(cfg.grid, cfg.n_zone_seeds, cfg.class_share, cfg.n_classes,
                              cfg.seed);
}

GridSpec fine_spec(const SynthConfig& cfg) {
    GridSpec fs;
    fs.x_ll = cfg.grid.x_ll;
    fs.y_ll = cfg.grid.y_ll;
    fs.cell_size = cfg.fine_resolution_m;
    fs.n_cols = static_cast<int>(std::lround(cfg.grid.bounds().width() / fs.cell_size));
    fs.n_rows = static_cast<int>(std::lround(cfg.grid.bounds().height() / fs.cell_size));
    return fs;
}

std::string zoning_name(Zoning z) {
    return z == Zoning::Blocks ? "blocks" : "voronoi";
}

} // namespace

GenerationSummary generate_city(const SynthConfig& cfg, const std::string& out_dir) {
    validate(cfg);
    const auto path = [&](const char* name) { return out_dir + "/" + name; };

    const ZoneModel zones = build_zones(cfg);

    // Fine-resolution ground truth.
    const GridSpec fs = fine_spec(cfg);
    RasterGrid truth(fs, -9999.0);
    std::vector<std::size_t> class_cells(cfg.n_classes, 0);
    for (int r = 0; r < fs.n_rows; ++r) {
        for (int c = 0; c < fs.n_cols; ++c) {
            const int cls = zones.class_at(fs.cell_center(r, c));
            truth.at(r, c) = cls;
            ++class_cells[cls - 1];
        }
    }
    write_raster(path("truth.asc"), truth);

    // Tower placement, uniform over the study bounds.
    const Rect bounds = cfg.grid.bounds();
    const double area_km2 = bounds.area() / 1e6;
    const std::size_t n_towers = static_cast<std::size_t>(
        std::max(1.0, std::round(cfg.tower_intensity_per_km2 * area_km2)));
    Rng tower_rng(mix_seed(cfg.seed, 0x703E));
    std::vector<TowerSite> towers;
    towers.reserve(n_towers);
    std::set<std::pair<double, double>> used;
    while (towers.size() < n_towers) {
        Point p{tower_rng.uniform(bounds.xmin, bounds.xmax),
                tower_rng.uniform(bounds.ymin, bounds.ymax)};
        if (!used.insert({p.x, p.y}).second) continue;
        TowerSite site;
        char id[16];
        std::snprintf(id, sizeof id, "T%05zu", towers.size() + 1);
        site.id = id;
        site.position = p;
        towers.push_back(std::move(site));
    }
    write_towers(path("towers.csv"), towers);

    // Accumulate each tower's catchment: every fine cell contributes its area
    // to the class mixture of the nearest tower (a rasterized Voronoi cell).
    std::vector<Point> tower_points;
    tower_points.reserve(n_towers);
    for (const auto& t : towers) tower_points.push_back(t.position);
    PointIndex tower_index(tower_points, bounds);

    const double fine_area = fs.cell_size * fs.cell_size;
    Matrix catchment(n_towers, cfg.n_classes);
    std::vector<double> w(cfg.n_classes);
    for (int r = 0; r < fs.n_rows; ++r) {
        for (int c = 0; c < fs.n_cols; ++c) {
            const Point center = fs.cell_center(r, c);
            const std::uint32_t t = tower_index.nearest_one(center);
            zones.mixture_at(center, cfg.mixing_bandwidth_m, w);
            double* row = catchment.row(t);
            for (int k = 0; k < cfg.n_classes; ++k) row[k] += w[k] * fine_area;
        }
    }

    // Weekly call series with per-hour multiplicative lognormal noise.
    Rng noise_rng(mix_seed(cfg.seed, 0x401E));
    std::vector<std::vector<std::int64_t>> counts(n_towers);
    for (std::size_t t = 0; t < n_towers; ++t) {
        const std::vector<double> class_area(catchment.row(t),
                                             catchment.row(t) + cfg.n_classes);
        const std::vector<double> series = expected_tower_series(class_area, cfg.profiles);
        double total_area = 0.0, sigma = 0.0;
        for (int k = 0; k < cfg.n_classes; ++k) {
            total_area += class_area[k];
            sigma += class_area[k] * cfg.profiles[k].sigma;
        }
        sigma = total_area > 0.0 ? sigma / total_area : 0.0;

        counts[t].resize(kHoursPerWeek);
        for (int h = 0; h < kHoursPerWeek; ++h) {
            double v = series[h];
            if (sigma > 0.0) v *= std::exp(sigma * noise_rng.normal());
            counts[t][h] = std::llround(v);
        }
    }
    write_calls(path("calls.csv"), towers, counts);

    // Training samples: pure cells at least 2 cells from any zone border with
    // at least one tower inside.
    const MajorityTruth mt = majority_truth(truth, cfg.grid, cfg.n_classes);
    const RasterGrid tower_counts = towers_per_cell(towers, cfg.grid);

    auto pure_class = [&](int r, int c) -> int {
        const std::size_t cell = static_cast<std::size_t>(r) * cfg.grid.n_cols + c;
        if (mt.majority.values[cell] == mt.majority.nodata) return 0;
        const int cls = static_cast<int>(std::lround(mt.majority.values[cell]));
        return mt.occupancy.at(cell, cls - 1) == 1.0 ? cls : 0;
    };

    std::vector<std::vector<std::pair<int, int>>> eligible(cfg.n_classes);
    for (int r = 0; r < cfg.grid.n_rows; ++r) {
        for (int c = 0; c < cfg.grid.n_cols; ++c) {
            const int cls = pure_class(r, c);
            if (cls == 0 || tower_counts.at(r, c) < 1.0) continue;
            bool interior = true;
            for (int dr = -2; dr <= 2 && interior; ++dr) {
                for (int dc = -2; dc <= 2 && interior; ++dc) {
                    const int rr = r + dr, cc = c + dc;
                    if (rr < 0 || cc < 0 || rr >= cfg.grid.n_rows || cc >= cfg.grid.n_cols) {
                        continue; // study edge, not a zone border
                    }
                    if (pure_class(rr, cc) != cls) interior = false;
                }
            }
            if (interior) eligible[cls - 1].push_back({r, c});
        }
    }

    Rng sample_rng(mix_seed(cfg.seed, 0x5A3E));
    std::vector<SamplePoint> samples;
    for (int k = 0; k < cfg.n_classes; ++k) {
        if (static_cast<int>(eligible[k].size()) < cfg.samples_per_class[k]) {
            throw Unsatisfiable("generate_city: class " + std::to_string(k + 1) + " has " +
                                std::to_string(eligible[k].size()) +
                                " eligible cells, need " +
                                std::to_string(cfg.samples_per_class[k]));
        }
        sample_rng.shuffle(eligible[k]);
        for (int i = 0; i < cfg.samples_per_class[k]; ++i) {
            const Point center = cfg.grid.cell_center(eligible[k][i].first,
                                                      eligible[k][i].second);
            samples.push_back({center.x, center.y, k + 1});
        }
    }
    write_samples(path("samples.csv"), samples);

    std::vector<LandUseClass> classes;
    for (const auto& p : cfg.profiles) classes.push_back({p.class_id, p.name});
    write_classes(path("classes.csv"), classes);

    // Manifest: the named preset plus every scalar needed to regenerate.
    {
        std::ofstream mf(path("manifest.txt"));
        if (!mf) throw InputError("cannot write manifest.txt");
        mf << "preset = " << cfg.name << "\n";
        mf << "seed = " << cfg.seed << "\n";
        mf << "n_classes = " << cfg.n_classes << "\n";
        mf << "zoning = " << zoning_name(cfg.zoning) << "\n";
        if (cfg.zoning == Zoning::Blocks) {
            mf << "block_cols = " << cfg.block_cols << "\n";
            mf << "block_rows = " << cfg.block_rows << "\n";
        } else {
            mf << "n_zone_seeds = " << cfg.n_zone_seeds << "\n";
        }
        mf << "mixing_bandwidth_m = " << format_full(cfg.mixing_bandwidth_m) << "\n";
        mf << "tower_intensity_per_km2 = " << format_full(cfg.tower_intensity_per_km2) << "\n";
        mf << "fine_resolution_m = " << format_full(cfg.fine_resolution_m) << "\n";
        mf << "grid_origin_x = " << format_full(cfg.grid.x_ll) << "\n";
        mf << "grid_origin_y = " << format_full(cfg.grid.y_ll) << "\n";
        mf << "grid_cell_size = " << format_full(cfg.grid.cell_size) << "\n";
        mf << "grid_rows = " << cfg.grid.n_rows << "\n";
        mf << "grid_cols = " << cfg.grid.n_cols << "\n";
        mf << "n_towers = " << n_towers << "\n";
        for (int k = 0; k < cfg.n_classes; ++k) {
            mf << "class_" << k + 1 << " = " << cfg.profiles[k].name << ","
               << format_full(cfg.class_share[k]) << "," << format_full(cfg.profiles[k].volume)
               << "," << format_full(cfg.profiles[k].sigma) << ","
               << cfg.samples_per_class[k] << "\n";
        }
    }

    // Ready-to-run pipeline configuration pointing at the generated files.
    {
        std::ofstream pc(path("pipeline.conf"));
        if (!pc) throw InputError("cannot write pipeline.conf");
        pc << "# generated by synth, preset " << cfg.name << "\n";
        pc << "towers = towers.csv\n";
        pc << "calls = calls.csv\n";
        pc << "truth = truth.asc\n";
        pc << "samples = samples.csv\n";
        pc << "classes = classes.csv\n";
        pc << "seed = " << cfg.seed << "\n";
        pc << "grid_origin_x = " << format_full(cfg.grid.x_ll) << "\n";
        pc << "grid_origin_y = " << format_full(cfg.grid.y_ll) << "\n";
        pc << "grid_cell_size = " << format_full(cfg.grid.cell_size) << "\n";
        pc << "grid_rows = " << cfg.grid.n_rows << "\n";
        pc << "grid_cols = " << cfg.grid.n_cols << "\n";
    }

    GenerationSummary summary;
    summary.n_towers = n_towers;
    const double total_cells = static_cast<double>(fs.n_cells());
    for (int k = 0; k < cfg.n_classes; ++k) {
        summary.realized_share.push_back(class_cells[k] / total_cells);
    }
    summary.n_samples = cfg.samples_per_class;
    return summary;
}

namespace {

std::array<double, 24> daily_curve(double base,
                                   std::initializer_list<std::array<double, 3>> bumps) {
    std::array<double, 24> curve;
    for (int h = 0; h < 24; ++h) {
        double v = base;
        for (const auto& b : bumps) {
            const double t = (h - b[0]) / b[1];
            v += b[2] * std::exp(-0.5 * t * t);
        }
        curve[h] = v;
    }
    return curve;
}

std::array<double, kHoursPerWeek> weekly_shape(const std::array<double, 24>& curve,
                                               const std::array<double, 7>& day_scale) {
    std::array<double, kHoursPerWeek> shape;
    double sum = 0.0;
    for (int d = 0; d < 7; ++d) {
        for (int h = 0; h < 24; ++h) sum += shape[d * 24 + h] = day_scale[d] * curve[h];
    }
    const double mean = sum / kHoursPerWeek;
    for (double& v : shape) v /= mean;
    return shape;
}

ClassProfile make_profile(int id, const std::string& name,
                          const std::array<double, kHoursPerWeek>& shape, double volume,
                          double sigma) {
    ClassProfile p;
    p.class_id = id;
    p.name = name;
    p.shape = shape;
    p.volume = volume;
    p.sigma = sigma;
    return p;
}

constexpr std::array<double, 7> kAllDays{1, 1, 1, 1, 1, 1, 1};
constexpr std::array<double, 7> kWorkWeek{1, 1, 1, 1, 1, 0.15, 0.1};
constexpr std::array<double, 7> kShopWeek{1, 1, 1, 1, 1.1, 1.25, 1.2};
constexpr std::array<double, 7> kLeisureWeek{1, 1, 1, 1, 1, 1.3, 1.35};
constexpr std::array<double, 7> kNightWeek{1, 1, 1, 1, 1.15, 1.2, 1.05};

std::array<double, kHoursPerWeek> residential_shape() {
    return weekly_shape(daily_curve(0.25, {{{7.5, 1.5, 1.2}}, {{20.0, 2.5, 1.5}}}), kAllDays);
}
std::array<double, kHoursPerWeek> business_shape() {
    return weekly_shape(daily_curve(0.10, {{{10.0, 1.8, 1.5}}, {{15.0, 2.2, 1.4}}}), kWorkWeek);
}
std::array<double, kHoursPerWeek> commercial_shape() {
    return weekly_shape(daily_curve(0.30, {{{12.0, 3.0, 1.2}}, {{19.0, 3.0, 1.5}}}), kShopWeek);
}
std::array<double, kHoursPerWeek> openspace_shape() {
    return weekly_shape(daily_curve(0.70, {{{13.0, 4.0, 0.5}}}), kLeisureWeek);
}
std::array<double, kHoursPerWeek> nightlife_shape() {
    return weekly_shape(daily_curve(0.35, {{{1.0, 2.0, 1.5}}, {{23.0, 2.0, 1.3}}}), kNightWeek);
}
std::array<double, kHoursPerWeek> midday_shape() {
    return weekly_shape(daily_curve(0.20, {{{13.0, 2.0, 1.6}}}), kAllDays);
}

std::vector<ClassProfile> distinct_profiles(double sigma) {
    return {
        make_profile(1, "Residential", residential_shape(), 0.006, sigma),
        make_profile(2, "Business", business_shape(), 0.012, sigma),
        make_profile(3, "Commercial", commercial_shape(), 0.020, sigma),
        make_profile(4, "OpenSpace", openspace_shape(), 0.0025, sigma),
        make_profile(5, "Others", nightlife_shape(), 0.009, sigma),
    };
}

GridSpec square_grid(int rows, int cols, double cell = 200.0) {
    GridSpec g;
    g.x_ll = 0.0;
    g.y_ll = 0.0;
    g.cell_size = cell;
    g.n_rows = rows;
    g.n_cols = cols;
    return g;
}

} // namespace

std::vector<SynthConfig> scenario_presets() {
    std::vector<SynthConfig> presets;

    {
        // Dense towers, crisp grid-aligned zones: the high-detection baseline.
        SynthConfig cfg;
        cfg.name = "clean";
        cfg.n_classes = 5;
        cfg.profiles = distinct_profiles(0.05);
        cfg.class_share = {0.2, 0.2, 0.2, 0.2, 0.2};
        cfg.zoning = Zoning::Blocks;
        cfg.block_cols = 5;
        cfg.block_rows = 1;
        cfg.mixing_bandwidth_m = 0.0;
        cfg.tower_intensity_per_km2 = 25.0; // one tower per cell on average
        cfg.fine_resolution_m = 50.0;
        cfg.grid = square_grid(125, 160);
        cfg.samples_per_class = {25, 25, 20, 25, 10};
        presets.push_back(cfg);
    }
    {
        // Small clean variant for demos and determinism checks.
        SynthConfig cfg;
        cfg.name = "demo";
        cfg.n_classes = 5;
        cfg.profiles = distinct_profiles(0.05);
        cfg.class_share = {0.2, 0.2, 0.2, 0.2, 0.2};
        cfg.zoning = Zoning::Blocks;
        cfg.block_cols = 5;
        cfg.block_rows = 1;
        cfg.mixing_bandwidth_m = 0.0;
        cfg.tower_intensity_per_km2 = 12.0;
        cfg.fine_resolution_m = 50.0;
        cfg.grid = square_grid(40, 40);
        cfg.samples_per_class = {8, 8, 8, 8, 8};
        presets.push_back(cfg);
    }
    {
        // Qualitative stand-in for the study area: irregular zones, moderate
        // border mixing, sparse towers, sample split 25/25/20/25/10.
        SynthConfig cfg;
        cfg.name = "paper_shaped";
        cfg.n_classes = 5;
        cfg.profiles = {
            make_profile(1, "Residential", residential_shape(), 0.008, 0.10),
            make_profile(2, "Business", business_shape(), 0.004, 0.10),
            make_profile(3, "Commercial", commercial_shape(), 0.020, 0.10),
            make_profile(4, "OpenSpace", openspace_shape(), 0.0035, 0.10),
            make_profile(5, "Others", nightlife_shape(), 0.006, 0.10),
        };
        cfg.class_share = {25 / 105.0, 25 / 105.0, 20 / 105.0, 25 / 105.0, 10 / 105.0};
        cfg.zoning = Zoning::VoronoiZones;
        cfg.n_zone_seeds = 40;
        cfg.mixing_bandwidth_m = 200.0;
        cfg.tower_intensity_per_km2 = 8.0;
        cfg.fine_resolution_m = 50.0;
        cfg.grid = square_grid(80, 80);
        cfg.samples_per_class = {25, 25, 20, 25, 10};
        presets.push_back(cfg);
    }
    {
        // Classes 1 and 2 share their pattern and differ only in volume.
        SynthConfig cfg;
        cfg.name = "pattern_degenerate";
        cfg.n_classes = 5;
        cfg.profiles = {
            make_profile(1, "Residential", residential_shape(), 0.004, 0.05),
            make_profile(2, "Business", residential_shape(), 0.016, 0.05),
            make_profile(3, "Commercial", business_shape(), 0.007, 0.05),
            make_profile(4, "OpenSpace", nightlife_shape(), 0.010, 0.05),
            make_profile(5, "Others", midday_shape(), 0.013, 0.05),
        };
        cfg.class_share = {0.2, 0.2, 0.2, 0.2, 0.2};
        cfg.zoning = Zoning::VoronoiZones;
        cfg.n_zone_seeds = 24;
        cfg.mixing_bandwidth_m = 0.0;
        cfg.tower_intensity_per_km2 = 10.0;
        cfg.fine_resolution_m = 50.0;
        cfg.grid = square_grid(60, 60);
        cfg.samples_per_class = {21, 21, 21, 21, 21};
        presets.push_back(cfg);
    }
    {
        // Classes 1 and 2 share their volume and differ only in pattern.
        SynthConfig cfg;
        cfg.name = "volume_degenerate";
        cfg.n_classes = 5;
        cfg.profiles = {
            make_profile(1, "Residential", residential_shape(), 0.010, 0.05),
            make_profile(2, "Business", business_shape(), 0.010, 0.05),
            make_profile(3, "Commercial", commercial_shape(), 0.004, 0.05),
            make_profile(4, "OpenSpace", nightlife_shape(), 0.016, 0.05),
            make_profile(5, "Others", midday_shape(), 0.022, 0.05),
        };
        cfg.class_share = {0.2, 0.2, 0.2, 0.2, 0.2};
        cfg.zoning = Zoning::VoronoiZones;
        cfg.n_zone_seeds = 24;
        cfg.mixing_bandwidth_m = 0.0;
        cfg.tower_intensity_per_km2 = 10.0;
        cfg.fine_resolution_m = 50.0;
        cfg.grid = square_grid(60, 60);
        cfg.samples_per_class = {21, 21, 21, 21, 21};
        presets.push_back(cfg);
    }
    {
        // Both degeneracies at once: 1/2 separable only by volume, 3/4/5 only
        // by pattern. Needs both signals to classify everything.
        SynthConfig cfg;
        cfg.name = "degenerate_merged";
        cfg.n_classes = 5;
        cfg.profiles = {
            make_profile(1, "Residential", residential_shape(), 0.004, 0.05),
            make_profile(2, "Business", residential_shape(), 0.020, 0.05),
            make_profile(3, "Commercial", business_shape(), 0.010, 0.05),
            make_profile(4, "OpenSpace", nightlife_shape(), 0.010, 0.05),
            make_profile(5, "Others", midday_shape(), 0.010, 0.05),
        };
        cfg.class_share = {0.2, 0.2, 0.2, 0.2, 0.2};
        cfg.zoning = Zoning::VoronoiZones;
        cfg.n_zone_seeds = 15;
        cfg.mixing_bandwidth_m = 0.0;
        cfg.tower_intensity_per_km2 = 14.0;
        cfg.fine_resolution_m = 50.0;
        cfg.grid = square_grid(60, 60);
        cfg.samples_per_class = {21, 21, 21, 21, 21};
        presets.push_back(cfg);
    }
    {
        // Graded border mixing for the entropy-vs-error analysis.
        SynthConfig cfg;
        cfg.name = "entropy_sweep";
        cfg.n_classes = 5;
        cfg.profiles = distinct_profiles(0.08);
        cfg.class_share = {0.2, 0.2, 0.2, 0.2, 0.2};
        cfg.zoning = Zoning::VoronoiZones;
        cfg.n_zone_seeds = 40;
        cfg.mixing_bandwidth_m = 600.0;
        cfg.tower_intensity_per_km2 = 8.0;
        cfg.fine_resolution_m = 50.0;
        cfg.grid = square_grid(90, 90);
        cfg.samples_per_class = {10, 10, 10, 10, 10};
        presets.push_back(cfg);
    }
    return presets;
}

SynthConfig preset(const std::string& name) {
    for (auto& cfg : scenario_presets()) {
        if (cfg.name == name) return cfg;
    }
    throw InputError("unknown preset: " + name);
}

} // namespace landuse
