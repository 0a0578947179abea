#include "landuse/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "landuse/errors.hpp"
#include "landuse/evaluation.hpp"
#include "landuse/fcm.hpp"
#include "landuse/features.hpp"
#include "landuse/format.hpp"
#include "landuse/io.hpp"
#include "landuse/labeling.hpp"
#include "landuse/rng.hpp"
#include "landuse/spatial.hpp"
#include "landuse/synthcity.hpp"
#include "landuse/training.hpp"

namespace landuse {

namespace {

std::string apath(const std::string& out_dir, const std::string& name) {
    return out_dir + "/" + name;
}

std::string layer_name(int j) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "mode_hour_%03d.asc", j);
    return buf;
}

FcmConfig fcm_config_of(const PipelineConfig& cfg) {
    FcmConfig fc;
    fc.m = cfg.fcm_m;
    fc.tolerance = cfg.fcm_tolerance;
    fc.max_iter = cfg.fcm_max_iter;
    fc.restarts = cfg.fcm_restarts;
    fc.seed = cfg.seed;
    return fc;
}

GridSpec resolve_grid(const PipelineConfig& cfg, const std::vector<TowerSite>& towers) {
    if (cfg.grid.n_rows > 0 && cfg.grid.n_cols > 0) return cfg.grid;
    const Rect b = expanded_bounds(towers, cfg.grid.cell_size);
    GridSpec spec;
    spec.cell_size = cfg.grid.cell_size;
    spec.x_ll = b.xmin;
    spec.y_ll = b.ymin;
    spec.n_cols = std::max(1, static_cast<int>(std::ceil(b.width() / spec.cell_size)));
    spec.n_rows = std::max(1, static_cast<int>(std::ceil(b.height() / spec.cell_size)));
    return spec;
}

std::vector<TrainingSample> load_training_samples(const PipelineConfig& cfg,
                                                  const FeatureSet& features, int n_classes) {
    if (cfg.samples_path.empty()) throw InputError("config: samples path not set");
    const auto points = read_samples(cfg.samples_path);

    // Map active cells for lookup.
    Matrix cell_to_row(features.spec.n_rows, features.spec.n_cols, -1.0);
    for (std::size_t i = 0; i < features.cells.size(); ++i) {
        cell_to_row.at(features.cells[i].first, features.cells[i].second) =
            static_cast<double>(i);
    }

    std::vector<TrainingSample> samples;
    for (const auto& p : points) {
        if (p.class_id > n_classes) {
            throw InputError("samples: class id " + std::to_string(p.class_id) +
                             " exceeds the class table");
        }
        const auto rc = features.spec.cell_of(p.x, p.y);
        if (!rc) {
            throw InputError("samples: point outside the grid");
        }
        const double row = cell_to_row.at(rc->first, rc->second);
        if (row < 0.0) {
            throw InputError("samples: point falls on a zero-activity cell");
        }
        const std::size_t r = static_cast<std::size_t>(row);
        TrainingSample s;
        s.cell_row = rc->first;
        s.cell_col = rc->second;
        s.class_id = p.class_id;
        s.pattern.assign(features.pattern.row(r), features.pattern.row(r) + features.T);
        s.volume = features.volume[r];
        samples.push_back(std::move(s));
    }
    return samples;
}

double parse_beta(const std::string& v) {
    if (v == "inf") return std::numeric_limits<double>::infinity();
    return std::stod(v);
}

void write_confusion_csv(const std::string& path, const Confusion& cm,
                         const std::vector<LandUseClass>& classes) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << "true_class";
    for (const auto& c : classes) out << ',' << c.name;
    out << ",support\n";
    for (int t = 0; t < cm.n_classes; ++t) {
        out << classes[t].name;
        for (int p = 0; p < cm.n_classes; ++p) out << ',' << format_full(cm.rates.at(t, p));
        out << ',' << cm.support[t] << '\n';
    }
}

} // namespace

std::vector<std::pair<std::string, std::string>> read_kv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::vector<std::pair<std::string, std::string>> kv;
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        kv.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return kv;
}

std::string kv_lookup(const std::vector<std::pair<std::string, std::string>>& kv,
                      const std::string& key) {
    for (const auto& [k, v] : kv) {
        if (k == key) return v;
    }
    throw InputError("missing key '" + key + "'");
}

void grid_stage(const PipelineConfig& cfg, const std::string& out_dir) {
    if (cfg.towers_path.empty()) throw InputError("config: towers path not set");
    if (cfg.calls_path.empty()) throw InputError("config: calls path not set");
    const auto towers = read_towers(cfg.towers_path);
    const Matrix weekly = read_calls(cfg.calls_path, towers);

    const GridSpec spec = resolve_grid(cfg, towers);
    const VoronoiDiagram voronoi = build_voronoi(towers, spec.bounds());

    const int T = mode_length(cfg.day_mode);
    const std::size_t n_towers = towers.size();

    // Per-tower mode series of call counts, then densities.
    Matrix mode_density(n_towers, T);
    std::vector<double> total_density(n_towers);
    for (std::size_t t = 0; t < n_towers; ++t) {
        const std::vector<double> week(weekly.row(t), weekly.row(t) + kHoursPerWeek);
        const std::vector<double> mode = day_mode_aggregate(week, cfg.day_mode);
        const double area = voronoi.cells[t].area;
        for (int j = 0; j < T; ++j) mode_density.at(t, j) = mode[j] / area;
        double total = 0.0;
        if (cfg.volume_totals_full_week) {
            for (double v : week) total += v;
        } else {
            for (double v : mode) total += v;
        }
        total_density[t] = total / area;
    }

    std::vector<Point> positions;
    positions.reserve(n_towers);
    for (const auto& t : towers) positions.push_back(t.position);
    const IdwPlan plan = idw_plan(positions, spec, cfg.idw_power, cfg.idw_k);

    std::vector<double> layer(n_towers);
    for (int j = 0; j < T; ++j) {
        for (std::size_t t = 0; t < n_towers; ++t) layer[t] = mode_density.at(t, j);
        write_raster(apath(out_dir, layer_name(j)), idw_apply(plan, layer));
    }
    write_raster(apath(out_dir, "volume.asc"), idw_apply(plan, total_density));
    write_raster(apath(out_dir, "towers_per_cell.asc"), towers_per_cell(towers, spec));

    // Day-distance table from the full-week hourly layers.
    DayDistanceMatrix dm;
    if (cfg.day_distance_city_aggregate) {
        std::vector<std::vector<double>> weeklies;
        weeklies.reserve(n_towers);
        for (std::size_t t = 0; t < n_towers; ++t) {
            weeklies.emplace_back(weekly.row(t), weekly.row(t) + kHoursPerWeek);
        }
        dm = day_distance_matrix_aggregate(weeklies);
    } else {
        Matrix hourly(spec.n_cells(), kHoursPerWeek);
        for (int h = 0; h < kHoursPerWeek; ++h) {
            for (std::size_t t = 0; t < n_towers; ++t) {
                layer[t] = weekly.at(t, h) / voronoi.cells[t].area;
            }
            const RasterGrid grid = idw_apply(plan, layer);
            for (std::size_t cell = 0; cell < spec.n_cells(); ++cell) {
                hourly.at(cell, h) = grid.values[cell];
            }
        }
        std::vector<std::array<std::vector<double>, 7>> patterns;
        patterns.reserve(spec.n_cells());
        for (std::size_t cell = 0; cell < spec.n_cells(); ++cell) {
            patterns.push_back(daily_patterns(
                std::vector<double>(hourly.row(cell), hourly.row(cell) + kHoursPerWeek)));
        }
        dm = day_distance_matrix(patterns);
    }
    {
        static const char* day_names[7] = {"Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"};
        std::ofstream out(apath(out_dir, "day_distance.csv"));
        if (!out) throw InputError("cannot write day_distance.csv");
        out << "day";
        for (const char* d : day_names) out << ',' << d;
        out << '\n';
        for (int a = 0; a < 7; ++a) {
            out << day_names[a];
            for (int b = 0; b < 7; ++b) out << ',' << format_full(dm[a][b]);
            out << '\n';
        }
    }
}

FeatureSet load_features(const PipelineConfig& cfg, const std::string& out_dir) {
    FeatureSet fs;
    fs.T = mode_length(cfg.day_mode);

    std::vector<RasterGrid> layers;
    layers.reserve(fs.T);
    for (int j = 0; j < fs.T; ++j) {
        layers.push_back(read_raster(apath(out_dir, layer_name(j))));
        if (j > 0 && !(layers[j].spec == layers[0].spec)) {
            throw InputError("mode-hour layers disagree on grid geometry");
        }
    }
    const RasterGrid volume = read_raster(apath(out_dir, "volume.asc"));
    fs.spec = layers[0].spec;
    if (!(volume.spec == fs.spec)) throw InputError("volume.asc grid mismatch");

    const std::size_t n_cells = fs.spec.n_cells();
    std::vector<double> totals;
    std::vector<double> b(fs.T);
    std::vector<std::vector<double>> patterns;
    for (std::size_t cell = 0; cell < n_cells; ++cell) {
        double sum = 0.0;
        for (int j = 0; j < fs.T; ++j) sum += b[j] = layers[j].values[cell];
        if (sum <= 0.0) {
            ++fs.n_zero_activity;
            continue;
        }
        const int row = static_cast<int>(cell) / fs.spec.n_cols;
        const int col = static_cast<int>(cell) % fs.spec.n_cols;
        fs.cells.push_back({row, col});
        patterns.push_back(pattern_normalize(b));
        totals.push_back(volume.values[cell]);
    }
    if (fs.cells.empty()) throw NoEvaluableCells("load_features: every cell has zero activity");

    fs.pattern = Matrix(fs.cells.size(), fs.T);
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        std::copy(patterns[i].begin(), patterns[i].end(), fs.pattern.row(i));
    }
    fs.volume = volume_transform(totals);
    return fs;
}

namespace {

Matrix combined_matrix(const FeatureSet& fs, double beta) {
    Matrix z(fs.cells.size(), fs.T + 1);
    for (std::size_t i = 0; i < fs.cells.size(); ++i) {
        const std::vector<double> pattern(fs.pattern.row(i), fs.pattern.row(i) + fs.T);
        const std::vector<double> zi = combine(pattern, fs.volume[i], beta);
        std::copy(zi.begin(), zi.end(), z.row(i));
    }
    return z;
}

} // namespace

void train_stage(const PipelineConfig& cfg, const std::string& out_dir) {
    const FeatureSet features = load_features(cfg, out_dir);
    if (cfg.classes_path.empty()) throw InputError("config: classes path not set");
    const auto classes = read_classes(cfg.classes_path);
    const auto samples = load_training_samples(cfg, features, static_cast<int>(classes.size()));

    const std::vector<double> grid =
        cfg.beta_grid.empty() ? default_beta_grid() : cfg.beta_grid;
    const BetaSweepResult sweep = beta_sweep(samples, grid, cfg.leave_one_out);

    {
        std::ofstream out(apath(out_dir, "beta_curve.csv"));
        if (!out) throw InputError("cannot write beta_curve.csv");
        out << "beta,f\n";
        for (std::size_t i = 0; i < sweep.grid.size(); ++i) {
            out << format_full(sweep.grid[i]) << ',' << sweep.objective[i] << '\n';
        }
    }
    {
        std::ofstream out(apath(out_dir, "train.txt"));
        if (!out) throw InputError("cannot write train.txt");
        out << "beta_star = " << format_full(sweep.beta_star) << "\n";
        out << "f_star = " << sweep.f_star << "\n";
        out << "plateau_lo = " << format_full(sweep.plateau_lo) << "\n";
        out << "plateau_hi = " << format_full(sweep.plateau_hi) << "\n";
        out << "n_samples = " << samples.size() << "\n";
        out << "leave_one_out = " << (cfg.leave_one_out ? 1 : 0) << "\n";
    }
}

void cluster_stage(const PipelineConfig& cfg, const std::string& out_dir) {
    const FeatureSet features = load_features(cfg, out_dir);
    const auto classes = read_classes(cfg.classes_path);
    const int K = static_cast<int>(classes.size());
    const double beta_star = parse_beta(kv_lookup(read_kv(apath(out_dir, "train.txt")),
                                                  "beta_star"));

    const Matrix z = combined_matrix(features, beta_star);
    const int c_min = cfg.c_min > 0 ? cfg.c_min : K;
    const int c_max = cfg.c_max > 0 ? cfg.c_max : 2 * K;
    const ClusterCountSelection sel =
        select_cluster_count(z, c_min, c_max, fcm_config_of(cfg));
    const ClusterModel& model = sel.best_model;

    {
        std::ofstream out(apath(out_dir, "membership.csv"));
        if (!out) throw InputError("cannot write membership.csv");
        out << "cell_row,cell_col";
        for (int k = 1; k <= sel.best_c; ++k) out << ",u_" << k;
        out << '\n';
        for (std::size_t i = 0; i < features.cells.size(); ++i) {
            out << features.cells[i].first << ',' << features.cells[i].second;
            for (std::size_t k = 0; k < model.membership.cols; ++k) {
                out << ',' << format_full(model.membership.at(i, k));
            }
            out << '\n';
        }
    }
    {
        std::ofstream out(apath(out_dir, "centers.csv"));
        if (!out) throw InputError("cannot write centers.csv");
        out << "cluster";
        for (int j = 1; j <= features.T + 1; ++j) out << ",v_" << j;
        out << '\n';
        for (std::size_t k = 0; k < model.centers.rows; ++k) {
            out << k;
            for (std::size_t j = 0; j < model.centers.cols; ++j) {
                out << ',' << format_full(model.centers.at(k, j));
            }
            out << '\n';
        }
    }
    {
        std::ofstream out(apath(out_dir, "validity.csv"));
        if (!out) throw InputError("cannot write validity.csv");
        out << "c,score\n";
        for (const auto& s : sel.scores) {
            out << s.c << ',' << format_full(s.score) << '\n';
        }
    }
    {
        std::ofstream out(apath(out_dir, "cluster.txt"));
        if (!out) throw InputError("cannot write cluster.txt");
        out << "c_star = " << sel.best_c << "\n";
        out << "objective = " << format_full(model.objective) << "\n";
        out << "iterations = " << model.objective_trace.size() << "\n";
        out << "degenerate = " << (model.degenerate ? 1 : 0) << "\n";
    }
}

namespace {

ClusterModel load_cluster_model(const PipelineConfig& cfg, const FeatureSet& features,
                                const std::string& out_dir) {
    ClusterModel model;
    model.config = fcm_config_of(cfg);

    std::ifstream in(apath(out_dir, "membership.csv"));
    if (!in) throw InputError("cannot open membership.csv (run the cluster stage first)");
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<double>> rows;
    std::size_t c = 0;
    std::size_t i = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        std::vector<double> values;
        while (std::getline(ss, field, ',')) values.push_back(std::stod(field));
        if (values.size() < 3) throw InputError("membership.csv: malformed row");
        if (i >= features.cells.size() ||
            static_cast<int>(values[0]) != features.cells[i].first ||
            static_cast<int>(values[1]) != features.cells[i].second) {
            throw InputError("membership.csv does not match the grid artifacts");
        }
        rows.emplace_back(values.begin() + 2, values.end());
        c = rows.back().size();
        ++i;
    }
    if (rows.size() != features.cells.size()) {
        throw InputError("membership.csv row count does not match active cells");
    }
    model.membership = Matrix(rows.size(), c);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::copy(rows[r].begin(), rows[r].end(), model.membership.row(r));
    }
    model.config.c = static_cast<int>(c);

    std::ifstream cin(apath(out_dir, "centers.csv"));
    if (!cin) throw InputError("cannot open centers.csv (run the cluster stage first)");
    std::getline(cin, line);
    std::vector<std::vector<double>> centers;
    while (std::getline(cin, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        std::vector<double> values;
        while (std::getline(ss, field, ',')) values.push_back(std::stod(field));
        centers.emplace_back(values.begin() + 1, values.end());
    }
    if (centers.size() != c) throw InputError("centers.csv does not match membership.csv");
    model.centers = Matrix(c, centers[0].size());
    for (std::size_t k = 0; k < c; ++k) {
        std::copy(centers[k].begin(), centers[k].end(), model.centers.row(k));
    }
    return model;
}

void write_d1_d2_csv(const std::string& path, const DistanceDecomposition& dd,
                     const std::vector<LandUseClass>& classes) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << "class_id,name,n_cells,mean_d1,mean_d2,ratio\n";
    std::size_t total = 0;
    for (const auto& row : dd.per_class) {
        out << row.class_id << ',' << classes[row.class_id - 1].name << ',' << row.n_cells
            << ',' << format_full(row.mean_d1) << ',' << format_full(row.mean_d2) << ',';
        if (row.ratio) out << format_full(*row.ratio);
        out << '\n';
        total += row.n_cells;
    }
    out << "0,Average," << total << ",,,";
    if (dd.average_ratio) out << format_full(*dd.average_ratio);
    out << '\n';
}

} // namespace

void classify_stage(const PipelineConfig& cfg, const std::string& out_dir) {
    const FeatureSet features = load_features(cfg, out_dir);
    const auto classes = read_classes(cfg.classes_path);
    const int K = static_cast<int>(classes.size());
    const double beta_star = parse_beta(kv_lookup(read_kv(apath(out_dir, "train.txt")),
                                                  "beta_star"));
    const auto samples = load_training_samples(cfg, features, K);
    const ClassCenters centers = class_centers(samples, beta_star);

    const Matrix z = combined_matrix(features, beta_star);
    const ClusterModel model = load_cluster_model(cfg, features, out_dir);
    const Classification result = classify_cells(model, centers, z, fcm_config_of(cfg));

    std::vector<double> labels(result.label.begin(), result.label.end());
    write_raster(apath(out_dir, "classified.asc"),
                 scatter_to_raster(features.spec, features.cells, labels));
    write_raster(apath(out_dir, "max_membership.asc"),
                 scatter_to_raster(features.spec, features.cells, result.max_membership));

    {
        std::ofstream out(apath(out_dir, "assignment.csv"));
        if (!out) throw InputError("cannot write assignment.csv");
        out << "cluster,class_id\n";
        for (std::size_t q = 0; q < result.assignment.class_of_cluster.size(); ++q) {
            out << q << ',' << result.assignment.class_of_cluster[q] << '\n';
        }
    }

    const DistanceDecomposition dd =
        distance_decomposition(z, result.model, result.assignment, K);
    write_d1_d2_csv(apath(out_dir, "d1_d2.csv"), dd, classes);

    {
        std::ofstream out(apath(out_dir, "classify.txt"));
        if (!out) throw InputError("cannot write classify.txt");
        out << "reclustered = " << (result.assignment.reclustered ? 1 : 0) << "\n";
        out << "distinct_classes = " << result.assignment.distinct_classes << "\n";
        out << "covers_all_classes = " << (result.assignment.covers_all_classes ? 1 : 0)
            << "\n";
        out << "n_clusters = " << result.assignment.class_of_cluster.size() << "\n";
    }
}

namespace {

// Detection rate of a from-scratch FCM classification over an alternative
// feature matrix (the pattern-only and volume-only baselines).
double baseline_detection(const Matrix& data, const ClassCenters& centers,
                          const FeatureSet& features, const RasterGrid& truth_majority,
                          const FcmConfig& base_config, int c_min, int c_max,
                          std::uint64_t stream) {
    FcmConfig fc = base_config;
    fc.seed = mix_seed(base_config.seed, stream);
    const ClusterCountSelection sel = select_cluster_count(data, c_min, c_max, fc);
    const Classification result = classify_cells(sel.best_model, centers, data, fc);
    std::vector<double> labels(result.label.begin(), result.label.end());
    const RasterGrid pred = scatter_to_raster(features.spec, features.cells, labels);
    return detection_rate(pred, truth_majority);
}

} // namespace

void evaluate_stage(const PipelineConfig& cfg, const std::string& out_dir) {
    const FeatureSet features = load_features(cfg, out_dir);
    const auto classes = read_classes(cfg.classes_path);
    const int K = static_cast<int>(classes.size());
    if (cfg.truth_path.empty()) throw InputError("config: truth path not set");
    const RasterGrid truth = read_raster(cfg.truth_path);
    const RasterGrid pred = read_raster(apath(out_dir, "classified.asc"));
    const RasterGrid max_membership = read_raster(apath(out_dir, "max_membership.asc"));
    const RasterGrid tower_counts = read_raster(apath(out_dir, "towers_per_cell.asc"));

    const MajorityTruth mt = majority_truth(truth, features.spec, K);
    const double rate = detection_rate(pred, mt.majority);
    const Confusion cm = confusion_matrix(pred, mt.majority, K);
    write_confusion_csv(apath(out_dir, "confusion.csv"), cm, classes);

    const auto samples = load_training_samples(cfg, features, K);
    const ClassCenters centers0 = class_centers(samples, 0.0);
    Matrix pattern_centers(K, features.T);
    for (int k = 0; k < K; ++k) {
        std::copy(centers0.centers.row(k), centers0.centers.row(k) + features.T,
                  pattern_centers.row(k));
    }
    const Confusion post =
        posterior_confusion(features.pattern, features.cells, pattern_centers, mt.majority);
    write_confusion_csv(apath(out_dir, "posterior_confusion.csv"), post, classes);

    const EntropyAnalysis ea = entropy_analysis(mt, pred, cfg.entropy_bins);
    write_raster(apath(out_dir, "entropy.asc"), ea.entropy);
    {
        std::ofstream out(apath(out_dir, "entropy_bins.csv"));
        if (!out) throw InputError("cannot write entropy_bins.csv");
        out << "bin,lo,hi,n_cells,error_rate\n";
        for (std::size_t b = 0; b < ea.bins.size(); ++b) {
            out << b << ',' << format_full(ea.bins[b].lo) << ',' << format_full(ea.bins[b].hi)
                << ',' << ea.bins[b].n_cells << ',';
            if (ea.bins[b].error_rate) out << format_full(*ea.bins[b].error_rate);
            out << '\n';
        }
    }

    {
        const auto rows = density_analysis(pred, mt.majority, tower_counts);
        std::ofstream out(apath(out_dir, "density.csv"));
        if (!out) throw InputError("cannot write density.csv");
        out << "towers,detection_rate,n_cells\n";
        for (const auto& r : rows) {
            out << r.tower_count << ',' << format_full(r.rate) << ',' << r.n_cells << '\n';
        }
    }

    {
        const auto rows = alpha_cut_analysis(max_membership, pred, mt.majority, cfg.alphas);
        std::ofstream out(apath(out_dir, "alpha_cut.csv"));
        if (!out) throw InputError("cannot write alpha_cut.csv");
        out << "alpha,detection_rate,retained_fraction,n_cells\n";
        for (const auto& r : rows) {
            out << format_full(r.alpha) << ',';
            if (r.rate) out << format_full(*r.rate);
            out << ',' << format_full(r.retained_fraction) << ',' << r.n_cells << '\n';
        }
    }

    // Single-information baselines: pattern only (beta = 0) and volume only
    // (beta = inf), clustered and labeled the same way as the main run.
    const int c_min = cfg.c_min > 0 ? cfg.c_min : K;
    const int c_max = cfg.c_max > 0 ? cfg.c_max : 2 * K;
    const FcmConfig fc = fcm_config_of(cfg);

    ClassCenters pattern_cc;
    pattern_cc.n_classes = K;
    pattern_cc.centers = pattern_centers;
    const double pattern_rate = baseline_detection(features.pattern, pattern_cc, features,
                                                   mt.majority, fc, c_min, c_max, 0xB0);

    const ClassCenters centers_inf =
        class_centers(samples, std::numeric_limits<double>::infinity());
    ClassCenters volume_cc;
    volume_cc.n_classes = K;
    volume_cc.centers = Matrix(K, 1);
    for (int k = 0; k < K; ++k) {
        volume_cc.centers.at(k, 0) = centers_inf.centers.at(k, features.T);
    }
    Matrix volume_data(features.volume.size(), 1);
    for (std::size_t i = 0; i < features.volume.size(); ++i) {
        volume_data.at(i, 0) = features.volume[i];
    }
    const double volume_rate = baseline_detection(volume_data, volume_cc, features,
                                                  mt.majority, fc, c_min, c_max, 0xB1);

    const auto train_kv = read_kv(apath(out_dir, "train.txt"));
    const auto cluster_kv = read_kv(apath(out_dir, "cluster.txt"));
    const auto classify_kv = read_kv(apath(out_dir, "classify.txt"));
    std::string average_ratio = "undefined";
    {
        std::ifstream in(apath(out_dir, "d1_d2.csv"));
        if (!in) throw InputError("cannot open d1_d2.csv (run the classify stage first)");
        std::string line;
        while (std::getline(in, line)) {
            if (line.rfind("0,Average,", 0) == 0) {
                const auto pos = line.find_last_of(',');
                if (pos + 1 < line.size()) average_ratio = line.substr(pos + 1);
            }
        }
    }

    std::size_t n_evaluated = 0;
    for (std::size_t cell = 0; cell < pred.spec.n_cells(); ++cell) {
        if (pred.values[cell] != pred.nodata && mt.majority.values[cell] != mt.majority.nodata) {
            ++n_evaluated;
        }
    }

    std::ofstream out(apath(out_dir, "report.txt"));
    if (!out) throw InputError("cannot write report.txt");
    out << "detection_rate = " << format_full(rate) << "\n";
    out << "beta_star = " << kv_lookup(train_kv, "beta_star") << "\n";
    out << "c_star = " << kv_lookup(cluster_kv, "c_star") << "\n";
    out << "average_d1_d2_ratio = " << average_ratio << "\n";
    out << "pattern_only_detection_rate = " << format_full(pattern_rate) << "\n";
    out << "volume_only_detection_rate = " << format_full(volume_rate) << "\n";
    out << "n_cells = " << features.spec.n_cells() << "\n";
    out << "n_active_cells = " << features.cells.size() << "\n";
    out << "n_zero_activity_cells = " << features.n_zero_activity << "\n";
    out << "n_evaluated_cells = " << n_evaluated << "\n";
    out << "f_star = " << kv_lookup(train_kv, "f_star") << "\n";
    out << "reclustered = " << kv_lookup(classify_kv, "reclustered") << "\n";
}

void run_pipeline(const PipelineConfig& cfg, const std::string& out_dir) {
    grid_stage(cfg, out_dir);
    train_stage(cfg, out_dir);
    cluster_stage(cfg, out_dir);
    classify_stage(cfg, out_dir);
    evaluate_stage(cfg, out_dir);
}

} // namespace landuse
