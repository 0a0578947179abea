#include "landuse/evaluation.hpp"

#include <algorithm>
#include <cmath>

#include "landuse/errors.hpp"
#include "landuse/training.hpp"

namespace landuse {

namespace {

bool evaluable(const RasterGrid& pred, const RasterGrid& truth, std::size_t cell) {
    return pred.values[cell] != pred.nodata && truth.values[cell] != truth.nodata;
}

int class_at(const RasterGrid& grid, std::size_t cell) {
    return static_cast<int>(std::lround(grid.values[cell]));
}

} // namespace

MajorityTruth majority_truth(const RasterGrid& fine_truth, const GridSpec& coarse,
                             int n_classes) {
    MajorityTruth out;
    out.n_classes = n_classes;
    out.majority = RasterGrid(coarse, -9999.0);
    out.occupancy = Matrix(coarse.n_cells(), n_classes);
    Matrix counts(coarse.n_cells(), n_classes);

    const GridSpec& fs = fine_truth.spec;
    bool any = false;
    for (int r = 0; r < fs.n_rows; ++r) {
        for (int c = 0; c < fs.n_cols; ++c) {
            if (fine_truth.is_nodata(r, c)) continue;
            const int cls = static_cast<int>(std::lround(fine_truth.at(r, c)));
            if (cls < 1 || cls > n_classes) {
                throw Error("majority_truth: class id out of range in truth raster");
            }
            const Point center = fs.cell_center(r, c);
            const auto rc = coarse.cell_of(center.x, center.y);
            if (!rc) continue;
            const std::size_t cell =
                static_cast<std::size_t>(rc->first) * coarse.n_cols + rc->second;
            counts.at(cell, cls - 1) += 1.0;
            any = true;
        }
    }
    if (!any) throw NoOverlap("majority_truth: no fine cell overlaps the grid");

    for (std::size_t cell = 0; cell < coarse.n_cells(); ++cell) {
        double total = 0.0;
        for (int k = 0; k < n_classes; ++k) total += counts.at(cell, k);
        if (total == 0.0) continue;
        int best = 0;
        for (int k = 0; k < n_classes; ++k) {
            out.occupancy.at(cell, k) = counts.at(cell, k) / total;
            if (counts.at(cell, k) > counts.at(cell, best)) best = k;
        }
        out.majority.values[cell] = best + 1;
    }
    return out;
}

double detection_rate(const RasterGrid& pred, const RasterGrid& truth_majority) {
    if (pred.spec.n_cells() != truth_majority.spec.n_cells()) {
        throw DimensionMismatch("detection_rate: raster size mismatch");
    }
    std::size_t n = 0, hits = 0;
    for (std::size_t cell = 0; cell < pred.spec.n_cells(); ++cell) {
        if (!evaluable(pred, truth_majority, cell)) continue;
        ++n;
        if (class_at(pred, cell) == class_at(truth_majority, cell)) ++hits;
    }
    if (n == 0) throw NoEvaluableCells("detection_rate: no cell has both prediction and truth");
    return static_cast<double>(hits) / static_cast<double>(n);
}

Confusion confusion_matrix(const RasterGrid& pred, const RasterGrid& truth_majority,
                           int n_classes) {
    if (pred.spec.n_cells() != truth_majority.spec.n_cells()) {
        throw DimensionMismatch("confusion_matrix: raster size mismatch");
    }
    Confusion out;
    out.n_classes = n_classes;
    out.rates = Matrix(n_classes, n_classes);
    out.support.assign(n_classes, 0);

    for (std::size_t cell = 0; cell < pred.spec.n_cells(); ++cell) {
        if (!evaluable(pred, truth_majority, cell)) continue;
        const int t = class_at(truth_majority, cell);
        const int p = class_at(pred, cell);
        if (t < 1 || t > n_classes || p < 1 || p > n_classes) {
            throw Error("confusion_matrix: class id out of range");
        }
        out.rates.at(t - 1, p - 1) += 1.0;
        ++out.support[t - 1];
    }
    for (int t = 0; t < n_classes; ++t) {
        if (out.support[t] == 0) continue;
        for (int p = 0; p < n_classes; ++p) {
            out.rates.at(t, p) /= static_cast<double>(out.support[t]);
        }
    }
    return out;
}

Confusion posterior_confusion(const Matrix& patterns,
                              const std::vector<std::pair<int, int>>& cells,
                              const Matrix& pattern_centers,
                              const RasterGrid& truth_majority) {
    if (patterns.rows != cells.size()) {
        throw DimensionMismatch("posterior_confusion: patterns/cells size mismatch");
    }
    ClassCenters centers;
    centers.n_classes = static_cast<int>(pattern_centers.rows);
    centers.centers = pattern_centers;

    RasterGrid pred(truth_majority.spec, -9999.0);
    for (std::size_t i = 0; i < patterns.rows; ++i) {
        const std::vector<double> x(patterns.row(i), patterns.row(i) + patterns.cols);
        pred.at(cells[i].first, cells[i].second) = nearest_center_classify(x, centers);
    }
    return confusion_matrix(pred, truth_majority, centers.n_classes);
}

EntropyAnalysis entropy_analysis(const MajorityTruth& truth, const RasterGrid& pred,
                                 int n_bins) {
    if (n_bins < 1) throw Error("entropy_analysis: n_bins must be >= 1");
    EntropyAnalysis out;
    out.entropy = RasterGrid(truth.majority.spec, -9999.0);
    const double max_entropy = std::log(static_cast<double>(truth.n_classes));

    std::vector<std::size_t> bin_n(n_bins, 0), bin_err(n_bins, 0);
    for (std::size_t cell = 0; cell < truth.majority.spec.n_cells(); ++cell) {
        if (truth.majority.values[cell] == truth.majority.nodata) continue;
        double en = 0.0;
        for (int k = 0; k < truth.n_classes; ++k) {
            const double p = truth.occupancy.at(cell, k);
            if (p > 0.0) en -= p * std::log(p);
        }
        out.entropy.values[cell] = en;

        if (pred.values[cell] == pred.nodata) continue;
        int bin = max_entropy > 0.0
                      ? static_cast<int>(en / max_entropy * n_bins)
                      : 0;
        bin = std::clamp(bin, 0, n_bins - 1);
        ++bin_n[bin];
        if (class_at(pred, cell) != class_at(truth.majority, cell)) ++bin_err[bin];
    }

    for (int b = 0; b < n_bins; ++b) {
        EntropyBin bin;
        bin.lo = max_entropy * b / n_bins;
        bin.hi = max_entropy * (b + 1) / n_bins;
        bin.n_cells = bin_n[b];
        if (bin_n[b] > 0) {
            bin.error_rate = static_cast<double>(bin_err[b]) / static_cast<double>(bin_n[b]);
        }
        out.bins.push_back(bin);
    }
    return out;
}

std::vector<DensityRow> density_analysis(const RasterGrid& pred,
                                         const RasterGrid& truth_majority,
                                         const RasterGrid& tower_counts) {
    std::vector<std::size_t> n_by_count, hit_by_count;
    for (std::size_t cell = 0; cell < pred.spec.n_cells(); ++cell) {
        if (!evaluable(pred, truth_majority, cell)) continue;
        const int towers = static_cast<int>(std::lround(tower_counts.values[cell]));
        if (towers >= static_cast<int>(n_by_count.size())) {
            n_by_count.resize(towers + 1, 0);
            hit_by_count.resize(towers + 1, 0);
        }
        ++n_by_count[towers];
        if (class_at(pred, cell) == class_at(truth_majority, cell)) ++hit_by_count[towers];
    }
    std::vector<DensityRow> rows;
    for (std::size_t t = 0; t < n_by_count.size(); ++t) {
        if (n_by_count[t] == 0) continue;
        rows.push_back({static_cast<int>(t), n_by_count[t],
                        static_cast<double>(hit_by_count[t]) /
                            static_cast<double>(n_by_count[t])});
    }
    return rows;
}

std::vector<AlphaCutRow> alpha_cut_analysis(const RasterGrid& max_membership,
                                            const RasterGrid& pred,
                                            const RasterGrid& truth_majority,
                                            const std::vector<double>& alphas) {
    std::size_t evaluated = 0;
    for (std::size_t cell = 0; cell < pred.spec.n_cells(); ++cell) {
        if (evaluable(pred, truth_majority, cell)) ++evaluated;
    }
    std::vector<AlphaCutRow> rows;
    for (double alpha : alphas) {
        AlphaCutRow row;
        row.alpha = alpha;
        std::size_t n = 0, hits = 0;
        for (std::size_t cell = 0; cell < pred.spec.n_cells(); ++cell) {
            if (!evaluable(pred, truth_majority, cell)) continue;
            if (max_membership.values[cell] == max_membership.nodata ||
                max_membership.values[cell] < alpha) {
                continue;
            }
            ++n;
            if (class_at(pred, cell) == class_at(truth_majority, cell)) ++hits;
        }
        row.n_cells = n;
        row.retained_fraction =
            evaluated ? static_cast<double>(n) / static_cast<double>(evaluated) : 0.0;
        if (n > 0) row.rate = static_cast<double>(hits) / static_cast<double>(n);
        rows.push_back(row);
    }
    return rows;
}

} // namespace landuse
