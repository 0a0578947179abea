#include "landuse/training.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "landuse/errors.hpp"
#include "landuse/features.hpp"

namespace landuse {

namespace {

int max_class_id(const std::vector<TrainingSample>& samples) {
    if (samples.empty()) throw EmptySamples("no training samples");
    int k = 0;
    for (const auto& s : samples) {
        if (s.class_id < 1) throw Error("training sample with class id < 1");
        k = std::max(k, s.class_id);
    }
    return k;
}

} // namespace

ClassCenters class_centers(const std::vector<TrainingSample>& samples, double beta) {
    const int K = max_class_id(samples);
    const std::size_t dim = samples.front().pattern.size() + 1;

    ClassCenters cc;
    cc.n_classes = K;
    cc.centers = Matrix(K, dim);
    std::vector<std::size_t> count(K, 0);

    for (const auto& s : samples) {
        if (s.pattern.size() + 1 != dim) {
            throw DimensionMismatch("training samples disagree on pattern length");
        }
        const std::vector<double> z = combine(s.pattern, s.volume, beta);
        double* row = cc.centers.row(s.class_id - 1);
        for (std::size_t j = 0; j < dim; ++j) row[j] += z[j];
        ++count[s.class_id - 1];
    }
    for (int k = 0; k < K; ++k) {
        if (count[k] == 0) {
            throw EmptyClass("class " + std::to_string(k + 1) + " has no samples");
        }
        double* row = cc.centers.row(k);
        for (std::size_t j = 0; j < dim; ++j) row[j] /= static_cast<double>(count[k]);
    }
    return cc;
}

int nearest_center_classify(const std::vector<double>& z, const ClassCenters& centers) {
    if (z.size() != centers.centers.cols) {
        throw DimensionMismatch("nearest_center_classify: series/center dimension mismatch");
    }
    int best = 1;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (int k = 0; k < centers.n_classes; ++k) {
        const double* c = centers.centers.row(k);
        double d2 = 0.0;
        for (std::size_t j = 0; j < z.size(); ++j) {
            const double d = z[j] - c[j];
            d2 += d * d;
        }
        if (d2 < best_d2) {
            best_d2 = d2;
            best = k + 1;
        }
    }
    return best;
}

int beta_objective(const std::vector<TrainingSample>& samples, double beta,
                   bool leave_one_out) {
    ClassCenters cc = class_centers(samples, beta);
    std::vector<std::size_t> count(cc.n_classes, 0);
    if (leave_one_out) {
        for (const auto& s : samples) ++count[s.class_id - 1];
    }

    int f = 0;
    for (const auto& s : samples) {
        const std::vector<double> z = combine(s.pattern, s.volume, beta);
        int predicted;
        if (leave_one_out && count[s.class_id - 1] > 1) {
            // Back the sample out of its own class mean.
            ClassCenters loo = cc;
            const double n = static_cast<double>(count[s.class_id - 1]);
            double* row = loo.centers.row(s.class_id - 1);
            for (std::size_t j = 0; j < z.size(); ++j) {
                row[j] = (row[j] * n - z[j]) / (n - 1.0);
            }
            predicted = nearest_center_classify(z, loo);
        } else {
            predicted = nearest_center_classify(z, cc);
        }
        if (predicted != s.class_id) ++f;
    }
    return f;
}

BetaSweepResult beta_sweep(const std::vector<TrainingSample>& samples,
                           const std::vector<double>& grid, bool leave_one_out) {
    if (grid.empty()) throw Error("beta_sweep: empty grid");
    if (!std::is_sorted(grid.begin(), grid.end())) {
        throw Error("beta_sweep: grid must be sorted ascending");
    }

    BetaSweepResult result;
    result.grid = grid;
    result.objective.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        result.objective[i] = beta_objective(samples, grid[i], leave_one_out);
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (result.objective[i] < result.objective[best]) best = i;
    }
    result.f_star = result.objective[best];
    result.beta_star = grid[best];

    std::size_t lo = best, hi = best;
    while (lo > 0 && result.objective[lo - 1] == result.f_star) --lo;
    while (hi + 1 < grid.size() && result.objective[hi + 1] == result.f_star) ++hi;
    result.plateau_lo = grid[lo];
    result.plateau_hi = grid[hi];
    return result;
}

std::vector<double> default_beta_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i) grid.push_back(i * 5 / 100.0);
    grid.push_back(1.25);
    grid.push_back(1.50);
    grid.push_back(2.50);
    grid.push_back(std::numeric_limits<double>::infinity());
    return grid;
}

} // namespace landuse
