#pragma once

#include <string>
#include <vector>

#include "landuse/matrix.hpp"

namespace landuse {

struct LandUseClass {
    int id = 0; // contiguous from 1
    std::string name;
};

// Labeled cell; pattern and volume are kept separate so the combined series
// can be rebuilt at any beta.
struct TrainingSample {
    int cell_row = 0;
    int cell_col = 0;
    int class_id = 0;
    std::vector<double> pattern;
    double volume = 0.0;
};

// Per-class mean combined series; row k-1 holds the center of class k.
struct ClassCenters {
    int n_classes = 0;
    Matrix centers;
};

ClassCenters class_centers(const std::vector<TrainingSample>& samples, double beta);

// argmin_k d(z, C_k) over Euclidean distance; ties go to the lowest class id.
int nearest_center_classify(const std::vector<double>& z, const ClassCenters& centers);

// f(beta): number of samples whose nearest-center class disagrees with their
// label, with centers rebuilt at this beta. With `leave_one_out` the sample
// is removed from its own class center first (default keeps the paper's
// resubstitution procedure).
int beta_objective(const std::vector<TrainingSample>& samples, double beta,
                   bool leave_one_out = false);

struct BetaSweepResult {
    std::vector<double> grid;
    std::vector<int> objective;
    double beta_star = 0.0;  // smallest grid point attaining the minimum
    double plateau_lo = 0.0; // maximal contiguous run of minimizers around beta_star
    double plateau_hi = 0.0;
    int f_star = 0;
};

BetaSweepResult beta_sweep(const std::vector<TrainingSample>& samples,
                           const std::vector<double>& grid, bool leave_one_out = false);

// The default evaluation grid: 0.05 steps over [0, 1], the coarser tail
// {1.25, 1.5, 2.5}, and the volume-only sentinel at infinity.
std::vector<double> default_beta_grid();

} // namespace landuse
