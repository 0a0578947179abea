#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "landuse/matrix.hpp"
#include "landuse/raster.hpp"

namespace landuse {

// Ground truth resampled onto the analysis grid: per coarse cell, the class
// area shares among overlapping fine cells and their majority class.
struct MajorityTruth {
    RasterGrid majority;  // class id, nodata where no fine cell overlaps
    Matrix occupancy;     // n_cells x K shares, rows sum to 1 where defined
    int n_classes = 0;
};

MajorityTruth majority_truth(const RasterGrid& fine_truth, const GridSpec& coarse,
                             int n_classes);

// Fraction of cells, evaluable in both rasters, where the predicted class
// matches the truth majority.
double detection_rate(const RasterGrid& pred, const RasterGrid& truth_majority);

struct Confusion {
    Matrix rates;                     // K x K, row-normalized where support > 0
    std::vector<std::size_t> support; // true-class cell counts
    int n_classes = 0;
};

Confusion confusion_matrix(const RasterGrid& pred, const RasterGrid& truth_majority,
                           int n_classes);

// Nearest-center classification on the pattern part alone, then the
// confusion of that labeling against the truth majority.
Confusion posterior_confusion(const Matrix& patterns,
                              const std::vector<std::pair<int, int>>& cells,
                              const Matrix& pattern_centers,
                              const RasterGrid& truth_majority);

struct EntropyBin {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t n_cells = 0;
    std::optional<double> error_rate;
};

struct EntropyAnalysis {
    RasterGrid entropy; // En_j per cell, nodata where truth undefined
    std::vector<EntropyBin> bins;
};

// En_j = -sum_i p_ij ln p_ij with 0 ln 0 = 0, binned into equal-width bins
// over [0, ln K]; per-bin error rate over cells evaluable in both rasters.
EntropyAnalysis entropy_analysis(const MajorityTruth& truth, const RasterGrid& pred,
                                 int n_bins = 10);

struct DensityRow {
    int tower_count = 0;
    std::size_t n_cells = 0;
    double rate = 0.0;
};

// Detection rate grouped by the exact tower count of each cell.
std::vector<DensityRow> density_analysis(const RasterGrid& pred,
                                         const RasterGrid& truth_majority,
                                         const RasterGrid& tower_counts);

struct AlphaCutRow {
    double alpha = 0.0;
    std::optional<double> rate; // absent when the cut retains no cells
    double retained_fraction = 0.0;
    std::size_t n_cells = 0;
};

// Detection rate restricted to cells whose maximum membership reaches alpha,
// plus the retained share of the evaluated area.
std::vector<AlphaCutRow> alpha_cut_analysis(const RasterGrid& max_membership,
                                            const RasterGrid& pred,
                                            const RasterGrid& truth_majority,
                                            const std::vector<double>& alphas);

} // namespace landuse
