#pragma once

#include <string>
#include <utility>
#include <vector>

#include "landuse/config.hpp"
#include "landuse/matrix.hpp"
#include "landuse/raster.hpp"

namespace landuse {

// Per-cell features assembled from the grid-stage rasters. Cells whose mode
// series sums to zero are excluded (kept only in the zero-activity count).
struct FeatureSet {
    GridSpec spec;
    int T = 0;
    std::vector<std::pair<int, int>> cells; // active cells, row-major order
    Matrix pattern;                         // n_active x T, rows sum to 1
    std::vector<double> volume;             // Y per active cell, in [0, 2]
    std::size_t n_zero_activity = 0;
};

// Pipeline stages. Every stage reads its inputs from files (the config's
// input paths and the previous stages' artifacts in `out_dir`) and writes its
// own artifacts there, so running stages separately is byte-identical to
// running the whole pipeline.
void grid_stage(const PipelineConfig& cfg, const std::string& out_dir);
void train_stage(const PipelineConfig& cfg, const std::string& out_dir);
void cluster_stage(const PipelineConfig& cfg, const std::string& out_dir);
void classify_stage(const PipelineConfig& cfg, const std::string& out_dir);
void evaluate_stage(const PipelineConfig& cfg, const std::string& out_dir);
void run_pipeline(const PipelineConfig& cfg, const std::string& out_dir);

FeatureSet load_features(const PipelineConfig& cfg, const std::string& out_dir);

// Small key = value files (train.txt, cluster.txt, report.txt).
std::vector<std::pair<std::string, std::string>> read_kv(const std::string& path);
std::string kv_lookup(const std::vector<std::pair<std::string, std::string>>& kv,
                      const std::string& key);

} // namespace landuse
