#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "landuse/fcm.hpp"
#include "landuse/features.hpp"
#include "landuse/raster.hpp"

namespace landuse {

// Flat `key = value` pipeline configuration; `#` starts a comment, lists are
// comma-separated, beta = infinity is spelled `inf`. Relative paths resolve
// against the config file's directory.
struct PipelineConfig {
    std::string towers_path;
    std::string calls_path;
    std::string truth_path;
    std::string samples_path;
    std::string classes_path;

    std::uint64_t seed = 1;

    // Grid; when rows/cols are 0 the grid derives from the tower bounding box
    // expanded by one cell size.
    GridSpec grid{0.0, 0.0, 200.0, 0, 0};

    DayMode day_mode = DayMode::FourDay;
    double idw_power = 2.0;
    int idw_k = 12;

    std::vector<double> beta_grid; // empty = default grid
    bool leave_one_out = false;
    bool volume_totals_full_week = false; // Eq. 3 totals over the whole week

    double fcm_m = 2.0;
    double fcm_tolerance = 1e-5;
    int fcm_max_iter = 300;
    int fcm_restarts = 10;

    int c_min = 0; // 0 = K
    int c_max = 0; // 0 = 2K

    std::vector<double> alphas = {0.5, 0.6, 0.7, 0.8, 0.9};
    int entropy_bins = 10;
    bool day_distance_city_aggregate = false;
};

PipelineConfig load_config(const std::string& path);

} // namespace landuse
