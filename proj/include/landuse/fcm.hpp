#pragma once

#include <cstdint>
#include <vector>

#include "landuse/matrix.hpp"

namespace landuse {

struct FcmConfig {
    int c = 2;               // cluster count
    double m = 2.0;          // fuzzifier, > 1
    double tolerance = 1e-5; // max center displacement between iterations
    int max_iter = 300;
    int restarts = 10;
    std::uint64_t seed = 0;
};

struct ClusterModel {
    Matrix centers;    // c x dim; the centers the final memberships were computed from
    Matrix membership; // n x c, rows sum to 1
    double objective = 0.0;
    std::vector<double> objective_trace; // J per iteration, non-increasing
    FcmConfig config;
    bool degenerate = false; // all points identical with c > 1
};

// Fuzzy c-means: alternating membership/center updates from a random
// Dirichlet(1) membership init, best of `restarts` runs by final objective
// (ties to the lowest restart index). Deterministic given the seed.
ClusterModel fcm_fit(const Matrix& data, const FcmConfig& config);

// Ray-Turi style index: mean squared distance to the nearest center over the
// minimum squared distance between center pairs. Lower is better.
double validity_index(const ClusterModel& model, const Matrix& data);

struct ValidityScore {
    int c = 0;
    double score = 0.0;
};

struct ClusterCountSelection {
    int best_c = 0;
    std::vector<ValidityScore> scores;
    ClusterModel best_model;
};

// Fits FCM for each c in [c_min, c_max] and keeps the best-scoring count
// (ties to the smallest c).
ClusterCountSelection select_cluster_count(const Matrix& data, int c_min, int c_max,
                                           const FcmConfig& config);

// mask[i] = 1 iff the row's maximum membership reaches alpha.
std::vector<std::uint8_t> alpha_cut(const ClusterModel& model, double alpha);

} // namespace landuse
