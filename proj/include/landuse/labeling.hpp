#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "landuse/fcm.hpp"
#include "landuse/matrix.hpp"
#include "landuse/raster.hpp"
#include "landuse/training.hpp"

namespace landuse {

struct ClusterAssignment {
    std::vector<int> class_of_cluster; // class id per cluster index
    int distinct_classes = 0;
    bool covers_all_classes = false;
    bool reclustered = false;
};

// Maps every cluster center to the nearest class center (ties to the lowest
// class id).
ClusterAssignment assign_clusters(const Matrix& cluster_centers, const ClassCenters& centers);

struct Classification {
    std::vector<int> label;          // class id per data row
    std::vector<int> cluster;        // argmax-membership cluster per row
    std::vector<double> max_membership;
    ClusterAssignment assignment;
    ClusterModel model; // re-clustered model when the fallback fired
};

// Hard labels from fuzzy memberships via the cluster-to-class assignment.
// When the assignment covers fewer than K classes, FCM is re-run once with
// c = K and the assignment recomputed.
Classification classify_cells(const ClusterModel& model, const ClassCenters& centers,
                              const Matrix& data, const FcmConfig& recluster_config);

// Scatters per-row values onto a raster; cells not listed stay nodata.
RasterGrid scatter_to_raster(const GridSpec& spec,
                             const std::vector<std::pair<int, int>>& cells,
                             const std::vector<double>& values);

struct DistanceDecomposition {
    struct Row {
        int class_id = 0;
        std::size_t n_cells = 0;
        double mean_d1 = 0.0; // pattern-part distance to the assigned cluster center
        double mean_d2 = 0.0; // weighted-volume-part distance (last component)
        std::optional<double> ratio; // mean_d1 / mean_d2, absent when mean_d2 = 0
    };
    std::vector<Row> per_class;
    std::optional<double> average_ratio; // mean of the defined per-class ratios
};

// Splits each cell's distance to its cluster center into the pattern part
// (first dim-1 components) and the weighted volume part (last component);
// d(Z, C)^2 = d1^2 + d2^2 exactly.
DistanceDecomposition distance_decomposition(const Matrix& data, const ClusterModel& model,
                                             const ClusterAssignment& assignment,
                                             int n_classes);

} // namespace landuse
