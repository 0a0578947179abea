#include "landuse/labeling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "landuse/errors.hpp"
#include "landuse/rng.hpp"

namespace landuse {

ClusterAssignment assign_clusters(const Matrix& cluster_centers, const ClassCenters& centers) {
    if (cluster_centers.cols != centers.centers.cols) {
        throw DimensionMismatch("assign_clusters: cluster/class center dimension mismatch");
    }
    ClusterAssignment assignment;
    assignment.class_of_cluster.resize(cluster_centers.rows);
    std::set<int> seen;
    for (std::size_t q = 0; q < cluster_centers.rows; ++q) {
        std::vector<double> center(cluster_centers.row(q),
                                   cluster_centers.row(q) + cluster_centers.cols);
        const int cls = nearest_center_classify(center, centers);
        assignment.class_of_cluster[q] = cls;
        seen.insert(cls);
    }
    assignment.distinct_classes = static_cast<int>(seen.size());
    assignment.covers_all_classes = assignment.distinct_classes == centers.n_classes;
    return assignment;
}

Classification classify_cells(const ClusterModel& model, const ClassCenters& centers,
                              const Matrix& data, const FcmConfig& recluster_config) {
    Classification result;
    result.model = model;
    result.assignment = assign_clusters(model.centers, centers);

    if (!result.assignment.covers_all_classes) {
        FcmConfig cfg = recluster_config;
        cfg.c = centers.n_classes;
        cfg.seed = mix_seed(recluster_config.seed, 0x7EC1);
        result.model = fcm_fit(data, cfg);
        result.assignment = assign_clusters(result.model.centers, centers);
        result.assignment.reclustered = true;
    }

    const Matrix& u = result.model.membership;
    result.label.resize(u.rows);
    result.cluster.resize(u.rows);
    result.max_membership.resize(u.rows);
    for (std::size_t i = 0; i < u.rows; ++i) {
        const double* row = u.row(i);
        std::size_t best = 0;
        for (std::size_t k = 1; k < u.cols; ++k) {
            if (row[k] > row[best]) best = k;
        }
        result.cluster[i] = static_cast<int>(best);
        result.max_membership[i] = row[best];
        result.label[i] = result.assignment.class_of_cluster[best];
    }
    return result;
}

RasterGrid scatter_to_raster(const GridSpec& spec,
                             const std::vector<std::pair<int, int>>& cells,
                             const std::vector<double>& values) {
    if (cells.size() != values.size()) {
        throw DimensionMismatch("scatter_to_raster: cells/values size mismatch");
    }
    RasterGrid grid(spec, -9999.0);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        grid.at(cells[i].first, cells[i].second) = values[i];
    }
    return grid;
}

DistanceDecomposition distance_decomposition(const Matrix& data, const ClusterModel& model,
                                             const ClusterAssignment& assignment,
                                             int n_classes) {
    const std::size_t dim = data.cols;
    if (dim != model.centers.cols || dim < 2) {
        throw DimensionMismatch("distance_decomposition: bad dimensions");
    }

    std::vector<double> sum_d1(n_classes, 0.0), sum_d2(n_classes, 0.0);
    std::vector<std::size_t> count(n_classes, 0);

    for (std::size_t i = 0; i < data.rows; ++i) {
        const double* u = model.membership.row(i);
        std::size_t best = 0;
        for (std::size_t k = 1; k < model.membership.cols; ++k) {
            if (u[k] > u[best]) best = k;
        }
        const double* x = data.row(i);
        const double* ctr = model.centers.row(best);
        double d1_sq = 0.0;
        for (std::size_t j = 0; j + 1 < dim; ++j) {
            const double diff = x[j] - ctr[j];
            d1_sq += diff * diff;
        }
        const int cls = assignment.class_of_cluster[best] - 1;
        sum_d1[cls] += std::sqrt(d1_sq);
        sum_d2[cls] += std::abs(x[dim - 1] - ctr[dim - 1]);
        ++count[cls];
    }

    DistanceDecomposition out;
    double ratio_sum = 0.0;
    int ratio_count = 0;
    for (int k = 0; k < n_classes; ++k) {
        DistanceDecomposition::Row row;
        row.class_id = k + 1;
        row.n_cells = count[k];
        if (count[k] > 0) {
            row.mean_d1 = sum_d1[k] / static_cast<double>(count[k]);
            row.mean_d2 = sum_d2[k] / static_cast<double>(count[k]);
            if (row.mean_d2 > 0.0) {
                row.ratio = row.mean_d1 / row.mean_d2;
                ratio_sum += *row.ratio;
                ++ratio_count;
            }
        }
        out.per_class.push_back(row);
    }
    if (ratio_count > 0) out.average_ratio = ratio_sum / ratio_count;
    return out;
}

} // namespace landuse
