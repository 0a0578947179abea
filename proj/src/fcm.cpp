#include "landuse/fcm.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "landuse/errors.hpp"
#include "landuse/rng.hpp"

namespace landuse {

namespace {

// Squared Euclidean distance with four running sums so the compiler can keep
// the reduction in SIMD lanes; the summation order is fixed, so results stay
// deterministic.
double sqdist(const double* a, const double* b, std::size_t n) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const double d0 = a[j] - b[j];
        const double d1 = a[j + 1] - b[j + 1];
        const double d2 = a[j + 2] - b[j + 2];
        const double d3 = a[j + 3] - b[j + 3];
        s0 += d0 * d0;
        s1 += d1 * d1;
        s2 += d2 * d2;
        s3 += d3 * d3;
    }
    for (; j < n; ++j) {
        const double d = a[j] - b[j];
        s0 += d * d;
    }
    return (s0 + s1) + (s2 + s3);
}

bool all_rows_identical(const Matrix& data) {
    const double* first = data.row(0);
    for (std::size_t i = 1; i < data.rows; ++i) {
        const double* r = data.row(i);
        for (std::size_t j = 0; j < data.cols; ++j) {
            if (r[j] != first[j]) return false;
        }
    }
    return true;
}

ClusterModel degenerate_model(const Matrix& data, const FcmConfig& cfg) {
    const std::size_t c = static_cast<std::size_t>(cfg.c);
    ClusterModel model;
    model.config = cfg;
    model.degenerate = true;
    model.centers = Matrix(c, data.cols);
    for (std::size_t k = 0; k < c; ++k) {
        std::copy(data.row(0), data.row(0) + data.cols, model.centers.row(k));
    }
    model.membership = Matrix(data.rows, c, 1.0 / static_cast<double>(c));
    model.objective = 0.0;
    model.objective_trace = {0.0};
    return model;
}

// One FCM run from a Dirichlet(1) membership init. Each iteration makes a
// single pass over the data: squared distances to the current centers, the
// membership update (with J accumulated on the way), and the weighted sums
// that become the next centers. The returned centers are the ones the final
// membership matrix was computed against.
ClusterModel run_single(const Matrix& data, const FcmConfig& cfg, std::uint64_t seed) {
    const std::size_t n = data.rows;
    const std::size_t d = data.cols;
    const std::size_t c = static_cast<std::size_t>(cfg.c);
    const double m = cfg.m;
    const bool m_is_two = (m == 2.0);
    const double inv_m1 = 1.0 / (m - 1.0);
    // Below this squared distance a point counts as sitting on the center;
    // keeps d^(-1/(m-1)) clear of overflow.
    const double zero_thresh = std::pow(10.0, -290.0 * (m - 1.0));

    ClusterModel model;
    model.config = cfg;
    model.membership = Matrix(n, c);
    model.centers = Matrix(c, d);

    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        double* u = model.membership.row(i);
        double sum = 0.0;
        for (std::size_t k = 0; k < c; ++k) sum += u[k] = rng.exponential();
        for (std::size_t k = 0; k < c; ++k) u[k] /= sum;
    }

    Matrix acc(c, d);
    std::vector<double> wsum(c);
    std::vector<double> d2(c), w(c);
    Matrix next(c, d);

    auto centers_from_membership = [&](Matrix& out) {
        std::fill(acc.data.begin(), acc.data.end(), 0.0);
        std::fill(wsum.begin(), wsum.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double* u = model.membership.row(i);
            const double* x = data.row(i);
            for (std::size_t k = 0; k < c; ++k) {
                const double uw = m_is_two ? u[k] * u[k] : std::pow(u[k], m);
                wsum[k] += uw;
                double* a = acc.row(k);
                for (std::size_t j = 0; j < d; ++j) a[j] += uw * x[j];
            }
        }
        for (std::size_t k = 0; k < c; ++k) {
            double* o = out.row(k);
            const double* a = acc.row(k);
            if (wsum[k] > 0.0) {
                for (std::size_t j = 0; j < d; ++j) o[j] = a[j] / wsum[k];
            }
        }
    };

    centers_from_membership(model.centers);

    for (int iter = 0; iter < cfg.max_iter; ++iter) {
        std::fill(acc.data.begin(), acc.data.end(), 0.0);
        std::fill(wsum.begin(), wsum.end(), 0.0);
        double objective = 0.0, obj_carry = 0.0; // Kahan over per-point partials

        for (std::size_t i = 0; i < n; ++i) {
            const double* x = data.row(i);
            double* u = model.membership.row(i);

            int n_zero = 0;
            for (std::size_t k = 0; k < c; ++k) {
                d2[k] = sqdist(x, model.centers.row(k), d);
                if (d2[k] <= zero_thresh) ++n_zero;
            }

            if (c == 1) {
                u[0] = 1.0;
            } else if (n_zero > 0) {
                const double share = 1.0 / n_zero;
                for (std::size_t k = 0; k < c; ++k) u[k] = (d2[k] <= zero_thresh) ? share : 0.0;
            } else {
                double sum = 0.0;
                for (std::size_t k = 0; k < c; ++k) {
                    w[k] = m_is_two ? 1.0 / d2[k] : std::pow(d2[k], -inv_m1);
                    sum += w[k];
                }
                const double inv_sum = 1.0 / sum;
                for (std::size_t k = 0; k < c; ++k) u[k] = std::min(w[k] * inv_sum, 1.0);
            }

            double point_obj = 0.0;
            for (std::size_t k = 0; k < c; ++k) {
                const double uw = m_is_two ? u[k] * u[k] : std::pow(u[k], m);
                point_obj += uw * d2[k];
                wsum[k] += uw;
                double* a = acc.row(k);
                for (std::size_t j = 0; j < d; ++j) a[j] += uw * x[j];
            }
            const double y = point_obj - obj_carry;
            const double t = objective + y;
            obj_carry = (t - objective) - y;
            objective = t;
        }

        model.objective_trace.push_back(objective);

        double disp2 = 0.0;
        for (std::size_t k = 0; k < c; ++k) {
            double* nk = next.row(k);
            const double* ck = model.centers.row(k);
            const double* a = acc.row(k);
            double s = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                nk[j] = wsum[k] > 0.0 ? a[j] / wsum[k] : ck[j];
                const double diff = nk[j] - ck[j];
                s += diff * diff;
            }
            disp2 = std::max(disp2, s);
        }
        if (disp2 < cfg.tolerance * cfg.tolerance) break;
        std::swap(model.centers.data, next.data);
    }

    model.objective = model.objective_trace.back();
    return model;
}

} // namespace

ClusterModel fcm_fit(const Matrix& data, const FcmConfig& config) {
    if (config.c < 1) throw Error("fcm_fit: cluster count must be >= 1");
    if (!(config.m > 1.0)) throw Error("fcm_fit: fuzzifier must be > 1");
    if (!(config.tolerance > 0.0)) throw Error("fcm_fit: tolerance must be positive");
    if (config.max_iter < 1) throw Error("fcm_fit: max_iter must be >= 1");
    if (data.rows == 0 || data.cols == 0) throw Error("fcm_fit: empty data");
    if (data.rows < static_cast<std::size_t>(config.c)) {
        throw TooFewPoints("fcm_fit: " + std::to_string(data.rows) + " points for c = " +
                           std::to_string(config.c));
    }
    for (double v : data.data) {
        if (!std::isfinite(v)) throw Error("fcm_fit: non-finite data");
    }
    if (config.c > 1 && all_rows_identical(data)) return degenerate_model(data, config);

    // Restarts are independent; run them on a bounded worker set and pick the
    // winner in restart order so the result does not depend on scheduling.
    const int restarts = std::max(1, config.restarts);
    std::vector<ClusterModel> models(restarts);
    std::atomic<int> next{0};
    const int workers = std::max(1, std::min<int>(
        restarts, static_cast<int>(std::thread::hardware_concurrency())));
    auto work = [&] {
        for (int r = next.fetch_add(1); r < restarts; r = next.fetch_add(1)) {
            models[r] = run_single(data, config, mix_seed(config.seed, r));
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::size_t best = 0;
    for (std::size_t r = 1; r < models.size(); ++r) {
        if (models[r].objective < models[best].objective) best = r;
    }
    return std::move(models[best]);
}

double validity_index(const ClusterModel& model, const Matrix& data) {
    const std::size_t c = model.centers.rows;
    if (c < 2) throw SingleCluster("validity_index: undefined for c = 1");
    if (data.cols != model.centers.cols) {
        throw DimensionMismatch("validity_index: data/center dimension mismatch");
    }

    long double intra = 0.0L;
    for (std::size_t i = 0; i < data.rows; ++i) {
        const double* x = data.row(i);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < c; ++k) {
            const double* ctr = model.centers.row(k);
            double s = 0.0;
            for (std::size_t j = 0; j < data.cols; ++j) {
                const double diff = x[j] - ctr[j];
                s += diff * diff;
            }
            best = std::min(best, s);
        }
        intra += best;
    }
    const double mean_intra = static_cast<double>(intra) / static_cast<double>(data.rows);

    double inter = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a + 1 < c; ++a) {
        for (std::size_t b = a + 1; b < c; ++b) {
            double s = 0.0;
            const double* ca = model.centers.row(a);
            const double* cb = model.centers.row(b);
            for (std::size_t j = 0; j < model.centers.cols; ++j) {
                const double diff = ca[j] - cb[j];
                s += diff * diff;
            }
            inter = std::min(inter, s);
        }
    }
    if (inter == 0.0) return std::numeric_limits<double>::infinity();
    return mean_intra / inter;
}

ClusterCountSelection select_cluster_count(const Matrix& data, int c_min, int c_max,
                                           const FcmConfig& config) {
    if (c_min < 2) throw Error("select_cluster_count: c range must start at >= 2");
    if (c_min > c_max) throw Error("select_cluster_count: empty c range");
    if (static_cast<std::size_t>(c_max) >= data.rows) {
        throw TooFewPoints("select_cluster_count: c range exceeds n - 1");
    }

    ClusterCountSelection sel;
    double best_score = std::numeric_limits<double>::infinity();
    for (int c = c_min; c <= c_max; ++c) {
        FcmConfig cfg = config;
        cfg.c = c;
        cfg.seed = mix_seed(config.seed, 0x5EC0 + static_cast<std::uint64_t>(c));
        ClusterModel model = fcm_fit(data, cfg);
        const double score = validity_index(model, data);
        sel.scores.push_back({c, score});
        if (score < best_score) {
            best_score = score;
            sel.best_c = c;
            sel.best_model = std::move(model);
        }
    }
    return sel;
}

std::vector<std::uint8_t> alpha_cut(const ClusterModel& model, double alpha) {
    std::vector<std::uint8_t> mask(model.membership.rows);
    for (std::size_t i = 0; i < model.membership.rows; ++i) {
        const double* u = model.membership.row(i);
        double hi = 0.0;
        for (std::size_t k = 0; k < model.membership.cols; ++k) hi = std::max(hi, u[k]);
        mask[i] = hi >= alpha ? 1 : 0;
    }
    return mask;
}

} // namespace landuse
