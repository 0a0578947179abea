#include <doctest.h>

#include <cmath>
#include <vector>

#include "landuse/errors.hpp"
#include "landuse/evaluation.hpp"
#include "landuse/rng.hpp"

using namespace landuse;

namespace {

RasterGrid class_raster(const GridSpec& spec, const std::vector<double>& values) {
    RasterGrid g(spec, -9999.0);
    g.values = values;
    return g;
}

} // namespace

TEST_SUITE("evaluation") {

TEST_CASE("majority truth on a uniform fine raster") {
    GridSpec coarse{0, 0, 10.0, 2, 2};
    GridSpec fine{0, 0, 2.0, 10, 10};
    RasterGrid truth(fine, 3.0);
    const auto mt = majority_truth(truth, coarse, 5);
    for (std::size_t cell = 0; cell < 4; ++cell) {
        CHECK(mt.majority.values[cell] == 3.0);
        CHECK(mt.occupancy.at(cell, 2) == 1.0);
    }
}

TEST_CASE("majority truth 50/50 tie goes to the lower class id") {
    GridSpec coarse{0, 0, 10.0, 1, 1};
    GridSpec fine{0, 0, 5.0, 2, 2};
    RasterGrid truth(fine, 0.0);
    truth.at(0, 0) = 4;
    truth.at(0, 1) = 2;
    truth.at(1, 0) = 2;
    truth.at(1, 1) = 4;
    const auto mt = majority_truth(truth, coarse, 5);
    CHECK(mt.majority.values[0] == 2.0);
    CHECK(mt.occupancy.at(0, 1) == 0.5);
    CHECK(mt.occupancy.at(0, 3) == 0.5);
    CHECK(mt.occupancy.at(0, 0) == 0.0);
}

TEST_CASE("majority truth shares match direct counting") {
    Rng rng(66);
    GridSpec coarse{0, 0, 10.0, 3, 3};
    GridSpec fine{0, 0, 1.0, 30, 30};
    RasterGrid truth(fine, 0.0);
    for (double& v : truth.values) v = 1.0 + rng.below(4);
    const auto mt = majority_truth(truth, coarse, 4);

    for (int cr = 0; cr < 3; ++cr) {
        for (int cc = 0; cc < 3; ++cc) {
            std::vector<int> counts(4, 0);
            for (int fr = cr * 10; fr < (cr + 1) * 10; ++fr) {
                for (int fc = cc * 10; fc < (cc + 1) * 10; ++fc) {
                    ++counts[static_cast<int>(truth.at(fr, fc)) - 1];
                }
            }
            const std::size_t cell = static_cast<std::size_t>(cr) * 3 + cc;
            for (int k = 0; k < 4; ++k) {
                CHECK(mt.occupancy.at(cell, k) == counts[k] / 100.0);
            }
        }
    }

    GridSpec far{1000, 1000, 10.0, 2, 2};
    CHECK_THROWS_AS(majority_truth(truth, far, 4), NoOverlap);
}

TEST_CASE("detection rate perfect, zero, and empty") {
    GridSpec spec{0, 0, 1.0, 2, 2};
    const auto truth = class_raster(spec, {1, 2, 3, 4});
    CHECK(detection_rate(truth, truth) == 1.0);
    const auto wrong = class_raster(spec, {2, 3, 4, 1});
    CHECK(detection_rate(wrong, truth) == 0.0);

    RasterGrid empty(spec, -9999.0);
    CHECK_THROWS_AS(detection_rate(empty, truth), NoEvaluableCells);
}

TEST_CASE("confusion matrix hand case and trace identity") {
    GridSpec spec{0, 0, 1.0, 1, 3};
    const auto truth = class_raster(spec, {1, 1, 2});
    const auto pred = class_raster(spec, {1, 2, 2});
    const auto cm = confusion_matrix(pred, truth, 2);
    CHECK(cm.rates.at(0, 0) == 0.5);
    CHECK(cm.rates.at(0, 1) == 0.5);
    CHECK(cm.rates.at(1, 0) == 0.0);
    CHECK(cm.rates.at(1, 1) == 1.0);
    CHECK(cm.support == std::vector<std::size_t>{2, 1});

    // Support-weighted trace equals the detection rate.
    double weighted = 0.0;
    std::size_t total = 0;
    for (int k = 0; k < 2; ++k) {
        weighted += cm.rates.at(k, k) * static_cast<double>(cm.support[k]);
        total += cm.support[k];
    }
    CHECK(weighted / static_cast<double>(total) ==
          doctest::Approx(detection_rate(pred, truth)).epsilon(1e-12));

    const auto perfect = confusion_matrix(truth, truth, 2);
    CHECK(perfect.rates.at(0, 0) == 1.0);
    CHECK(perfect.rates.at(1, 1) == 1.0);
    CHECK(perfect.rates.at(0, 1) == 0.0);
}

TEST_CASE("confusion rows sum to one where supported") {
    Rng rng(5);
    GridSpec spec{0, 0, 1.0, 10, 10};
    std::vector<double> t(100), p(100);
    for (int i = 0; i < 100; ++i) {
        t[i] = 1.0 + rng.below(4);
        p[i] = 1.0 + rng.below(4);
    }
    const auto cm = confusion_matrix(class_raster(spec, p), class_raster(spec, t), 5);
    for (int k = 0; k < 5; ++k) {
        double sum = 0.0;
        for (int q = 0; q < 5; ++q) sum += cm.rates.at(k, q);
        if (cm.support[k] > 0) {
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
        } else {
            CHECK(sum == 0.0);
        }
    }
}

TEST_CASE("posterior confusion at class centers is the identity") {
    GridSpec spec{0, 0, 1.0, 1, 3};
    const auto truth = class_raster(spec, {1, 2, 3});
    Matrix patterns(3, 2);
    Matrix centers(3, 2);
    const double pts[3][2] = {{0, 0}, {1, 0}, {0, 1}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 2; ++j) {
            patterns.at(i, j) = pts[i][j];
            centers.at(i, j) = pts[i][j];
        }
    }
    const std::vector<std::pair<int, int>> cells{{0, 0}, {0, 1}, {0, 2}};
    const auto cm = posterior_confusion(patterns, cells, centers, truth);
    for (int k = 0; k < 3; ++k) CHECK(cm.rates.at(k, k) == 1.0);
}

TEST_CASE("entropy values: pure, uniform, half-half") {
    GridSpec coarse{0, 0, 10.0, 1, 1};
    MajorityTruth mt;
    mt.n_classes = 5;
    mt.majority = RasterGrid(coarse, 1.0);
    mt.occupancy = Matrix(1, 5);

    RasterGrid pred(coarse, 1.0);

    mt.occupancy.at(0, 0) = 1.0; // pure
    auto ea = entropy_analysis(mt, pred, 10);
    CHECK(ea.entropy.values[0] == 0.0);

    for (int k = 0; k < 5; ++k) mt.occupancy.at(0, k) = 0.2; // uniform
    ea = entropy_analysis(mt, pred, 10);
    CHECK(ea.entropy.values[0] == doctest::Approx(std::log(5.0)).epsilon(1e-9));

    for (int k = 0; k < 5; ++k) mt.occupancy.at(0, k) = 0.0;
    mt.occupancy.at(0, 0) = 0.5;
    mt.occupancy.at(0, 1) = 0.5;
    ea = entropy_analysis(mt, pred, 10);
    CHECK(ea.entropy.values[0] == doctest::Approx(std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("entropy bins partition the evaluated cells") {
    Rng rng(9);
    GridSpec coarse{0, 0, 10.0, 6, 6};
    GridSpec fine{0, 0, 2.0, 30, 30};
    RasterGrid truth(fine, 0.0);
    for (double& v : truth.values) v = 1.0 + rng.below(5);
    const auto mt = majority_truth(truth, coarse, 5);

    RasterGrid pred(coarse, 0.0);
    for (double& v : pred.values) v = 1.0 + rng.below(5);

    const auto ea = entropy_analysis(mt, pred, 10);
    std::size_t total = 0;
    for (const auto& bin : ea.bins) total += bin.n_cells;
    CHECK(total == coarse.n_cells());

    for (const auto& bin : ea.bins) {
        CHECK(bin.lo >= 0.0);
        CHECK(bin.hi <= std::log(5.0) + 1e-12);
        if (bin.error_rate) {
            CHECK(*bin.error_rate >= 0.0);
            CHECK(*bin.error_rate <= 1.0);
        }
    }
}

TEST_CASE("density analysis groups by exact tower count") {
    GridSpec spec{0, 0, 1.0, 1, 4};
    const auto truth = class_raster(spec, {1, 1, 2, 2});
    const auto pred = class_raster(spec, {1, 2, 2, 2});
    const auto towers = class_raster(spec, {0, 0, 1, 3});
    const auto rows = density_analysis(pred, truth, towers);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].tower_count == 0);
    CHECK(rows[0].n_cells == 2);
    CHECK(rows[0].rate == 0.5);
    CHECK(rows[1].tower_count == 1);
    CHECK(rows[1].rate == 1.0);
    CHECK(rows[2].tower_count == 3);
    CHECK(rows[2].n_cells == 1);

    std::size_t total = 0;
    for (const auto& r : rows) total += r.n_cells;
    CHECK(total == 4);
}

TEST_CASE("alpha-cut analysis: full cut equals overall, retention monotone") {
    GridSpec spec{0, 0, 1.0, 1, 4};
    const auto truth = class_raster(spec, {1, 1, 2, 2});
    const auto pred = class_raster(spec, {1, 2, 2, 2});
    const auto memb = class_raster(spec, {0.9, 0.6, 0.55, 0.95});

    const auto rows = alpha_cut_analysis(memb, pred, truth, {0.0, 0.5, 0.6, 0.7, 0.99});
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].retained_fraction == 1.0);
    REQUIRE(rows[0].rate.has_value());
    CHECK(*rows[0].rate == detection_rate(pred, truth));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].retained_fraction <= rows[i - 1].retained_fraction);
    }
    // alpha = 0.99 retains only the last cell (0.95 < 0.99 -> none retained).
    CHECK(rows[4].n_cells == 0);
    CHECK_FALSE(rows[4].rate.has_value());
}

} // TEST_SUITE
