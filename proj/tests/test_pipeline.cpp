#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "landuse/config.hpp"
#include "landuse/errors.hpp"
#include "landuse/evaluation.hpp"
#include "landuse/io.hpp"
#include "landuse/pipeline.hpp"
#include "landuse/raster.hpp"
#include "landuse/spatial.hpp"
#include "landuse/synthcity.hpp"

#include "test_util.hpp"

using namespace landuse;

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(LANDUSE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

SynthConfig small_city() {
    SynthConfig cfg = preset("demo");
    cfg.grid.n_rows = 25;
    cfg.grid.n_cols = 25;
    cfg.tower_intensity_per_km2 = 25.0;
    cfg.samples_per_class = {4, 4, 4, 4, 4};
    cfg.seed = 11;
    return cfg;
}

std::string first_line(const std::string& path) {
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    return line;
}

} // namespace

TEST_SUITE("pipeline") {

TEST_CASE("end-to-end run produces the full artifact set") {
    TempDir city("city"), out("out");
    generate_city(small_city(), city.str());
    PipelineConfig cfg = load_config(city.file("pipeline.conf"));
    run_pipeline(cfg, out.str());

    for (const char* name :
         {"volume.asc", "towers_per_cell.asc", "day_distance.csv", "beta_curve.csv",
          "train.txt", "membership.csv", "centers.csv", "validity.csv", "cluster.txt",
          "classified.asc", "max_membership.asc", "assignment.csv", "d1_d2.csv",
          "classify.txt", "report.txt", "confusion.csv", "posterior_confusion.csv",
          "entropy_bins.csv", "density.csv", "alpha_cut.csv", "entropy.asc"}) {
        CHECK(std::filesystem::exists(out.path / name));
    }

    const auto report = read_kv(out.file("report.txt"));
    const double rate = std::stod(kv_lookup(report, "detection_rate"));
    CHECK(rate >= 0.0);
    CHECK(rate <= 1.0);
    CHECK(kv_lookup(report, "n_cells") == "625");

    // Planted classes on pure, tower-backed cells are recovered.
    const auto truth = read_raster(city.file("truth.asc"));
    const auto pred = read_raster(out.file("classified.asc"));
    const auto towers = read_towers(city.file("towers.csv"));
    const auto mt = majority_truth(truth, pred.spec, 5);
    const auto counts = towers_per_cell(towers, pred.spec);
    std::size_t n = 0, hits = 0;
    for (int r = 0; r < pred.spec.n_rows; ++r) {
        for (int c = 0; c < pred.spec.n_cols; ++c) {
            const std::size_t cell = static_cast<std::size_t>(r) * pred.spec.n_cols + c;
            if (mt.majority.values[cell] == mt.majority.nodata) continue;
            const int cls = static_cast<int>(mt.majority.values[cell]);
            if (mt.occupancy.at(cell, cls - 1) != 1.0) continue;
            if (counts.at(r, c) < 1.0) continue;
            if (pred.at(r, c) == pred.nodata) continue;
            ++n;
            if (static_cast<int>(pred.at(r, c)) == cls) ++hits;
        }
    }
    REQUIRE(n > 0);
    CHECK(static_cast<double>(hits) / n >= 0.95);
}

TEST_CASE("feature set matches the transform contracts") {
    TempDir city("cityf"), out("outf");
    generate_city(small_city(), city.str());
    PipelineConfig cfg = load_config(city.file("pipeline.conf"));
    grid_stage(cfg, out.str());
    const FeatureSet fs = load_features(cfg, out.str());
    CHECK(fs.T == 96);
    CHECK(fs.cells.size() + fs.n_zero_activity == fs.spec.n_cells());
    for (std::size_t i = 0; i < fs.cells.size(); ++i) {
        double sum = 0.0;
        for (int j = 0; j < fs.T; ++j) sum += fs.pattern.at(i, j);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(fs.volume[i] >= 0.0);
        CHECK(fs.volume[i] <= 2.0);
    }
}

TEST_CASE("stage errors carry input-error types for missing files") {
    TempDir city("citye"), out("oute");
    generate_city(small_city(), city.str());
    PipelineConfig cfg = load_config(city.file("pipeline.conf"));
    cfg.towers_path = city.file("absent.csv");
    CHECK_THROWS_AS(grid_stage(cfg, out.str()), InputError);

    PipelineConfig ok = load_config(city.file("pipeline.conf"));
    CHECK_THROWS_AS(cluster_stage(ok, out.str()), InputError); // no grid artifacts yet
}

TEST_CASE("cli: exit codes, beta_curve contract, seed override") {
    TempDir city("cli"), out("cliout");
    const int synth_rc = run_cli("synth --preset demo --seed 5 --out-dir " + city.str());
    REQUIRE(synth_rc == 0);

    // Missing towers.csv -> stage-tagged input error, exit 2.
    std::filesystem::rename(city.path / "towers.csv", city.path / "towers.hidden");
    CHECK(run_cli("pipeline --config " + city.file("pipeline.conf") + " --out-dir " +
                  out.str()) == 2);
    std::filesystem::rename(city.path / "towers.hidden", city.path / "towers.csv");

    CHECK(run_cli("grid --config " + city.file("pipeline.conf") + " --out-dir " +
                  out.str()) == 0);
    CHECK(run_cli("train --config " + city.file("pipeline.conf") + " --out-dir " +
                  out.str()) == 0);
    CHECK(first_line(out.file("beta_curve.csv")) == "beta,f");

    // Unknown subcommand and unknown flag exit 2.
    CHECK(run_cli("frobnicate") == 2);
    CHECK(run_cli("synth --no-such-flag") == 2);
    // Unknown preset is an input error.
    CHECK(run_cli("synth --preset unknown --out-dir " + out.str()) == 2);

    // --seed overrides the config seed: different seeds, different artifacts.
    TempDir s1("seed1"), s2("seed2"), s3("seed3");
    REQUIRE(run_cli("synth --preset demo --seed 5 --out-dir " + s1.str()) == 0);
    REQUIRE(run_cli("synth --preset demo --seed 6 --out-dir " + s2.str()) == 0);
    REQUIRE(run_cli("synth --preset demo --seed 5 --out-dir " + s3.str()) == 0);
    std::ifstream a(s1.file("towers.csv")), b(s2.file("towers.csv")), c(s3.file("towers.csv"));
    std::stringstream sa, sb, sc;
    sa << a.rdbuf();
    sb << b.rdbuf();
    sc << c.rdbuf();
    CHECK(sa.str() != sb.str());
    CHECK(sa.str() == sc.str());
}

TEST_CASE("volume-only and pattern-only runs come from the same artifacts") {
    // beta_grid pinned to a single value exercises the config plumbing.
    TempDir city("cityb"), out("outb");
    generate_city(small_city(), city.str());
    {
        std::ofstream conf(city.file("pipeline.conf"), std::ios::app);
        conf << "beta_grid = 0.75\n";
    }
    PipelineConfig cfg = load_config(city.file("pipeline.conf"));
    run_pipeline(cfg, out.str());
    const auto train = read_kv(out.file("train.txt"));
    CHECK(kv_lookup(train, "beta_star") == "0.75");
    const auto report = read_kv(out.file("report.txt"));
    CHECK(kv_lookup(report, "beta_star") == "0.75");
    // Baseline keys are present and valid rates.
    for (const char* key : {"pattern_only_detection_rate", "volume_only_detection_rate"}) {
        const double v = std::stod(kv_lookup(report, key));
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
    // average_d1_d2_ratio is defined at beta > 0.
    CHECK(kv_lookup(report, "average_d1_d2_ratio") != "undefined");
}

} // TEST_SUITE
