#include <doctest.h>

#include <fstream>

#include "landuse/config.hpp"
#include "landuse/errors.hpp"
#include "landuse/format.hpp"
#include "landuse/io.hpp"
#include "landuse/raster.hpp"
#include "landuse/rng.hpp"

#include "test_util.hpp"

using namespace landuse;

TEST_SUITE("io") {

TEST_CASE("raster round-trip is exact") {
    Rng rng(1);
    GridSpec spec{-120.5, 33.25, 12.5, 7, 9};
    RasterGrid grid(spec, 0.0, -9999.0);
    for (double& v : grid.values) v = rng.uniform(-1e6, 1e6);
    grid.values[3] = grid.nodata;

    TempDir dir("raster");
    write_raster(dir.file("g.asc"), grid);
    const auto back = read_raster(dir.file("g.asc"));
    CHECK(back.spec == spec);
    CHECK(back.nodata == grid.nodata);
    CHECK(back.values == grid.values);
}

TEST_CASE("raster header is the documented six-line form") {
    GridSpec spec{0, 0, 200.0, 2, 3};
    RasterGrid grid(spec, 1.0);
    TempDir dir("rasterhdr");
    write_raster(dir.file("g.asc"), grid);
    std::ifstream in(dir.file("g.asc"));
    std::string line;
    std::getline(in, line);
    CHECK(line == "ncols 3");
    std::getline(in, line);
    CHECK(line == "nrows 2");
    std::getline(in, line);
    CHECK(line == "xllcorner 0");
    std::getline(in, line);
    CHECK(line == "yllcorner 0");
    std::getline(in, line);
    CHECK(line == "cellsize 200");
    std::getline(in, line);
    CHECK(line == "NODATA_value -9999");

    CHECK_THROWS_AS(read_raster(dir.file("missing.asc")), InputError);
}

TEST_CASE("towers round-trip and validation") {
    TempDir dir("towers");
    std::vector<TowerSite> sites{{"A", {1.25, -3.5}}, {"B", {100.0, 7.0}}};
    write_towers(dir.file("towers.csv"), sites);
    const auto back = read_towers(dir.file("towers.csv"));
    REQUIRE(back.size() == 2);
    CHECK(back[0].id == "A");
    CHECK(back[0].position.x == 1.25);
    CHECK(back[1].position.y == 7.0);

    {
        std::ofstream out(dir.file("dup_id.csv"));
        out << "tower_id,x,y\nA,0,0\nA,1,1\n";
    }
    CHECK_THROWS_AS(read_towers(dir.file("dup_id.csv")), InputError);
    {
        std::ofstream out(dir.file("dup_pos.csv"));
        out << "tower_id,x,y\nA,2,2\nB,2,2\n";
    }
    CHECK_THROWS_AS(read_towers(dir.file("dup_pos.csv")), InputError);
    {
        std::ofstream out(dir.file("bad_header.csv"));
        out << "id,x,y\nA,0,0\n";
    }
    CHECK_THROWS_AS(read_towers(dir.file("bad_header.csv")), InputError);
}

TEST_CASE("calls accumulate with missing rows treated as zero") {
    TempDir dir("calls");
    const std::vector<TowerSite> sites{{"A", {0, 0}}, {"B", {10, 0}}};
    {
        std::ofstream out(dir.file("calls.csv"));
        out << "tower_id,day,hour,count\n";
        out << "A,0,0,5\n";
        out << "A,0,0,2\n"; // repeated row accumulates
        out << "B,6,23,9\n";
    }
    const Matrix weekly = read_calls(dir.file("calls.csv"), sites);
    CHECK(weekly.at(0, 0) == 7.0);
    CHECK(weekly.at(1, 167) == 9.0);
    CHECK(weekly.at(0, 100) == 0.0);

    {
        std::ofstream out(dir.file("unknown.csv"));
        out << "tower_id,day,hour,count\nZ,0,0,1\n";
    }
    CHECK_THROWS_AS(read_calls(dir.file("unknown.csv"), sites), InputError);
    {
        std::ofstream out(dir.file("range.csv"));
        out << "tower_id,day,hour,count\nA,7,0,1\n";
    }
    CHECK_THROWS_AS(read_calls(dir.file("range.csv"), sites), InputError);
}

TEST_CASE("samples and classes round-trip") {
    TempDir dir("sc");
    write_samples(dir.file("samples.csv"), {{100.5, 200.25, 1}, {300.0, 400.0, 5}});
    const auto samples = read_samples(dir.file("samples.csv"));
    REQUIRE(samples.size() == 2);
    CHECK(samples[1].class_id == 5);
    CHECK(samples[0].x == 100.5);

    write_classes(dir.file("classes.csv"),
                  {{1, "Residential"}, {2, "Business"}, {3, "Commercial"}});
    const auto classes = read_classes(dir.file("classes.csv"));
    REQUIRE(classes.size() == 3);
    CHECK(classes[2].name == "Commercial");

    {
        std::ofstream out(dir.file("gap.csv"));
        out << "class_id,name\n1,A\n3,C\n";
    }
    CHECK_THROWS_AS(read_classes(dir.file("gap.csv")), InputError);
}

TEST_CASE("config parsing: defaults, lists, comments, inf, unknown keys") {
    TempDir dir("cfg");
    {
        std::ofstream out(dir.file("p.conf"));
        out << "# comment line\n";
        out << "towers = towers.csv  # trailing comment\n";
        out << "calls = sub/calls.csv\n";
        out << "seed = 99\n";
        out << "grid_cell_size = 250\n";
        out << "beta_grid = 0, 0.5, 1.0, inf\n";
        out << "day_mode = two_day\n";
        out << "alphas = 0.5,0.9\n";
        out << "volume_totals = week\n";
    }
    const auto cfg = load_config(dir.file("p.conf"));
    CHECK(cfg.seed == 99);
    CHECK(cfg.grid.cell_size == 250.0);
    CHECK(cfg.towers_path == dir.file("towers.csv"));
    CHECK(cfg.calls_path == dir.file("sub/calls.csv"));
    REQUIRE(cfg.beta_grid.size() == 4);
    CHECK(std::isinf(cfg.beta_grid.back()));
    CHECK(cfg.day_mode == DayMode::TwoDay);
    CHECK(cfg.alphas == std::vector<double>{0.5, 0.9});
    CHECK(cfg.volume_totals_full_week);
    CHECK(cfg.fcm_restarts == 10); // untouched default

    {
        std::ofstream out(dir.file("bad.conf"));
        out << "not_a_key = 3\n";
    }
    CHECK_THROWS_AS(load_config(dir.file("bad.conf")), InputError);
    CHECK_THROWS_AS(load_config(dir.file("absent.conf")), InputError);
}

TEST_CASE("format_full round-trips doubles") {
    Rng rng(2);
    for (int i = 0; i < 1000; ++i) {
        const double v = rng.uniform(-1e9, 1e9) * std::pow(10.0, rng.uniform(-12, 12));
        CHECK(std::stod(format_full(v)) == v);
    }
    CHECK(format_full(0.05) == "0.05");
    CHECK(format_full(std::numeric_limits<double>::infinity()) == "inf");
}

} // TEST_SUITE
