#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "landuse/features.hpp"
#include "landuse/geometry.hpp"
#include "landuse/raster.hpp"

namespace landuse {

// Per-class signal model: a weekly diurnal shape (normalized to mean 1), a
// volume level in calls per m^2 per hour, and a lognormal noise scale.
struct ClassProfile {
    int class_id = 0;
    std::string name;
    std::array<double, kHoursPerWeek> shape{};
    double volume = 0.0;
    double sigma = 0.0;
};

enum class Zoning { Blocks, VoronoiZones };

struct SynthConfig {
    std::string name; // preset name, recorded in the manifest
    int n_classes = 0;
    std::vector<ClassProfile> profiles;
    std::vector<double> class_share; // target area shares
    Zoning zoning = Zoning::Blocks;
    int block_cols = 1; // Blocks zoning: blocks across / down
    int block_rows = 1;
    int n_zone_seeds = 0; // VoronoiZones zoning
    double mixing_bandwidth_m = 0.0;
    double tower_intensity_per_km2 = 1.0;
    double fine_resolution_m = 50.0;
    GridSpec grid;
    std::uint64_t seed = 1;
    std::vector<int> samples_per_class;
};

// Zone layout: which class owns a point, and the (at most two-way) class
// mixture near zone borders when a mixing bandwidth is set.
class ZoneModel {
public:
    static ZoneModel blocks(const GridSpec& grid, int block_cols, int block_rows,
                            const std::vector<double>& shares, int n_classes,
                            std::uint64_t seed);
    static ZoneModel voronoi(const GridSpec& grid, int n_seeds,
                             const std::vector<double>& shares, int n_classes,
                             std::uint64_t seed);

    int class_at(const Point& p) const;

    // Fills `w` (size n_classes) with area-mixture weights at p; pure outside
    // `bandwidth` of any zone border, linear two-class blend inside it.
    void mixture_at(const Point& p, double bandwidth, std::vector<double>& w) const;

    int n_classes() const { return n_classes_; }

private:
    Zoning kind_ = Zoning::Blocks;
    int n_classes_ = 0;
    Rect bounds_;
    // Blocks
    int block_cols_ = 0, block_rows_ = 0;
    double block_w_ = 0.0, block_h_ = 0.0;
    std::vector<int> block_class_;
    // VoronoiZones
    std::vector<Point> seeds_;
    std::vector<int> seed_class_;

    int block_index(const Point& p) const;
};

struct GenerationSummary {
    std::size_t n_towers = 0;
    std::vector<double> realized_share;
    std::vector<int> n_samples;
};

// Writes towers.csv, calls.csv, truth.asc, samples.csv, classes.csv,
// manifest.txt, and pipeline.conf into `out_dir`. Deterministic: the same
// config and seed produce byte-identical files.
GenerationSummary generate_city(const SynthConfig& config, const std::string& out_dir);

// Expected (noise-free) weekly series of a tower given its per-class
// catchment areas in m^2.
std::vector<double> expected_tower_series(const std::vector<double>& class_area,
                                          const std::vector<ClassProfile>& profiles);

std::vector<SynthConfig> scenario_presets();
SynthConfig preset(const std::string& name); // throws InputError when unknown

} // namespace landuse
