#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "landuse/matrix.hpp"
#include "landuse/spatial.hpp"
#include "landuse/training.hpp"

namespace landuse {

// towers.csv: header `tower_id,x,y`, coordinates in meters. Duplicate ids or
// positions are rejected.
std::vector<TowerSite> read_towers(const std::string& path);
void write_towers(const std::string& path, const std::vector<TowerSite>& sites);

// calls.csv: header `tower_id,day,hour,count`, day 0 = Monday. Missing rows
// count as zero; repeated rows accumulate. Returns one 168-entry weekly
// series per site, aligned with `sites`.
Matrix read_calls(const std::string& path, const std::vector<TowerSite>& sites);
void write_calls(const std::string& path, const std::vector<TowerSite>& sites,
                 const std::vector<std::vector<std::int64_t>>& weekly_counts);

struct SamplePoint {
    double x = 0.0;
    double y = 0.0;
    int class_id = 0;
};

// samples.csv: header `x,y,class_id`.
std::vector<SamplePoint> read_samples(const std::string& path);
void write_samples(const std::string& path, const std::vector<SamplePoint>& samples);

// classes.csv: header `class_id,name`; ids must be contiguous from 1.
std::vector<LandUseClass> read_classes(const std::string& path);
void write_classes(const std::string& path, const std::vector<LandUseClass>& classes);

} // namespace landuse
