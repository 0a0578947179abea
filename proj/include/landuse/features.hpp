#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace landuse {

// One week of hourly values, day 0 = Monday; index = day * 24 + hour.
inline constexpr int kHoursPerWeek = 168;

enum class DayMode {
    FourDay,  // averaged Mon-Thu day + Friday + Saturday + Sunday, T = 96
    TwoDay,   // averaged weekday + averaged weekend day, T = 48
    SevenDay, // the raw week, T = 168
};

int mode_length(DayMode mode);
std::string day_mode_name(DayMode mode);
DayMode parse_day_mode(const std::string& name);

// Aggregates the raw weekly series into the mode series (averaging raw
// volumes, before any normalization).
std::vector<double> day_mode_aggregate(const std::vector<double>& weekly, DayMode mode);

// X_j = b_j / sum(b). Throws NoActivity when the series sums to zero.
std::vector<double> pattern_normalize(const std::vector<double>& b);

// Y_i = 2 (t_i - min t) / (max t - min t); all zero when max == min.
std::vector<double> volume_transform(const std::vector<double>& totals);

// Z = [X, beta * Y]. beta = +infinity is the volume-only sentinel: the
// pattern part is zeroed and the last entry carries Y itself.
std::vector<double> combine(const std::vector<double>& pattern, double volume, double beta);

// Per-day normalized 24-point patterns of a weekly series; days with zero
// activity come back empty (excluded from distance statistics).
std::array<std::vector<double>, 7> daily_patterns(const std::vector<double>& weekly);

using DayDistanceMatrix = std::array<std::array<double, 7>, 7>;

// Mean (over cells) Euclidean distance between pairs of normalized daily
// patterns; a pair contributes for a cell only when both days have activity.
DayDistanceMatrix day_distance_matrix(
    const std::vector<std::array<std::vector<double>, 7>>& patterns);

// City-aggregate variant: daily patterns of the summed series over all cells.
DayDistanceMatrix day_distance_matrix_aggregate(const std::vector<std::vector<double>>& weeklies);

} // namespace landuse
