#include "landuse/features.hpp"

#include <cmath>
#include <limits>

#include "landuse/errors.hpp"

namespace landuse {

int mode_length(DayMode mode) {
    switch (mode) {
    case DayMode::FourDay: return 96;
    case DayMode::TwoDay: return 48;
    case DayMode::SevenDay: return 168;
    }
    throw Error("mode_length: invalid mode");
}

std::string day_mode_name(DayMode mode) {
    switch (mode) {
    case DayMode::FourDay: return "four_day";
    case DayMode::TwoDay: return "two_day";
    case DayMode::SevenDay: return "seven_day";
    }
    throw Error("day_mode_name: invalid mode");
}

DayMode parse_day_mode(const std::string& name) {
    if (name == "four_day") return DayMode::FourDay;
    if (name == "two_day") return DayMode::TwoDay;
    if (name == "seven_day") return DayMode::SevenDay;
    throw InputError("unknown day mode: " + name);
}

namespace {

void check_weekly(const std::vector<double>& weekly) {
    if (weekly.size() != kHoursPerWeek) {
        throw DimensionMismatch("weekly series must have 168 entries");
    }
    for (double v : weekly) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw Error("weekly series entries must be finite and nonnegative");
        }
    }
}

} // namespace

std::vector<double> day_mode_aggregate(const std::vector<double>& weekly, DayMode mode) {
    check_weekly(weekly);
    auto day = [&](int d, int h) { return weekly[static_cast<std::size_t>(d) * 24 + h]; };

    switch (mode) {
    case DayMode::SevenDay: return weekly;
    case DayMode::FourDay: {
        std::vector<double> out(96);
        for (int h = 0; h < 24; ++h) {
            out[h] = (day(0, h) + day(1, h) + day(2, h) + day(3, h)) / 4.0;
            out[24 + h] = day(4, h);
            out[48 + h] = day(5, h);
            out[72 + h] = day(6, h);
        }
        return out;
    }
    case DayMode::TwoDay: {
        std::vector<double> out(48);
        for (int h = 0; h < 24; ++h) {
            out[h] = (day(0, h) + day(1, h) + day(2, h) + day(3, h) + day(4, h)) / 5.0;
            out[24 + h] = (day(5, h) + day(6, h)) / 2.0;
        }
        return out;
    }
    }
    throw Error("day_mode_aggregate: invalid mode");
}

std::vector<double> pattern_normalize(const std::vector<double>& b) {
    double sum = 0.0;
    for (double v : b) {
        if (!(v >= 0.0)) throw Error("pattern_normalize: negative entry");
        sum += v;
    }
    if (sum == 0.0) throw NoActivity("pattern_normalize: series sums to zero");
    std::vector<double> x(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) x[j] = b[j] / sum;
    return x;
}

std::vector<double> volume_transform(const std::vector<double>& totals) {
    if (totals.empty()) throw Error("volume_transform: no totals");
    double lo = totals[0], hi = totals[0];
    for (double t : totals) {
        lo = std::min(lo, t);
        hi = std::max(hi, t);
    }
    std::vector<double> y(totals.size(), 0.0);
    if (hi > lo) {
        const double scale = 2.0 / (hi - lo);
        for (std::size_t i = 0; i < totals.size(); ++i) y[i] = scale * (totals[i] - lo);
    }
    return y;
}

std::vector<double> combine(const std::vector<double>& pattern, double volume, double beta) {
    std::vector<double> z;
    z.reserve(pattern.size() + 1);
    if (std::isinf(beta)) {
        z.assign(pattern.size(), 0.0);
        z.push_back(volume);
        return z;
    }
    if (!(beta >= 0.0)) throw Error("combine: beta must be nonnegative or infinity");
    z = pattern;
    z.push_back(beta * volume);
    return z;
}

std::array<std::vector<double>, 7> daily_patterns(const std::vector<double>& weekly) {
    check_weekly(weekly);
    std::array<std::vector<double>, 7> out;
    for (int d = 0; d < 7; ++d) {
        double sum = 0.0;
        for (int h = 0; h < 24; ++h) sum += weekly[static_cast<std::size_t>(d) * 24 + h];
        if (sum == 0.0) continue;
        out[d].resize(24);
        for (int h = 0; h < 24; ++h) {
            out[d][h] = weekly[static_cast<std::size_t>(d) * 24 + h] / sum;
        }
    }
    return out;
}

namespace {

double pattern_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

} // namespace

DayDistanceMatrix day_distance_matrix(
    const std::vector<std::array<std::vector<double>, 7>>& patterns) {
    DayDistanceMatrix m{};
    for (int a = 0; a < 7; ++a) {
        for (int b = a + 1; b < 7; ++b) {
            double acc = 0.0;
            std::size_t n = 0;
            for (const auto& cell : patterns) {
                if (cell[a].empty() || cell[b].empty()) continue;
                acc += pattern_distance(cell[a], cell[b]);
                ++n;
            }
            const double mean = n ? acc / static_cast<double>(n) : 0.0;
            m[a][b] = mean;
            m[b][a] = mean;
        }
    }
    return m;
}

DayDistanceMatrix day_distance_matrix_aggregate(
    const std::vector<std::vector<double>>& weeklies) {
    std::vector<double> total(kHoursPerWeek, 0.0);
    for (const auto& w : weeklies) {
        check_weekly(w);
        for (int h = 0; h < kHoursPerWeek; ++h) total[h] += w[h];
    }
    return day_distance_matrix({daily_patterns(total)});
}

} // namespace landuse
