#include "landuse/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "landuse/errors.hpp"
#include "landuse/features.hpp"
#include "landuse/format.hpp"

namespace landuse {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return in;
}

void expect_header(std::ifstream& in, const std::string& expected, const std::string& path) {
    std::string line;
    if (!std::getline(in, line)) throw InputError(path + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != expected) {
        throw InputError(path + ": expected header '" + expected + "', got '" + line + "'");
    }
}

double parse_double(const std::string& s, const std::string& context) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InputError(context + ": bad number '" + s + "'");
    }
}

long parse_long(const std::string& s, const std::string& context) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InputError(context + ": bad integer '" + s + "'");
    }
}

} // namespace

std::vector<TowerSite> read_towers(const std::string& path) {
    auto in = open_or_throw(path);
    expect_header(in, "tower_id,x,y", path);

    std::vector<TowerSite> sites;
    std::set<std::string> ids;
    std::set<std::pair<double, double>> positions;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != 3) throw InputError(path + ": expected 3 fields, got '" + line + "'");
        TowerSite site;
        site.id = f[0];
        site.position.x = parse_double(f[1], path);
        site.position.y = parse_double(f[2], path);
        if (!std::isfinite(site.position.x) || !std::isfinite(site.position.y)) {
            throw InputError(path + ": non-finite position for tower " + site.id);
        }
        if (!ids.insert(site.id).second) {
            throw InputError(path + ": duplicate tower_id " + site.id);
        }
        if (!positions.insert({site.position.x, site.position.y}).second) {
            throw InputError(path + ": duplicate tower position at " + site.id);
        }
        sites.push_back(std::move(site));
    }
    if (sites.empty()) throw InputError(path + ": no towers");
    return sites;
}

void write_towers(const std::string& path, const std::vector<TowerSite>& sites) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << "tower_id,x,y\n";
    for (const auto& s : sites) {
        out << s.id << ',' << format_full(s.position.x) << ',' << format_full(s.position.y)
            << '\n';
    }
}

Matrix read_calls(const std::string& path, const std::vector<TowerSite>& sites) {
    auto in = open_or_throw(path);
    expect_header(in, "tower_id,day,hour,count", path);

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < sites.size(); ++i) index[sites[i].id] = i;

    Matrix weekly(sites.size(), kHoursPerWeek);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != 4) throw InputError(path + ": expected 4 fields, got '" + line + "'");
        const auto it = index.find(f[0]);
        if (it == index.end()) {
            throw InputError(path + ": unknown tower_id " + f[0]);
        }
        const long day = parse_long(f[1], path);
        const long hour = parse_long(f[2], path);
        const long count = parse_long(f[3], path);
        if (day < 0 || day > 6) throw InputError(path + ": day out of range in '" + line + "'");
        if (hour < 0 || hour > 23) {
            throw InputError(path + ": hour out of range in '" + line + "'");
        }
        if (count < 0) throw InputError(path + ": negative count in '" + line + "'");
        weekly.at(it->second, static_cast<std::size_t>(day) * 24 + hour) +=
            static_cast<double>(count);
    }
    return weekly;
}

void write_calls(const std::string& path, const std::vector<TowerSite>& sites,
                 const std::vector<std::vector<std::int64_t>>& weekly_counts) {
    if (sites.size() != weekly_counts.size()) {
        throw DimensionMismatch("write_calls: sites/series size mismatch");
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << "tower_id,day,hour,count\n";
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const auto& series = weekly_counts[i];
        for (int d = 0; d < 7; ++d) {
            for (int h = 0; h < 24; ++h) {
                out << sites[i].id << ',' << d << ',' << h << ','
                    << series[static_cast<std::size_t>(d) * 24 + h] << '\n';
            }
        }
    }
}

std::vector<SamplePoint> read_samples(const std::string& path) {
    auto in = open_or_throw(path);
    expect_header(in, "x,y,class_id", path);
    std::vector<SamplePoint> samples;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != 3) throw InputError(path + ": expected 3 fields, got '" + line + "'");
        SamplePoint s;
        s.x = parse_double(f[0], path);
        s.y = parse_double(f[1], path);
        s.class_id = static_cast<int>(parse_long(f[2], path));
        if (s.class_id < 1) throw InputError(path + ": class_id must be >= 1");
        samples.push_back(s);
    }
    if (samples.empty()) throw InputError(path + ": no samples");
    return samples;
}

void write_samples(const std::string& path, const std::vector<SamplePoint>& samples) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << "x,y,class_id\n";
    for (const auto& s : samples) {
        out << format_full(s.x) << ',' << format_full(s.y) << ',' << s.class_id << '\n';
    }
}

std::vector<LandUseClass> read_classes(const std::string& path) {
    auto in = open_or_throw(path);
    expect_header(in, "class_id,name", path);
    std::vector<LandUseClass> classes;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != 2) throw InputError(path + ": expected 2 fields, got '" + line + "'");
        LandUseClass cls;
        cls.id = static_cast<int>(parse_long(f[0], path));
        cls.name = f[1];
        classes.push_back(std::move(cls));
    }
    if (classes.empty()) throw InputError(path + ": no classes");
    std::sort(classes.begin(), classes.end(),
              [](const LandUseClass& a, const LandUseClass& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].id != static_cast<int>(i) + 1) {
            throw InputError(path + ": class ids must be contiguous from 1");
        }
    }
    return classes;
}

void write_classes(const std::string& path, const std::vector<LandUseClass>& classes) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << "class_id,name\n";
    for (const auto& c : classes) out << c.id << ',' << c.name << '\n';
}

} // namespace landuse
