#include "landuse/config.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "landuse/errors.hpp"

namespace landuse {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_real(const std::string& v, const std::string& key) {
    if (v == "inf") return std::numeric_limits<double>::infinity();
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw InputError("config: bad value for " + key + ": '" + v + "'");
    }
}

long parse_int(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const long x = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw InputError("config: bad integer for " + key + ": '" + v + "'");
    }
}

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw InputError("config: bad boolean for " + key + ": '" + v + "'");
}

std::vector<double> parse_list(const std::string& v, const std::string& key) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_real(item, key));
    }
    return out;
}

} // namespace

PipelineConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config: " + path);
    const std::filesystem::path base = std::filesystem::path(path).parent_path();
    auto resolve = [&](const std::string& p) {
        std::filesystem::path fp(p);
        return fp.is_absolute() ? fp.string() : (base / fp).string();
    };

    PipelineConfig cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InputError(path + ":" + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "towers") cfg.towers_path = resolve(value);
        else if (key == "calls") cfg.calls_path = resolve(value);
        else if (key == "truth") cfg.truth_path = resolve(value);
        else if (key == "samples") cfg.samples_path = resolve(value);
        else if (key == "classes") cfg.classes_path = resolve(value);
        else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_int(value, key));
        else if (key == "grid_origin_x") cfg.grid.x_ll = parse_real(value, key);
        else if (key == "grid_origin_y") cfg.grid.y_ll = parse_real(value, key);
        else if (key == "grid_cell_size") cfg.grid.cell_size = parse_real(value, key);
        else if (key == "grid_rows") cfg.grid.n_rows = static_cast<int>(parse_int(value, key));
        else if (key == "grid_cols") cfg.grid.n_cols = static_cast<int>(parse_int(value, key));
        else if (key == "day_mode") cfg.day_mode = parse_day_mode(value);
        else if (key == "idw_power") cfg.idw_power = parse_real(value, key);
        else if (key == "idw_k") cfg.idw_k = static_cast<int>(parse_int(value, key));
        else if (key == "beta_grid") cfg.beta_grid = parse_list(value, key);
        else if (key == "leave_one_out") cfg.leave_one_out = parse_bool(value, key);
        else if (key == "volume_totals") {
            if (value == "mode") cfg.volume_totals_full_week = false;
            else if (value == "week") cfg.volume_totals_full_week = true;
            else throw InputError("config: volume_totals must be 'mode' or 'week'");
        } else if (key == "fcm_m") cfg.fcm_m = parse_real(value, key);
        else if (key == "fcm_tolerance") cfg.fcm_tolerance = parse_real(value, key);
        else if (key == "fcm_max_iter") cfg.fcm_max_iter = static_cast<int>(parse_int(value, key));
        else if (key == "fcm_restarts") cfg.fcm_restarts = static_cast<int>(parse_int(value, key));
        else if (key == "c_min") cfg.c_min = static_cast<int>(parse_int(value, key));
        else if (key == "c_max") cfg.c_max = static_cast<int>(parse_int(value, key));
        else if (key == "alphas") cfg.alphas = parse_list(value, key);
        else if (key == "entropy_bins") cfg.entropy_bins = static_cast<int>(parse_int(value, key));
        else if (key == "day_distance") {
            if (value == "cell_averaged") cfg.day_distance_city_aggregate = false;
            else if (value == "city_aggregate") cfg.day_distance_city_aggregate = true;
            else throw InputError("config: day_distance must be 'cell_averaged' or 'city_aggregate'");
        } else {
            throw InputError(path + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }

    if (!std::is_sorted(cfg.beta_grid.begin(), cfg.beta_grid.end())) {
        throw InputError("config: beta_grid must be sorted ascending");
    }
    return cfg;
}

} // namespace landuse
