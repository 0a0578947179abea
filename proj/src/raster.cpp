#include "landuse/raster.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "landuse/errors.hpp"
#include "landuse/format.hpp"

namespace landuse {

std::optional<std::pair<int, int>> GridSpec::cell_of(double x, double y) const {
    if (x < x_ll || x > x_right() || y < y_ll || y > y_top()) return std::nullopt;
    // ceil(t) - 1 sends edge points to the lower-index neighbor.
    int col = 0;
    const double tx = (x - x_ll) / cell_size;
    if (tx > 0.0) col = static_cast<int>(std::ceil(tx)) - 1;
    int row = 0;
    const double ty = (y_top() - y) / cell_size;
    if (ty > 0.0) row = static_cast<int>(std::ceil(ty)) - 1;
    if (col < 0) col = 0;
    if (col >= n_cols) col = n_cols - 1;
    if (row < 0) row = 0;
    if (row >= n_rows) row = n_rows - 1;
    return std::make_pair(row, col);
}

namespace {

double expect_header(std::istream& in, const std::string& key, const std::string& path) {
    std::string name;
    double value = 0.0;
    if (!(in >> name >> value) || name != key) {
        throw InputError(path + ": expected raster header line '" + key + "'");
    }
    return value;
}

} // namespace

RasterGrid read_raster(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open raster: " + path);

    RasterGrid grid;
    grid.spec.n_cols = static_cast<int>(expect_header(in, "ncols", path));
    grid.spec.n_rows = static_cast<int>(expect_header(in, "nrows", path));
    grid.spec.x_ll = expect_header(in, "xllcorner", path);
    grid.spec.y_ll = expect_header(in, "yllcorner", path);
    grid.spec.cell_size = expect_header(in, "cellsize", path);
    grid.nodata = expect_header(in, "NODATA_value", path);
    if (grid.spec.n_cols <= 0 || grid.spec.n_rows <= 0 || grid.spec.cell_size <= 0) {
        throw InputError(path + ": invalid raster dimensions");
    }

    grid.values.resize(grid.spec.n_cells());
    for (std::size_t i = 0; i < grid.values.size(); ++i) {
        if (!(in >> grid.values[i])) {
            throw InputError(path + ": truncated raster body");
        }
    }
    return grid;
}

void write_raster(const std::string& path, const RasterGrid& grid) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write raster: " + path);
    auto put = [&](double v) { out << format_full(v); };
    out << "ncols " << grid.spec.n_cols << "\n";
    out << "nrows " << grid.spec.n_rows << "\n";
    out << "xllcorner ";
    put(grid.spec.x_ll);
    out << "\nyllcorner ";
    put(grid.spec.y_ll);
    out << "\ncellsize ";
    put(grid.spec.cell_size);
    out << "\nNODATA_value ";
    put(grid.nodata);
    out << "\n";
    for (int r = 0; r < grid.spec.n_rows; ++r) {
        for (int c = 0; c < grid.spec.n_cols; ++c) {
            if (c) out << ' ';
            put(grid.at(r, c));
        }
        out << "\n";
    }
    if (!out) throw InputError("write failed: " + path);
}

} // namespace landuse
