#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "landuse/geometry.hpp"

namespace landuse {

// Regular cell grid. `x_ll`/`y_ll` is the lower-left corner of the grid in
// meters; rows are indexed from the top (row 0 = northernmost), matching the
// ASCII raster layout used throughout.
struct GridSpec {
    double x_ll = 0.0;
    double y_ll = 0.0;
    double cell_size = 200.0;
    int n_rows = 0;
    int n_cols = 0;

    std::size_t n_cells() const {
        return static_cast<std::size_t>(n_rows) * static_cast<std::size_t>(n_cols);
    }
    double y_top() const { return y_ll + cell_size * n_rows; }
    double x_right() const { return x_ll + cell_size * n_cols; }
    Rect bounds() const { return {x_ll, y_ll, x_right(), y_top()}; }

    Point cell_center(int row, int col) const {
        return {x_ll + (col + 0.5) * cell_size, y_top() - (row + 0.5) * cell_size};
    }

    // Cell containing (x, y), or nullopt when outside the grid. A point on a
    // shared cell edge belongs to the cell with the lower (row, col) index.
    std::optional<std::pair<int, int>> cell_of(double x, double y) const;

    bool operator==(const GridSpec&) const = default;
};

struct RasterGrid {
    GridSpec spec;
    double nodata = -9999.0;
    std::vector<double> values; // row-major, row 0 = northernmost

    RasterGrid() = default;
    explicit RasterGrid(const GridSpec& s, double fill = 0.0, double nd = -9999.0)
        : spec(s), nodata(nd), values(s.n_cells(), fill) {}

    double& at(int row, int col) { return values[static_cast<std::size_t>(row) * spec.n_cols + col]; }
    double at(int row, int col) const { return values[static_cast<std::size_t>(row) * spec.n_cols + col]; }
    bool is_nodata(int row, int col) const { return at(row, col) == nodata; }
};

// ASCII grid I/O. Header: ncols, nrows, xllcorner, yllcorner, cellsize,
// NODATA_value; then nrows lines of ncols values, top row first. Values are
// written in shortest round-trip form so that read(write(g)) == g exactly.
RasterGrid read_raster(const std::string& path);
void write_raster(const std::string& path, const RasterGrid& grid);

} // namespace landuse
