#pragma once

#include <string>

#include "excimech/sweep.hpp"

namespace excimech {

// Self-contained SVG density plot of one numeric column of a 2D grid
// ("E_N_<pair>", "nu_min", "n_eff" or "max_re"). Linear color scale over
// the finite values; NaN / unstable / error cells are drawn with a hatch
// pattern. Axis labels use display units derived from the axis ranges
// (GHz / MHz / K / mW). Output is byte-deterministic for a given grid.
// Throws UsageError for 1D grids or unknown columns.
std::string render_heatmap(const GridResult& grid, const std::string& column);

void write_heatmap_file(const GridResult& grid, const std::string& column,
                        const std::string& path);

}  // namespace excimech
