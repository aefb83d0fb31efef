#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "excimech/pipeline.hpp"

namespace excimech {

// One sweep axis. min/max are in configuration units: Hz (= omega/2pi) for
// frequency-like parameters, K for temperature, W for power.
struct AxisSpec {
  std::string parameter;
  double min = 0;
  double max = 0;
  int points = 0;
};

struct SweepConfig {
  SystemParams base;
  std::vector<AxisSpec> axes;  // 1 or 2
  std::vector<Bipartition> bipartitions{Bipartition(Mode::kX1, Mode::kX2)};
  std::string output;  // CSV path ("" = caller decides)
  bool svg = false;
};

struct GridRow {
  double axis1 = 0;
  double axis2 = 0;  // NaN for 1D sweeps
  std::vector<double> e_n;  // aligned with SweepConfig::bipartitions
  double nu_min = 0;
  double n_eff = 0;
  double max_re = 0;
  std::string status;  // "ok" | "unstable" | "error:..."
};

struct GridResult {
  SweepConfig config;
  std::vector<std::string> e_labels;  // "E_N_x1_x2", ...
  std::vector<GridRow> rows;          // row-major, axis 1 outer
  // Phases (rad) inherited from the base steady state when sweeping
  // coupling magnitudes directly; empty otherwise.
  std::vector<double> inherited_phases;
};

// Names accepted in AxisSpec::parameter.
const std::vector<std::string>& axis_parameter_names();

// Applies one axis value (config units) onto a parameter set. Throws
// ConfigError for unknown names. "G_1_mag"/"G_2_mag" are handled by the
// sweep runner, not here.
void apply_axis_value(SystemParams& params, const std::string& parameter,
                      double value);

// Evaluates run_point over the Cartesian grid. Per-point failures are
// recorded in the row status; the grid always completes. threads = 0 picks
// EXCIMECH_THREADS or the hardware concurrency.
GridResult run_sweep(const SweepConfig& config, unsigned threads = 0);

// Deterministic CSV: header row, 9 significant digits, LF endings.
void write_csv(const GridResult& grid, std::ostream& os);
std::string csv_string(const GridResult& grid);
void write_csv_file(const GridResult& grid, const std::string& path);

// %.9g with NaN spelled "nan"; shared by CSV and report printing.
std::string format_number(double x);

}  // namespace excimech
