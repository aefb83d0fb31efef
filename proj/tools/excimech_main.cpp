#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "excimech/config_io.hpp"
#include "excimech/heatmap.hpp"
#include "excimech/scenarios.hpp"

namespace {

using namespace excimech;

int exit_code_for(const Error& e, bool point_mode) {
  if (point_mode && (dynamic_cast<const NumericalError*>(&e) ||
                     dynamic_cast<const StabilityError*>(&e) ||
                     dynamic_cast<const ConvergenceError*>(&e))) {
    return 2;
  }
  return 1;
}

void print_report(const EntanglementReport& report) {
  std::cout << "stable: " << (report.stable ? "true" : "false") << "\n";
  std::cout << "max_re: " << format_number(report.max_re) << " 1/s\n";
  for (const auto& [label, value] : report.e_n) {
    std::cout << "E_N[" << label << "]: " << format_number(value) << "\n";
  }
  std::cout << "nu_min: " << format_number(report.nu_min) << "\n";
  std::cout << "n_eff_phonon: " << format_number(report.n_eff_phonon) << "\n";
  for (const std::string& w : report.warnings) {
    std::cout << "warning: " << w << "\n";
  }
}

bool parse_grid(const std::string& text, int& n1, int& n2) {
  n1 = n2 = 0;
  const size_t x = text.find('x');
  try {
    if (x == std::string::npos) {
      n1 = std::stoi(text);
    } else {
      n1 = std::stoi(text.substr(0, x));
      n2 = std::stoi(text.substr(x + 1));
    }
  } catch (const std::exception&) {
    return false;
  }
  return n1 >= 2 && (x == std::string::npos || n2 >= 2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "excimech: steady-state entanglement and cooling of a driven "
      "two-exciton optomechanical cavity"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads,
                 "worker threads for sweeps (default: EXCIMECH_THREADS or "
                 "hardware concurrency)");

  // point
  std::string point_config;
  bool as_json = false;
  CLI::App* point = app.add_subcommand(
      "point", "evaluate one parameter set and print the report");
  point->add_option("--config", point_config, "JSON parameter file")
      ->required();
  point->add_flag("--json", as_json, "print the report as JSON");

  // sweep
  std::string sweep_scenario, sweep_config, out_path, svg_column;
  std::string grid_text;
  bool svg = false;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "run a 1D/2D parameter sweep and write a CSV table");
  CLI::Option* opt_scenario =
      sweep->add_option("--scenario", sweep_scenario, "preset name");
  sweep->add_option("--config", sweep_config, "JSON sweep file")
      ->excludes(opt_scenario);
  sweep->add_option("--grid", grid_text,
                    "override grid size, e.g. 101x101 or 41");
  sweep->add_option("--out", out_path, "output CSV path");
  sweep->add_flag("--svg", svg, "also write an SVG heatmap next to the CSV");
  sweep->add_option("--svg-column", svg_column,
                    "column to render (default: first E_N column)");

  // scenarios
  CLI::App* scen =
      app.add_subcommand("scenarios", "list the available sweep presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*point) {
      const PointConfig cfg = load_point_config(point_config);
      PointOptions opts;
      opts.bipartitions = cfg.bipartitions;
      const EntanglementReport report = run_point(cfg.params, opts);
      if (as_json) {
        std::cout << report_to_json(report).dump(2) << "\n";
      } else {
        print_report(report);
      }
      return 0;
    }

    if (*sweep) {
      SweepConfig cfg;
      if (!sweep_scenario.empty()) {
        cfg = scenario(sweep_scenario);
      } else if (!sweep_config.empty()) {
        cfg = load_sweep_config(sweep_config);
      } else {
        throw UsageError("sweep: provide --scenario or --config");
      }
      if (!grid_text.empty()) {
        int n1 = 0, n2 = 0;
        if (!parse_grid(grid_text, n1, n2)) {
          throw UsageError("sweep: bad --grid (expected N or NxM, N >= 2)");
        }
        cfg.axes[0].points = n1;
        if (cfg.axes.size() == 2) {
          if (n2 == 0) {
            throw UsageError("sweep: 2D scenario needs --grid NxM");
          }
          cfg.axes[1].points = n2;
        } else if (n2 != 0) {
          throw UsageError("sweep: 1D scenario takes --grid N");
        }
      }
      if (!out_path.empty()) cfg.output = out_path;
      if (cfg.output.empty()) cfg.output = "sweep.csv";
      if (svg) cfg.svg = true;

      const GridResult grid = run_sweep(cfg, threads);
      write_csv_file(grid, cfg.output);
      std::cout << "wrote " << cfg.output << " (" << grid.rows.size()
                << " rows)\n";
      if (!grid.inherited_phases.empty()) {
        std::cout << "coupling phases inherited from base steady state "
                     "(rad): G_1="
                  << format_number(grid.inherited_phases[0])
                  << " G_2=" << format_number(grid.inherited_phases[1])
                  << "\n";
      }
      if (cfg.svg) {
        const std::string column =
            svg_column.empty() ? grid.e_labels.front() : svg_column;
        std::string svg_path = cfg.output;
        const size_t dot = svg_path.rfind('.');
        svg_path = (dot == std::string::npos ? svg_path
                                             : svg_path.substr(0, dot)) +
                   ".svg";
        write_heatmap_file(grid, column, svg_path);
        std::cout << "wrote " << svg_path << "\n";
      }
      return 0;
    }

    if (*scen) {
      for (const ScenarioInfo& s : scenario_list()) {
        std::printf("%-7s %s\n", s.name.c_str(), s.description.c_str());
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e, app.got_subcommand("point"));
  }
  return 0;
}
