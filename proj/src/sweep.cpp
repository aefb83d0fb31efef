#include "excimech/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "excimech/steady_state.hpp"

namespace excimech {

namespace {

enum class AxisKind { kFrequency, kTemperature, kPower, kCouplingMag };

struct AxisEntry {
  const char* name;
  AxisKind kind;
  void (*apply)(SystemParams&, double);  // value in rad/s (or K, W)
};

void set_eff_delta_1(SystemParams& p, double v) {
  p.detuning_mode = DetuningMode::kEffective;
  p.delta_1 = v;
}
void set_eff_delta_2(SystemParams& p, double v) {
  p.detuning_mode = DetuningMode::kEffective;
  p.delta_2 = v;
}
void set_bare_delta_1(SystemParams& p, double v) {
  p.detuning_mode = DetuningMode::kBare;
  p.delta_1 = v;
}
void set_bare_delta_2(SystemParams& p, double v) {
  p.detuning_mode = DetuningMode::kBare;
  p.delta_2 = v;
}
void set_omega_drive(SystemParams& p, double v) {
  p.omega_drive = v;
  p.power.reset();
}
void set_power(SystemParams& p, double v) {
  p.power = v;
  p.omega_drive.reset();
}

constexpr AxisEntry kAxisTable[] = {
    {"eff_delta_1", AxisKind::kFrequency, set_eff_delta_1},
    {"eff_delta_2", AxisKind::kFrequency, set_eff_delta_2},
    {"delta_1", AxisKind::kFrequency, set_bare_delta_1},
    {"delta_2", AxisKind::kFrequency, set_bare_delta_2},
    {"delta_c", AxisKind::kFrequency,
     [](SystemParams& p, double v) { p.delta_c = v; }},
    {"omega_b", AxisKind::kFrequency,
     [](SystemParams& p, double v) { p.omega_b = v; }},
    {"kappa_b", AxisKind::kFrequency,
     [](SystemParams& p, double v) { p.kappa_b = v; }},
    {"kappa_c", AxisKind::kFrequency,
     [](SystemParams& p, double v) { p.kappa_c = v; }},
    {"kappa_1", AxisKind::kFrequency,
     [](SystemParams& p, double v) { p.kappa_1 = v; }},
    {"kappa_2", AxisKind::kFrequency,
     [](SystemParams& p, double v) { p.kappa_2 = v; }},
    {"kappa_12", AxisKind::kFrequency,
     [](SystemParams& p, double v) { p.kappa_1 = p.kappa_2 = v; }},
    {"g_1", AxisKind::kFrequency,
     [](SystemParams& p, double v) { p.g_1 = v; }},
    {"g_2", AxisKind::kFrequency,
     [](SystemParams& p, double v) { p.g_2 = v; }},
    {"G0_1", AxisKind::kFrequency,
     [](SystemParams& p, double v) { p.G0_1 = v; }},
    {"G0_2", AxisKind::kFrequency,
     [](SystemParams& p, double v) { p.G0_2 = v; }},
    {"omega_drive", AxisKind::kFrequency, set_omega_drive},
    {"power", AxisKind::kPower, set_power},
    {"temperature", AxisKind::kTemperature,
     [](SystemParams& p, double v) { p.temperature = v; }},
    {"G_1_mag", AxisKind::kCouplingMag, nullptr},
    {"G_2_mag", AxisKind::kCouplingMag, nullptr},
};

const AxisEntry& axis_entry(const std::string& name) {
  for (const AxisEntry& e : kAxisTable) {
    if (name == e.name) return e;
  }
  std::ostringstream os;
  os << "unknown sweep parameter '" << name << "'; valid parameters:";
  for (const AxisEntry& e : kAxisTable) os << " " << e.name;
  throw ConfigError(os.str());
}

std::string sanitize_status(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    if (c == ',' ) c = ';';
    if (c == '\n' || c == '\r') c = ' ';
  }
  return out;
}

unsigned resolve_threads(unsigned requested, size_t n_points) {
  unsigned n = requested;
  if (n == 0) {
    if (const char* env = std::getenv("EXCIMECH_THREADS")) {
      const long parsed = std::strtol(env, nullptr, 10);
      if (parsed > 0) n = static_cast<unsigned>(parsed);
    }
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, 64);
  return static_cast<unsigned>(std::min<size_t>(n, std::max<size_t>(n_points, 1)));
}

std::vector<double> axis_values(const AxisSpec& ax) {
  std::vector<double> v(static_cast<size_t>(ax.points));
  for (int i = 0; i < ax.points; ++i) {
    v[static_cast<size_t>(i)] =
        ax.min + (ax.max - ax.min) * static_cast<double>(i) /
                     static_cast<double>(ax.points - 1);
  }
  return v;
}

}  // namespace

const std::vector<std::string>& axis_parameter_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const AxisEntry& e : kAxisTable) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

void apply_axis_value(SystemParams& params, const std::string& parameter,
                      double value) {
  const AxisEntry& e = axis_entry(parameter);
  switch (e.kind) {
    case AxisKind::kFrequency:
      e.apply(params, kTwoPi * value);
      return;
    case AxisKind::kTemperature:
    case AxisKind::kPower:
      e.apply(params, value);
      return;
    case AxisKind::kCouplingMag:
      throw ConfigError("apply_axis_value: '" + parameter +
                        "' is handled by the sweep runner");
  }
}

GridResult run_sweep(const SweepConfig& config, unsigned threads) {
  if (config.axes.empty() || config.axes.size() > 2) {
    throw ConfigError("run_sweep: 1 or 2 axes required");
  }
  for (const AxisSpec& ax : config.axes) {
    axis_entry(ax.parameter);  // name check up front
    if (ax.points < 2) {
      throw ConfigError("run_sweep: axis '" + ax.parameter +
                        "' needs at least 2 points");
    }
    if (!(ax.min < ax.max)) {
      throw ConfigError("run_sweep: axis '" + ax.parameter +
                        "' needs min < max");
    }
  }
  bool has_eff = false, has_bare = false, has_mag = false;
  for (const AxisSpec& ax : config.axes) {
    const AxisEntry& e = axis_entry(ax.parameter);
    has_eff |= (ax.parameter == "eff_delta_1" || ax.parameter == "eff_delta_2");
    has_bare |= (ax.parameter == "delta_1" || ax.parameter == "delta_2");
    has_mag |= (e.kind == AxisKind::kCouplingMag);
  }
  if (has_eff && has_bare) {
    throw ConfigError(
        "run_sweep: cannot mix bare and effective detuning axes");
  }

  GridResult grid;
  grid.config = config;
  for (const Bipartition& bp : config.bipartitions) {
    grid.e_labels.push_back("E_N_" + bp.label());
  }

  // Direct coupling-magnitude sweeps keep the phases of the base system's
  // steady-state couplings and override only the magnitudes.
  double phase_g1 = 0.0, phase_g2 = 0.0;
  if (has_mag) {
    const DimensionlessSystem base_sys = normalize(validate(config.base));
    const SteadyState base_state = solve_steady_state(base_sys);
    if (std::abs(base_state.G_1) > 0) phase_g1 = std::arg(base_state.G_1);
    if (std::abs(base_state.G_2) > 0) phase_g2 = std::arg(base_state.G_2);
    grid.inherited_phases = {phase_g1, phase_g2};
  }

  const std::vector<double> v1 = axis_values(config.axes[0]);
  const std::vector<double> v2 = config.axes.size() == 2
                                     ? axis_values(config.axes[1])
                                     : std::vector<double>{};
  const size_t n1 = v1.size();
  const size_t n2 = std::max<size_t>(v2.size(), 1);
  const size_t n_points = n1 * n2;
  grid.rows.resize(n_points);

  const double nan = std::numeric_limits<double>::quiet_NaN();
  auto evaluate = [&](size_t index) {
    const size_t i1 = index / n2;
    const size_t i2 = index % n2;
    GridRow& row = grid.rows[index];
    row.axis1 = v1[i1];
    row.axis2 = v2.empty() ? nan : v2[i2];
    row.e_n.assign(config.bipartitions.size(), nan);
    row.nu_min = nan;
    row.n_eff = nan;
    row.max_re = nan;

    SystemParams p = config.base;
    PointOptions opts;
    opts.bipartitions = config.bipartitions;
    auto apply_one = [&](const AxisSpec& ax, double value) {
      const AxisEntry& e = axis_entry(ax.parameter);
      if (e.kind == AxisKind::kCouplingMag) {
        const double phase =
            ax.parameter == "G_1_mag" ? phase_g1 : phase_g2;
        const std::complex<double> g =
            kTwoPi * value * std::exp(std::complex<double>(0.0, phase));
        if (ax.parameter == "G_1_mag") {
          opts.override_G1 = g;
        } else {
          opts.override_G2 = g;
        }
      } else {
        apply_axis_value(p, ax.parameter, value);
      }
    };
    try {
      apply_one(config.axes[0], row.axis1);
      if (!v2.empty()) apply_one(config.axes[1], row.axis2);
      const EntanglementReport rep = run_point(p, opts);
      row.max_re = rep.max_re;
      if (!rep.stable) {
        row.status = "unstable";
        return;
      }
      for (size_t k = 0; k < rep.e_n.size(); ++k) {
        row.e_n[k] = rep.e_n[k].second;
      }
      row.nu_min = rep.nu_min;
      row.n_eff = rep.n_eff_phonon;
      row.status = "ok";
    } catch (const Error& err) {
      row.status = sanitize_status(std::string("error:") + err.what());
    }
  };

  const unsigned n_threads = resolve_threads(threads, n_points);
  if (n_threads <= 1) {
    for (size_t i = 0; i < n_points; ++i) evaluate(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) {
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < n_points;
             i = next.fetch_add(1)) {
          evaluate(i);
        }
      });
    }
    for (std::thread& th : pool) th.join();
  }
  return grid;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

void write_csv(const GridResult& grid, std::ostream& os) {
  const bool two_d = grid.config.axes.size() == 2;
  os << grid.config.axes[0].parameter;
  if (two_d) os << ',' << grid.config.axes[1].parameter;
  for (const std::string& label : grid.e_labels) os << ',' << label;
  os << ",nu_min,n_eff,max_re,status\n";
  for (const GridRow& row : grid.rows) {
    os << format_number(row.axis1);
    if (two_d) os << ',' << format_number(row.axis2);
    for (double e : row.e_n) os << ',' << format_number(e);
    os << ',' << format_number(row.nu_min) << ',' << format_number(row.n_eff)
       << ',' << format_number(row.max_re) << ',' << row.status << '\n';
  }
}

std::string csv_string(const GridResult& grid) {
  std::ostringstream os;
  write_csv(grid, os);
  return os.str();
}

void write_csv_file(const GridResult& grid, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw UsageError("cannot open '" + path + "' for writing");
  }
  write_csv(grid, os);
}

}  // namespace excimech
