#include "excimech/config_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace excimech {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& key) {
  if (!j.contains(key)) {
    throw ConfigError("missing required field '" + key + "'");
  }
  if (!j.at(key).is_number()) {
    throw ConfigError("field '" + key + "' must be a number");
  }
  return j.at(key).get<double>();
}

// Frequency-like field: config stores nu = omega/2pi in Hz.
double require_frequency(const json& j, const std::string& key) {
  return kTwoPi * require_number(j, key);
}

void reject_unknown_keys(const json& j, const std::set<std::string>& known,
                         const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key())) {
      throw ConfigError("unknown field '" + it.key() + "' in " + where);
    }
  }
}

std::vector<Bipartition> bipartitions_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw ConfigError("'bipartitions' must be a non-empty array of pairs");
  }
  std::vector<Bipartition> out;
  for (const json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_string()) {
      throw ConfigError(
          "each bipartition must be a pair of mode names, e.g. "
          "[\"x1\",\"x2\"]");
    }
    try {
      out.push_back(bipartition_from_names(pair[0].get<std::string>(),
                                           pair[1].get<std::string>()));
    } catch (const DomainError& e) {
      throw ConfigError(std::string("bipartitions: ") + e.what());
    }
  }
  return out;
}

}  // namespace

SystemParams params_from_json(const json& j) {
  if (!j.is_object()) {
    throw ConfigError("parameter config must be a JSON object");
  }
  reject_unknown_keys(
      j,
      {"omega_b", "kappa_b", "kappa_c", "kappa_1", "kappa_2", "g_1", "g_2",
       "G0_1", "G0_2", "delta_c", "detuning", "drive", "omega_0",
       "temperature", "binding_energy", "exact_mech_response"},
      "parameter config");

  SystemParams p;
  p.omega_b = require_frequency(j, "omega_b");
  p.kappa_b = require_frequency(j, "kappa_b");
  p.kappa_c = require_frequency(j, "kappa_c");
  p.kappa_1 = require_frequency(j, "kappa_1");
  p.kappa_2 = require_frequency(j, "kappa_2");
  p.g_1 = require_frequency(j, "g_1");
  p.g_2 = require_frequency(j, "g_2");
  p.G0_1 = require_frequency(j, "G0_1");
  p.G0_2 = require_frequency(j, "G0_2");
  p.delta_c = require_frequency(j, "delta_c");
  p.omega_0 = require_frequency(j, "omega_0");
  p.temperature = require_number(j, "temperature");

  if (!j.contains("detuning") || !j.at("detuning").is_object()) {
    throw ConfigError("missing 'detuning' object");
  }
  const json& det = j.at("detuning");
  const bool bare = det.contains("delta_1") || det.contains("delta_2");
  const bool eff = det.contains("eff_delta_1") || det.contains("eff_delta_2");
  if (bare == eff) {
    throw ConfigError(
        "'detuning' must contain exactly one variant: {delta_1, delta_2} or "
        "{eff_delta_1, eff_delta_2}");
  }
  if (bare) {
    reject_unknown_keys(det, {"delta_1", "delta_2"}, "'detuning'");
    p.detuning_mode = DetuningMode::kBare;
    p.delta_1 = require_frequency(det, "delta_1");
    p.delta_2 = require_frequency(det, "delta_2");
  } else {
    reject_unknown_keys(det, {"eff_delta_1", "eff_delta_2"}, "'detuning'");
    p.detuning_mode = DetuningMode::kEffective;
    p.delta_1 = require_frequency(det, "eff_delta_1");
    p.delta_2 = require_frequency(det, "eff_delta_2");
  }

  if (!j.contains("drive") || !j.at("drive").is_object()) {
    throw ConfigError("missing 'drive' object");
  }
  const json& drive = j.at("drive");
  const bool has_omega = drive.contains("omega_drive");
  const bool has_power = drive.contains("power");
  if (has_omega == has_power) {
    throw ConfigError(
        "'drive' must contain exactly one of 'omega_drive' (Hz) or 'power' "
        "(W)");
  }
  reject_unknown_keys(drive, {"omega_drive", "power"}, "'drive'");
  if (has_omega) {
    p.omega_drive = require_frequency(drive, "omega_drive");
  } else {
    p.power = require_number(drive, "power");
  }

  if (j.contains("binding_energy")) {
    p.binding_energy = require_number(j, "binding_energy");
  }
  if (j.contains("exact_mech_response")) {
    if (!j.at("exact_mech_response").is_boolean()) {
      throw ConfigError("'exact_mech_response' must be a boolean");
    }
    p.exact_mech_response = j.at("exact_mech_response").get<bool>();
  }
  return p;
}

json params_to_json(const SystemParams& p) {
  json j;
  j["omega_b"] = p.omega_b / kTwoPi;
  j["kappa_b"] = p.kappa_b / kTwoPi;
  j["kappa_c"] = p.kappa_c / kTwoPi;
  j["kappa_1"] = p.kappa_1 / kTwoPi;
  j["kappa_2"] = p.kappa_2 / kTwoPi;
  j["g_1"] = p.g_1 / kTwoPi;
  j["g_2"] = p.g_2 / kTwoPi;
  j["G0_1"] = p.G0_1 / kTwoPi;
  j["G0_2"] = p.G0_2 / kTwoPi;
  j["delta_c"] = p.delta_c / kTwoPi;
  if (p.detuning_mode == DetuningMode::kBare) {
    j["detuning"] = {{"delta_1", p.delta_1 / kTwoPi},
                     {"delta_2", p.delta_2 / kTwoPi}};
  } else {
    j["detuning"] = {{"eff_delta_1", p.delta_1 / kTwoPi},
                     {"eff_delta_2", p.delta_2 / kTwoPi}};
  }
  if (p.omega_drive) {
    j["drive"] = {{"omega_drive", *p.omega_drive / kTwoPi}};
  } else if (p.power) {
    j["drive"] = {{"power", *p.power}};
  }
  j["omega_0"] = p.omega_0 / kTwoPi;
  j["temperature"] = p.temperature;
  j["binding_energy"] = p.binding_energy;
  j["exact_mech_response"] = p.exact_mech_response;
  return j;
}

PointConfig point_config_from_json(const json& j) {
  if (!j.is_object()) {
    throw ConfigError("point config must be a JSON object");
  }
  PointConfig cfg;
  json params = j;
  if (params.contains("bipartitions")) {
    cfg.bipartitions = bipartitions_from_json(params.at("bipartitions"));
    params.erase("bipartitions");
  }
  cfg.params = params_from_json(params);
  return cfg;
}

SweepConfig sweep_from_json(const json& j) {
  if (!j.is_object()) {
    throw ConfigError("sweep config must be a JSON object");
  }
  reject_unknown_keys(j, {"base", "axes", "bipartitions", "output", "svg"},
                      "sweep config");
  if (!j.contains("base")) {
    throw ConfigError("sweep config: missing 'base' parameter object");
  }
  SweepConfig cfg;
  cfg.base = params_from_json(j.at("base"));
  if (!j.contains("axes") || !j.at("axes").is_array() ||
      j.at("axes").empty() || j.at("axes").size() > 2) {
    throw ConfigError("sweep config: 'axes' must hold 1 or 2 axis objects");
  }
  cfg.axes.clear();
  for (const json& ja : j.at("axes")) {
    reject_unknown_keys(ja, {"parameter", "min", "max", "points"}, "axis");
    if (!ja.contains("parameter") || !ja.at("parameter").is_string()) {
      throw ConfigError("axis: missing 'parameter' name");
    }
    AxisSpec ax;
    ax.parameter = ja.at("parameter").get<std::string>();
    ax.min = require_number(ja, "min");
    ax.max = require_number(ja, "max");
    const double pts = require_number(ja, "points");
    ax.points = static_cast<int>(pts);
    if (ax.points != pts || ax.points < 2) {
      throw ConfigError("axis '" + ax.parameter +
                        "': 'points' must be an integer >= 2");
    }
    cfg.axes.push_back(ax);
  }
  if (j.contains("bipartitions")) {
    cfg.bipartitions = bipartitions_from_json(j.at("bipartitions"));
  }
  if (j.contains("output")) {
    if (!j.at("output").is_string()) {
      throw ConfigError("'output' must be a string path");
    }
    cfg.output = j.at("output").get<std::string>();
  }
  if (j.contains("svg")) {
    if (!j.at("svg").is_boolean()) {
      throw ConfigError("'svg' must be a boolean");
    }
    cfg.svg = j.at("svg").get<bool>();
  }
  return cfg;
}

namespace {

json parse_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  try {
    return json::parse(is);
  } catch (const json::parse_error& e) {
    // e.what() carries the byte position and context of the failure.
    throw ConfigError("parse error in '" + path + "': " + e.what());
  }
}

}  // namespace

PointConfig load_point_config(const std::string& path) {
  return point_config_from_json(parse_file(path));
}

SweepConfig load_sweep_config(const std::string& path) {
  return sweep_from_json(parse_file(path));
}

json report_to_json(const EntanglementReport& r) {
  json j;
  json e = json::object();
  for (const auto& [label, value] : r.e_n) {
    if (std::isnan(value)) {
      e[label] = nullptr;
    } else {
      e[label] = value;
    }
  }
  j["E_N"] = e;
  j["nu_min"] = std::isnan(r.nu_min) ? json(nullptr) : json(r.nu_min);
  j["n_eff_phonon"] =
      std::isnan(r.n_eff_phonon) ? json(nullptr) : json(r.n_eff_phonon);
  j["stable"] = r.stable;
  j["max_re"] = r.max_re;
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace excimech
