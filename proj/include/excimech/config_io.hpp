#pragma once

#include <string>

#include <json.hpp>

#include "excimech/pipeline.hpp"
#include "excimech/sweep.hpp"

namespace excimech {

// JSON schema (docs/config.md): keys mirror the SystemParams fields, with
// all frequency-like quantities given as nu = omega/2pi in Hz, power in W,
// temperature in K, binding_energy in J.
SystemParams params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const SystemParams& p);

SweepConfig sweep_from_json(const nlohmann::json& j);

// Point-mode config: SystemParams plus an optional "bipartitions" list.
struct PointConfig {
  SystemParams params;
  std::vector<Bipartition> bipartitions{Bipartition(Mode::kX1, Mode::kX2)};
};
PointConfig point_config_from_json(const nlohmann::json& j);

// File loaders; parse errors are rethrown as ConfigError with the
// position diagnostics nlohmann provides.
PointConfig load_point_config(const std::string& path);
SweepConfig load_sweep_config(const std::string& path);

nlohmann::json report_to_json(const EntanglementReport& r);

}  // namespace excimech
