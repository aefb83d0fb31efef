#pragma once

#include <string>
#include <vector>

#include "excimech/sweep.hpp"

namespace excimech {

// The experimentally feasible working point used throughout: omega_b/2pi =
// 20 GHz, kappa_b/2pi = 1 MHz, kappa_c/2pi = 10 GHz, kappa_1,2/2pi =
// 100 MHz, g_1,2/2pi = 1 GHz, G0_1/2pi = 10 MHz, G0_2/2pi = 20 MHz,
// Omega/2pi = 5.5 THz, omega_0/2pi = 300 THz, T = 1 K, delta_c = omega_b,
// effective detunings (-omega_b, +omega_b).
SystemParams baseline_params();

struct ScenarioInfo {
  std::string name;
  std::string description;
};

const std::vector<ScenarioInfo>& scenario_list();

// Preset sweep configurations over the baseline working point:
//   fig2a: E_N(x1,x2) vs effective detunings (101x101)
//   fig2b: E_N(x1,x2), E_N(x1,b) vs bare coupling G0_2 (101)
//   fig3a: E_N(x1,x2) vs coupling magnitudes |G_1|, |G_2| (101x101)
//   fig3b: E_N(x1,x2) vs exciton-photon couplings g_1, g_2 (101x101)
//   fig4a: E_N(x1,x2) vs kappa_1=kappa_2 and kappa_c (101x101)
//   fig4b: E_N(x1,x2) vs temperature and kappa_b (101x101)
// Throws UsageError for unknown names, listing the valid ones.
SweepConfig scenario(const std::string& name);

}  // namespace excimech
