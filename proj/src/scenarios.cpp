#include "excimech/scenarios.hpp"

#include <sstream>

namespace excimech {

SystemParams baseline_params() {
  SystemParams p;
  p.omega_b = kTwoPi * 20e9;
  p.kappa_b = kTwoPi * 1e6;
  p.kappa_c = kTwoPi * 10e9;
  p.kappa_1 = kTwoPi * 100e6;
  p.kappa_2 = kTwoPi * 100e6;
  p.g_1 = kTwoPi * 1e9;
  p.g_2 = kTwoPi * 1e9;
  p.G0_1 = kTwoPi * 10e6;
  p.G0_2 = kTwoPi * 20e6;
  p.delta_c = kTwoPi * 20e9;
  p.detuning_mode = DetuningMode::kEffective;
  p.delta_1 = -kTwoPi * 20e9;
  p.delta_2 = kTwoPi * 20e9;
  p.omega_drive = kTwoPi * 5.5e12;
  p.omega_0 = kTwoPi * 300e12;
  p.temperature = 1.0;
  return p;
}

const std::vector<ScenarioInfo>& scenario_list() {
  static const std::vector<ScenarioInfo> list = {
      {"fig2a", "exciton-exciton entanglement vs effective detunings"},
      {"fig2b", "entanglement transfer vs bare exciton-phonon coupling G0_2"},
      {"fig3a", "entanglement vs coupling magnitudes |G_1|, |G_2|"},
      {"fig3b", "entanglement vs exciton-photon couplings g_1, g_2"},
      {"fig4a", "entanglement vs dissipation rates kappa_1=kappa_2, kappa_c"},
      {"fig4b", "entanglement vs bath temperature and kappa_b"},
  };
  return list;
}

SweepConfig scenario(const std::string& name) {
  SweepConfig cfg;
  cfg.base = baseline_params();
  cfg.output = name + ".csv";
  if (name == "fig2a") {
    cfg.axes = {{"eff_delta_1", -40e9, 40e9, 101},
                {"eff_delta_2", -40e9, 40e9, 101}};
  } else if (name == "fig2b") {
    cfg.axes = {{"G0_2", 0.0, 40e6, 101}};
    cfg.bipartitions = {Bipartition(Mode::kX1, Mode::kX2),
                        Bipartition(Mode::kX1, Mode::kB)};
  } else if (name == "fig3a") {
    cfg.axes = {{"G_1_mag", 0.0, 500e6, 101}, {"G_2_mag", 0.0, 500e6, 101}};
  } else if (name == "fig3b") {
    cfg.axes = {{"g_1", 0.0, 2e9, 101}, {"g_2", 0.0, 2e9, 101}};
  } else if (name == "fig4a") {
    cfg.axes = {{"kappa_12", 10e6, 1.2e9, 101}, {"kappa_c", 1e9, 60e9, 101}};
  } else if (name == "fig4b") {
    cfg.axes = {{"temperature", 0.1, 150.0, 101},
                {"kappa_b", 0.1e6, 20e6, 101}};
  } else {
    std::ostringstream os;
    os << "unknown scenario '" << name << "'; valid scenarios:";
    for (const ScenarioInfo& s : scenario_list()) os << " " << s.name;
    throw UsageError(os.str());
  }
  return cfg;
}

}  // namespace excimech
