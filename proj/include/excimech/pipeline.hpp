#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "excimech/gaussian.hpp"
#include "excimech/params.hpp"

namespace excimech {

// Ordered pair of distinct modes, stored in canonical order.
struct Bipartition {
  Mode first;
  Mode second;

  Bipartition(Mode a, Mode b);
  std::string label() const;  // e.g. "x1_x2"
};

Bipartition bipartition_from_names(const std::string& a, const std::string& b);

// Per-point result of the full pipeline. Unstable points carry NaN in every
// covariance-derived field.
struct EntanglementReport {
  std::vector<std::pair<std::string, double>> e_n;  // label -> E_N
  double nu_min = 0;        // nu~_- of the first requested bipartition
  double n_eff_phonon = 0;
  bool stable = false;
  double max_re = 0;        // 1/s
  std::vector<std::string> warnings;
};

struct PointOptions {
  std::vector<Bipartition> bipartitions{Bipartition(Mode::kX1, Mode::kX2)};
  // Replace the steady-state effective couplings before building the drift
  // (rad/s). Used by sweeps over |G_1|, |G_2| with inherited phases.
  std::optional<std::complex<double>> override_G1;
  std::optional<std::complex<double>> override_G2;
};

// validate -> normalize -> steady state -> drift/diffusion -> stability ->
// Lyapunov -> reduction -> entanglement / cooling figures.
EntanglementReport run_point(const SystemParams& params,
                             const PointOptions& options = PointOptions());

}  // namespace excimech
