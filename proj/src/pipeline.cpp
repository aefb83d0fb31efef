#include "excimech/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "excimech/dynamics.hpp"
#include "excimech/steady_state.hpp"

namespace excimech {

Bipartition::Bipartition(Mode a, Mode b)
    : first(std::min(a, b)), second(std::max(a, b)) {
  if (a == b) {
    throw DomainError("Bipartition: modes must be distinct");
  }
}

std::string Bipartition::label() const {
  return mode_name(first) + "_" + mode_name(second);
}

Bipartition bipartition_from_names(const std::string& a,
                                   const std::string& b) {
  auto parse = [](const std::string& s) {
    if (s == "x1") return Mode::kX1;
    if (s == "x2") return Mode::kX2;
    if (s == "c") return Mode::kC;
    if (s == "b") return Mode::kB;
    throw DomainError("unknown mode '" + s + "' (expected x1, x2, c, b)");
  };
  return Bipartition(parse(a), parse(b));
}

EntanglementReport run_point(const SystemParams& params,
                             const PointOptions& options) {
  if (options.bipartitions.empty()) {
    throw DomainError("run_point: at least one bipartition required");
  }
  const ValidatedSystem validated = validate(params);
  const DimensionlessSystem sys = normalize(validated);

  SteadyState state = solve_steady_state(sys);
  if (options.override_G1) {
    state.G_1 = *options.override_G1 / sys.scale;
  }
  if (options.override_G2) {
    state.G_2 = *options.override_G2 / sys.scale;
  }

  const Matrix8d a = build_drift(state, sys);
  const StabilityResult stability = is_stable(a);

  EntanglementReport report;
  report.warnings = validated.warnings;
  report.stable = stability.stable;
  report.max_re = stability.max_re * sys.scale;

  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (!stability.stable) {
    for (const Bipartition& bp : options.bipartitions) {
      report.e_n.emplace_back(bp.label(), nan);
    }
    report.nu_min = nan;
    report.n_eff_phonon = nan;
    return report;
  }

  const Matrix8d d = build_diffusion(sys);
  const Matrix8d v = solve_lyapunov(a, d);

  bool first = true;
  for (const Bipartition& bp : options.bipartitions) {
    const Eigen::Matrix4d v4 = reduce(v, bp.first, bp.second);
    report.e_n.emplace_back(bp.label(), logarithmic_negativity(v4));
    if (first) {
      report.nu_min = ptransposed_min_symplectic(v4);
      first = false;
    }
  }
  report.n_eff_phonon = effective_phonon_number(v);
  return report;
}

}  // namespace excimech
