#pragma once

#include <complex>
#include <utility>

#include "excimech/errors.hpp"
#include "excimech/params.hpp"

namespace excimech {

// Classical (first-moment) steady state. Amplitudes are dimensionless;
// detunings and couplings are in the working units of the system the state
// was solved in.
struct SteadyState {
  std::complex<double> avg_c;   // <c>
  std::complex<double> avg_x1;  // <x1>
  std::complex<double> avg_x2;  // <x2>
  std::complex<double> avg_b;   // <b>; real unless exact_mech_response
  double eff_delta_1 = 0;       // detuning incl. deformation-potential shift
  double eff_delta_2 = 0;
  std::complex<double> G_1;     // effective exciton-phonon coupling i*G0_1*<x1>
  std::complex<double> G_2;
};

// Fixed-point iteration on <b> failed to converge; carries the last
// iterate so callers can inspect the bistable/multistable region.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, const SteadyState& last)
      : Error(what), last_(last) {}
  const SteadyState& last_iterate() const { return last_; }

 private:
  SteadyState last_;
};

// Closed-form steady state for given effective detunings (no iteration):
//   <c>  = Omega (i*dt1 + k1)(i*dt2 + k2) / [g1^2 (i*dt2 + k2)
//          + g2^2 (i*dt1 + k1) + (i*delta_c + kc)(i*dt1 + k1)(i*dt2 + k2)]
//   <xk> = -i gk <c> / (i*dtk + kk)
//   <b>  = -(G0_1 |<x1>|^2 + G0_2 |<x2>|^2) / omega_b
// (or the exact damped response when sys.exact_mech_response is set).
SteadyState solve_effective(const DimensionlessSystem& sys, double eff_delta_1,
                            double eff_delta_2);

// Bare detunings: iterate <b> -> dtk = delta_k + 2 G0_k Re<b> -> <b> until
// the relative change is below 1e-12. Throws ConvergenceError after 1000
// iterations.
SteadyState solve_self_consistent(const DimensionlessSystem& sys);

// Dispatch on sys.detuning_mode.
SteadyState solve_steady_state(const DimensionlessSystem& sys);

// G_k = i G0_k <x_k>.
std::pair<std::complex<double>, std::complex<double>> effective_couplings(
    const SteadyState& state, const DimensionlessSystem& sys);

}  // namespace excimech
