#pragma once

#include <optional>
#include <string>
#include <vector>

#include "excimech/constants.hpp"
#include "excimech/errors.hpp"

namespace excimech {

// Default exciton binding energy: 10 meV (GaAs-like material).
inline constexpr double kDefaultBindingEnergy = 10e-3 * kElectronVolt;  // J

enum class DetuningMode { kBare, kEffective };

// Full physical description of the driven four-mode system: two exciton
// modes x1, x2, one cavity mode c, one phonon mode b.
//
// All angular frequencies and rates are in rad/s. Configuration files use
// the nu = omega/2pi convention (plain Hz); the conversion happens once at
// the config boundary (config_io) and nowhere else.
struct SystemParams {
  double omega_b = 0;   // phonon frequency
  double kappa_b = 0;   // phonon damping
  double kappa_c = 0;   // cavity decay
  double kappa_1 = 0;   // exciton 1 dissipation
  double kappa_2 = 0;   // exciton 2 dissipation
  double g_1 = 0;       // exciton-photon coupling, mode 1
  double g_2 = 0;       // exciton-photon coupling, mode 2
  double G0_1 = 0;      // bare exciton-phonon coupling, mode 1
  double G0_2 = 0;      // bare exciton-phonon coupling, mode 2
  double delta_c = 0;   // cavity-drive detuning (any sign)

  // Exciton detunings: either bare (delta_k, shifted self-consistently by
  // the phonon displacement) or effective (used as-is, the sweep variables).
  DetuningMode detuning_mode = DetuningMode::kEffective;
  double delta_1 = 0;
  double delta_2 = 0;

  // Drive: exactly one of omega_drive (rad/s) or power (W) must be set.
  std::optional<double> omega_drive;
  std::optional<double> power;

  double omega_0 = 0;       // drive laser frequency (rad/s); also the
                            // absolute optical frequency used for bath
                            // occupations of the exciton and cavity modes
  double temperature = 0;   // bath temperature (K)

  double binding_energy = kDefaultBindingEnergy;  // J, ionization warning

  // Use the exact damped mechanical response -i*S/(i*omega_b + kappa_b)
  // for <b> instead of the -S/omega_b approximation. Relative difference
  // is O(kappa_b/omega_b); off by default.
  bool exact_mech_response = false;
};

// Mean thermal excitation numbers of the four baths.
struct BathOccupations {
  double N_x1 = 0;
  double N_x2 = 0;
  double N_c = 0;
  double N_b = 0;
};

// Output of validate(): parameters checked, drive resolved to a coupling
// rate, bath occupations evaluated, non-fatal findings collected.
struct ValidatedSystem {
  SystemParams params;
  double omega_drive = 0;  // resolved drive coupling (rad/s)
  BathOccupations baths;
  std::vector<std::string> warnings;
};

// The working-unit system all dynamics code operates on. After normalize()
// every rate is expressed in units of omega_b (scale = omega_b in rad/s),
// which keeps the drift-matrix entries O(1). The steady-state covariance
// matrix is invariant under this choice.
struct DimensionlessSystem {
  double scale = 1.0;  // rad/s per working unit
  double omega_b = 0;
  double kappa_b = 0;
  double kappa_c = 0;
  double kappa_1 = 0;
  double kappa_2 = 0;
  double g_1 = 0;
  double g_2 = 0;
  double G0_1 = 0;
  double G0_2 = 0;
  double delta_c = 0;
  DetuningMode detuning_mode = DetuningMode::kEffective;
  double delta_1 = 0;
  double delta_2 = 0;
  double omega_drive = 0;
  BathOccupations baths;
  bool exact_mech_response = false;
};

// Bose-Einstein occupation N = 1/(exp(hbar*omega/kB*T) - 1).
// Returns exactly 0 at T = 0 and when the exponent overflows (an optical
// bath at cryogenic temperature is empty). Throws DomainError for
// omega <= 0 or T < 0.
double thermal_occupation(double omega, double temperature);

// Drive coupling Omega = sqrt(2*P*kappa_c / (hbar*omega_0)).
// Throws DomainError for P < 0, kappa_c <= 0 or omega_0 <= 0.
double drive_coupling_from_power(double power, double kappa_c, double omega_0);

// Checks parameters, resolves the drive, computes bath occupations.
// Frequencies and damping rates must be strictly positive; couplings,
// drive and temperature must be nonnegative (zero couplings are legitimate
// decoupled configurations). Emits a warning when kB*T exceeds the exciton
// binding energy (ionization) and a note when kappa_2 >= omega_b (resolved
// sideband condition violated). Throws ValidationError naming the
// offending field otherwise.
ValidatedSystem validate(const SystemParams& params);

// Divides every rate by scale. Bath occupations are dimensionless and
// carried through unchanged.
DimensionlessSystem scale_system(const ValidatedSystem& v, double scale);

// scale_system with scale = omega_b: all rates in units of omega_b.
DimensionlessSystem normalize(const ValidatedSystem& v);

// Re-normalization of an already scaled system; idempotent after the
// first application (omega_b == 1 divides by itself).
DimensionlessSystem normalize(const DimensionlessSystem& d);

}  // namespace excimech
