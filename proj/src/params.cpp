#include "excimech/params.hpp"

#include <cmath>
#include <sstream>

namespace excimech {

double thermal_occupation(double omega, double temperature) {
  if (!(omega > 0)) {
    throw DomainError("thermal_occupation: omega must be > 0");
  }
  if (temperature < 0) {
    throw DomainError("thermal_occupation: temperature must be >= 0");
  }
  if (temperature == 0) return 0.0;
  const double x = kHbar * omega / (kBoltzmann * temperature);
  // expm1 overflows to +inf for large x, giving exactly 0.
  const double e = std::expm1(x);
  if (std::isinf(e)) return 0.0;
  return 1.0 / e;
}

double drive_coupling_from_power(double power, double kappa_c,
                                 double omega_0) {
  if (power < 0) {
    throw DomainError("drive_coupling_from_power: power must be >= 0");
  }
  if (!(kappa_c > 0)) {
    throw DomainError("drive_coupling_from_power: kappa_c must be > 0");
  }
  if (!(omega_0 > 0)) {
    throw DomainError("drive_coupling_from_power: omega_0 must be > 0");
  }
  return std::sqrt(2.0 * power * kappa_c / (kHbar * omega_0));
}

namespace {

void require_positive(double value, const char* field) {
  if (!(value > 0) || !std::isfinite(value)) {
    throw ValidationError(std::string("validate: ") + field +
                          " must be strictly positive");
  }
}

void require_nonnegative(double value, const char* field) {
  if (value < 0 || !std::isfinite(value)) {
    throw ValidationError(std::string("validate: ") + field +
                          " must be nonnegative");
  }
}

}  // namespace

ValidatedSystem validate(const SystemParams& params) {
  require_positive(params.omega_b, "omega_b");
  require_positive(params.kappa_b, "kappa_b");
  require_positive(params.kappa_c, "kappa_c");
  require_positive(params.kappa_1, "kappa_1");
  require_positive(params.kappa_2, "kappa_2");
  require_positive(params.omega_0, "omega_0");
  require_nonnegative(params.g_1, "g_1");
  require_nonnegative(params.g_2, "g_2");
  require_nonnegative(params.G0_1, "G0_1");
  require_nonnegative(params.G0_2, "G0_2");
  require_nonnegative(params.temperature, "temperature");
  require_positive(params.binding_energy, "binding_energy");
  if (!std::isfinite(params.delta_1) || !std::isfinite(params.delta_2) ||
      !std::isfinite(params.delta_c)) {
    throw ValidationError("validate: detunings must be finite");
  }

  if (params.omega_drive.has_value() == params.power.has_value()) {
    throw ValidationError(
        "validate: exactly one of omega_drive and power must be set");
  }

  ValidatedSystem v;
  v.params = params;
  if (params.omega_drive) {
    require_nonnegative(*params.omega_drive, "omega_drive");
    v.omega_drive = *params.omega_drive;
  } else {
    v.omega_drive = drive_coupling_from_power(*params.power, params.kappa_c,
                                              params.omega_0);
  }

  // Optical modes sit within tens of GHz of the drive laser at ~hundreds
  // of THz; their occupations are evaluated at omega_0.
  v.baths.N_x1 = thermal_occupation(params.omega_0, params.temperature);
  v.baths.N_x2 = v.baths.N_x1;
  v.baths.N_c = v.baths.N_x1;
  v.baths.N_b = thermal_occupation(params.omega_b, params.temperature);

  if (kBoltzmann * params.temperature > params.binding_energy) {
    std::ostringstream os;
    os << "ionization: kB*T exceeds the exciton binding energy (threshold "
       << params.binding_energy / kBoltzmann
       << " K); excitons dissociate unless the material binds more strongly";
    v.warnings.push_back(os.str());
  }
  if (params.kappa_2 >= params.omega_b) {
    v.warnings.push_back(
        "resolved-sideband condition violated: kappa_2 >= omega_b, "
        "sideband cooling via x2 is inefficient");
  }
  return v;
}

DimensionlessSystem scale_system(const ValidatedSystem& v, double scale) {
  if (!(scale > 0)) {
    throw DomainError("scale_system: scale must be > 0");
  }
  const SystemParams& p = v.params;
  DimensionlessSystem d;
  d.scale = scale;
  d.omega_b = p.omega_b / scale;
  d.kappa_b = p.kappa_b / scale;
  d.kappa_c = p.kappa_c / scale;
  d.kappa_1 = p.kappa_1 / scale;
  d.kappa_2 = p.kappa_2 / scale;
  d.g_1 = p.g_1 / scale;
  d.g_2 = p.g_2 / scale;
  d.G0_1 = p.G0_1 / scale;
  d.G0_2 = p.G0_2 / scale;
  d.delta_c = p.delta_c / scale;
  d.detuning_mode = p.detuning_mode;
  d.delta_1 = p.delta_1 / scale;
  d.delta_2 = p.delta_2 / scale;
  d.omega_drive = v.omega_drive / scale;
  d.baths = v.baths;
  d.exact_mech_response = p.exact_mech_response;
  return d;
}

DimensionlessSystem normalize(const ValidatedSystem& v) {
  return scale_system(v, v.params.omega_b);
}

DimensionlessSystem normalize(const DimensionlessSystem& d) {
  DimensionlessSystem out = d;
  const double s = d.omega_b;
  if (!(s > 0)) {
    throw DomainError("normalize: omega_b must be > 0");
  }
  out.scale = d.scale * s;
  out.omega_b /= s;
  out.kappa_b /= s;
  out.kappa_c /= s;
  out.kappa_1 /= s;
  out.kappa_2 /= s;
  out.g_1 /= s;
  out.g_2 /= s;
  out.G0_1 /= s;
  out.G0_2 /= s;
  out.delta_c /= s;
  out.delta_1 /= s;
  out.delta_2 /= s;
  out.omega_drive /= s;
  return out;
}

}  // namespace excimech
