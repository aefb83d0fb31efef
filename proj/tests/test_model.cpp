#include <doctest.h>

#include <cmath>
#include <random>

#include "excimech/params.hpp"
#include "test_support.hpp"

using namespace excimech;

TEST_SUITE_BEGIN("model");

TEST_CASE("thermal occupation of a 20 GHz mode at 1 K") {
  const double omega = kTwoPi * 20e9;
  // Direct Bose-Einstein evaluation.
  const double expected = 1.0 / (std::exp(kHbar * omega / kBoltzmann) - 1.0);
  CHECK(thermal_occupation(omega, 1.0) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(thermal_occupation(omega, 1.0) ==
        doctest::Approx(0.6206164582293086).epsilon(1e-12));
}

TEST_CASE("thermal occupation limits") {
  CHECK(thermal_occupation(kTwoPi * 20e9, 0.0) == 0.0);
  // Optical mode at cryogenic temperature: exponent ~1.4e4 underflows to 0.
  CHECK(thermal_occupation(kTwoPi * 300e12, 1.0) == 0.0);
  CHECK_THROWS_AS(thermal_occupation(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(thermal_occupation(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(thermal_occupation(kTwoPi * 1e9, -0.5), DomainError);
}

TEST_CASE("thermal occupation monotonicity") {
  std::mt19937 rng(91);
  std::uniform_real_distribution<double> freq(1e9, 1e13);
  std::uniform_real_distribution<double> temp(0.01, 400.0);
  for (int i = 0; i < 200; ++i) {
    const double w = freq(rng);
    const double t = temp(rng);
    CHECK(thermal_occupation(w, t * 1.1) >= thermal_occupation(w, t));
    CHECK(thermal_occupation(w * 1.1, t) <= thermal_occupation(w, t));
  }
}

TEST_CASE("drive coupling from power matches the quoted working point") {
  // 1.89 mW at kappa_c/2pi = 10 GHz, omega_0/2pi = 300 THz gives
  // Omega/2pi = 5.5 THz to within 1%.
  const double omega =
      drive_coupling_from_power(1.89e-3, kTwoPi * 10e9, kTwoPi * 300e12);
  CHECK(omega / (kTwoPi * 5.5e12) == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("drive coupling square-root law") {
  const double kc = kTwoPi * 10e9, w0 = kTwoPi * 300e12;
  CHECK(drive_coupling_from_power(0.0, kc, w0) == 0.0);
  const double one = drive_coupling_from_power(2.5e-3, kc, w0);
  const double four = drive_coupling_from_power(4.0 * 2.5e-3, kc, w0);
  CHECK(four / one == doctest::Approx(2.0).epsilon(1e-12));
  // Omega^2 linear in P.
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> power(1e-6, 1e-1);
  for (int i = 0; i < 50; ++i) {
    const double p1 = power(rng), p2 = power(rng);
    const double lhs = std::pow(drive_coupling_from_power(p1 + p2, kc, w0), 2);
    const double rhs = std::pow(drive_coupling_from_power(p1, kc, w0), 2) +
                       std::pow(drive_coupling_from_power(p2, kc, w0), 2);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
  CHECK_THROWS_AS(drive_coupling_from_power(-1e-3, kc, w0), DomainError);
  CHECK_THROWS_AS(drive_coupling_from_power(1e-3, 0.0, w0), DomainError);
}

TEST_CASE("validate accepts the baseline without warnings") {
  const ValidatedSystem v = validate(baseline_params());
  CHECK(v.warnings.empty());
  CHECK(v.omega_drive == doctest::Approx(kTwoPi * 5.5e12));
  CHECK(v.baths.N_x1 == 0.0);
  CHECK(v.baths.N_c == 0.0);
  CHECK(v.baths.N_b == doctest::Approx(0.6206164582293086).epsilon(1e-12));
}

TEST_CASE("validate warns about exciton ionization above ~116 K") {
  SystemParams p = baseline_params();
  p.temperature = 200.0;
  const ValidatedSystem v = validate(p);
  REQUIRE(v.warnings.size() == 1);
  CHECK(v.warnings[0].find("ionization") != std::string::npos);
  // 10 meV binding energy dissociates just above 116 K.
  p.temperature = 116.0;
  CHECK(validate(p).warnings.empty());
  p.temperature = 117.0;
  CHECK(validate(p).warnings.size() == 1);
}

TEST_CASE("validate notes a violated resolved-sideband condition") {
  SystemParams p = baseline_params();
  p.kappa_2 = p.omega_b;
  const ValidatedSystem v = validate(p);
  REQUIRE(v.warnings.size() == 1);
  CHECK(v.warnings[0].find("sideband") != std::string::npos);
}

TEST_CASE("validate rejects degenerate rates naming the field") {
  SystemParams p = baseline_params();
  p.kappa_c = 0.0;
  CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("kappa_c"),
                       ValidationError);
  p = baseline_params();
  p.omega_b = -1.0;
  CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("omega_b"),
                       ValidationError);
  p = baseline_params();
  p.g_1 = -1.0;
  CHECK_THROWS_AS(validate(p), ValidationError);
  // zero couplings are legitimate decoupled configurations
  p = baseline_params();
  p.g_1 = p.g_2 = p.G0_1 = p.G0_2 = 0.0;
  CHECK_NOTHROW(validate(p));
}

TEST_CASE("validate requires exactly one drive variant") {
  SystemParams p = baseline_params();
  p.power = 1.89e-3;  // both set now
  CHECK_THROWS_AS(validate(p), ValidationError);
  p.omega_drive.reset();
  CHECK_NOTHROW(validate(p));
  p.power.reset();
  CHECK_THROWS_AS(validate(p), ValidationError);
}

TEST_CASE("normalize scales every rate by omega_b") {
  const DimensionlessSystem d = normalize(validate(baseline_params()));
  CHECK(d.omega_b == 1.0);
  CHECK(d.kappa_b == doctest::Approx(5e-5).epsilon(1e-12));
  CHECK(d.kappa_c == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(d.g_1 == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(d.delta_1 == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(d.omega_drive == doctest::Approx(275.0).epsilon(1e-12));
  CHECK(d.scale == doctest::Approx(kTwoPi * 20e9));
  // occupations are dimensionless and pass through
  CHECK(d.baths.N_b == doctest::Approx(0.6206164582293086).epsilon(1e-12));
}

TEST_CASE("normalize is idempotent after the first application") {
  const DimensionlessSystem once = normalize(validate(baseline_params()));
  const DimensionlessSystem twice = normalize(once);
  CHECK(twice.omega_b == once.omega_b);
  CHECK(twice.kappa_c == once.kappa_c);
  CHECK(twice.omega_drive == once.omega_drive);
  CHECK(twice.scale == once.scale);
}

TEST_SUITE_END();
