#include <doctest.h>

#include <Eigen/Cholesky>
#include <cmath>
#include <random>

#include "excimech/dynamics.hpp"
#include "test_support.hpp"

using namespace excimech;

namespace {

DimensionlessSystem baseline_sys() {
  return normalize(validate(baseline_params()));
}

struct Built {
  DimensionlessSystem sys;
  SteadyState state;
  Matrix8d a, d;
};

Built build(const SystemParams& p, double scale = 0.0) {
  const ValidatedSystem v = validate(p);
  Built out{scale > 0 ? scale_system(v, scale) : normalize(v), {}, {}, {}};
  out.state = solve_steady_state(out.sys);
  out.a = build_drift(out.state, out.sys);
  out.d = build_diffusion(out.sys);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("dynamics");

TEST_CASE("decoupled drift is block diagonal with rotation-damping blocks") {
  SystemParams p = baseline_params();
  p.g_1 = p.g_2 = p.G0_1 = p.G0_2 = 0.0;
  const Built bu = build(p);
  Matrix8d expected = Matrix8d::Zero();
  auto block = [&](int at, double kappa, double delta) {
    expected(at, at) = -kappa;
    expected(at, at + 1) = delta;
    expected(at + 1, at) = -delta;
    expected(at + 1, at + 1) = -kappa;
  };
  block(0, bu.sys.kappa_1, -1.0);
  block(2, bu.sys.kappa_2, 1.0);
  block(4, bu.sys.kappa_c, 1.0);
  block(6, bu.sys.kappa_b, 1.0);  // phonon rotates at omega_b
  CHECK((bu.a - expected).norm() == 0.0);
}

TEST_CASE("baseline drift carries the coupling pattern") {
  const Built bu = build(baseline_params());
  const double re1 = bu.state.G_1.real(), im1 = bu.state.G_1.imag();
  CHECK(bu.a(0, 6) == -2.0 * re1);
  CHECK(bu.a(1, 6) == -2.0 * im1);
  CHECK(bu.a(7, 0) == -2.0 * im1);
  CHECK(bu.a(7, 1) == 2.0 * re1);
  CHECK(bu.a(0, 5) == bu.sys.g_1);
  CHECK(bu.a(1, 4) == -bu.sys.g_1);
  CHECK(bu.a(4, 1) == bu.sys.g_1);
  CHECK(bu.a(5, 0) == -bu.sys.g_1);
  // no direct cavity-phonon coupling
  CHECK(bu.a.block<2, 2>(4, 6).norm() == 0.0);
  CHECK(bu.a.block<2, 2>(6, 4).norm() == 0.0);
  CHECK(bu.a(0, 7) == 0.0);
  // exciton columns of the X_b row vanish
  CHECK(bu.a.block<1, 4>(6, 0).norm() == 0.0);
}

TEST_CASE("baseline is stable with the pinned margin") {
  const Built bu = build(baseline_params());
  const StabilityResult st = is_stable(bu.a);
  CHECK(st.stable);
  CHECK(st.max_re ==
        doctest::Approx(-0.003265745096797862).epsilon(1e-6));
}

TEST_CASE("diffusion matrix from the bath occupations") {
  SystemParams p = baseline_params();
  p.temperature = 0.0;
  const Built cold = build(p);
  Eigen::Matrix<double, 8, 1> expected;
  expected << cold.sys.kappa_1, cold.sys.kappa_1, cold.sys.kappa_2,
      cold.sys.kappa_2, cold.sys.kappa_c, cold.sys.kappa_c, cold.sys.kappa_b,
      cold.sys.kappa_b;
  CHECK((cold.d.diagonal() - expected).norm() == 0.0);
  CHECK((cold.d - Matrix8d(cold.d.diagonal().asDiagonal())).norm() == 0.0);

  const Built warm = build(baseline_params());
  // phonon entries pick up 2 N_b + 1 with N_b = 0.62062 at 1 K
  CHECK(warm.d(6, 6) ==
        doctest::Approx(warm.sys.kappa_b * 2.2412329164586172).epsilon(1e-12));
  CHECK(warm.d(7, 7) == warm.d(6, 6));
  CHECK(warm.d(0, 0) == doctest::Approx(warm.sys.kappa_1).epsilon(1e-15));

  // independent of the couplings
  SystemParams q = baseline_params();
  q.g_1 *= 3.0;
  q.G0_2 *= 5.0;
  const Built other = build(q);
  CHECK((other.d - warm.d).norm() == 0.0);
}

TEST_CASE("stability classification on canonical matrices") {
  const Matrix8d minus_identity = -Matrix8d::Identity();
  const StabilityResult st = is_stable(minus_identity);
  CHECK(st.stable);
  CHECK(st.max_re == doctest::Approx(-1.0));
  Matrix8d mixed = -Matrix8d::Identity();
  mixed(0, 0) = 1.0;
  CHECK_FALSE(is_stable(mixed).stable);
  // marginal case inside the conservative epsilon
  Matrix8d marginal = -Matrix8d::Identity();
  marginal(0, 0) = -1e-12;
  CHECK_FALSE(is_stable(marginal).stable);
}

TEST_CASE("swapping the coupling hierarchy destabilizes the system") {
  SystemParams p = baseline_params();
  p.G0_1 = kTwoPi * 40e6;
  p.G0_2 = kTwoPi * 10e6;
  const Built bu = build(p);
  const StabilityResult st = is_stable(bu.a);
  CHECK_FALSE(st.stable);
  CHECK(st.max_re == doctest::Approx(0.02137812715365231).epsilon(1e-6));
}

TEST_CASE("lyapunov solve on -I with unit diffusion") {
  const Matrix8d a = -Matrix8d::Identity();
  const Matrix8d d = Matrix8d::Identity();
  const Matrix8d v = solve_lyapunov(a, d);
  CHECK((v - 0.5 * Matrix8d::Identity()).norm() < 1e-14);
}

TEST_CASE("decoupled modes settle to their bath occupations") {
  SystemParams p = baseline_params();
  p.g_1 = p.g_2 = p.G0_1 = p.G0_2 = 0.0;
  const Built bu = build(p);
  const Matrix8d v = solve_lyapunov(bu.a, bu.d);
  Matrix8d expected = 0.5 * Matrix8d::Identity();
  const double nb = bu.sys.baths.N_b;
  expected(6, 6) = expected(7, 7) = nb + 0.5;
  CHECK((v - expected).norm() < 1e-12);
}

TEST_CASE("baseline covariance satisfies the residual and is physical") {
  const Built bu = build(baseline_params());
  const Matrix8d v = solve_lyapunov(bu.a, bu.d);
  CHECK((v - v.transpose()).norm() <= 1e-12 * v.norm());
  const double residual = (bu.a * v + v * bu.a.transpose() + bu.d).norm();
  CHECK(residual <= 1e-10 * bu.d.norm());
  CHECK(Eigen::LLT<Matrix8d>(v).info() == Eigen::Success);
  const auto mods = excimech::testing::reference_symplectic_moduli(v);
  CHECK(mods.front() >= 0.5 - 1e-9);
}

TEST_CASE("lyapunov solve refuses an unstable drift") {
  SystemParams p = baseline_params();
  p.G0_1 = kTwoPi * 40e6;
  p.G0_2 = kTwoPi * 10e6;
  const Built bu = build(p);
  CHECK_THROWS_AS(solve_lyapunov(bu.a, bu.d), StabilityError);
}

TEST_CASE("covariance is invariant under the time-unit normalization") {
  // omega_b-normalized pipeline vs raw SI pipeline (scale = 1)
  const Built norm = build(baseline_params());
  const Built si = build(baseline_params(), 1.0);
  const Matrix8d v_norm = solve_lyapunov(norm.a, norm.d);
  const Matrix8d v_si = solve_lyapunov(si.a, si.d);
  CHECK((v_norm - v_si).cwiseAbs().maxCoeff() <= 1e-9);
  // stability classification agrees, rates differ by the scale factor
  CHECK(is_stable(si.a).stable == is_stable(norm.a).stable);
  CHECK(is_stable(si.a).max_re ==
        doctest::Approx(is_stable(norm.a).max_re * norm.sys.scale)
            .epsilon(1e-9));
}

TEST_CASE("passive couplings alone keep the global vacuum at T = 0") {
  SystemParams p = baseline_params();
  p.G0_1 = p.G0_2 = 0.0;
  p.temperature = 0.0;
  const Built bu = build(p);
  const Matrix8d v = solve_lyapunov(bu.a, bu.d);
  CHECK((v - 0.5 * Matrix8d::Identity()).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("random stable perturbations give physical covariances") {
  std::mt19937 rng(2901);
  int stable_count = 0;
  for (int i = 0; i < 200 && stable_count < 100; ++i) {
    const SystemParams p = excimech::testing::random_baseline_perturbation(rng);
    const Built bu = build(p);
    if (!is_stable(bu.a).stable) continue;
    ++stable_count;
    const Matrix8d v = solve_lyapunov(bu.a, bu.d);
    CHECK((v - v.transpose()).norm() <= 1e-12 * std::max(1.0, v.norm()));
    CHECK(Eigen::LLT<Matrix8d>(v).info() == Eigen::Success);
    const auto mods = excimech::testing::reference_symplectic_moduli(v);
    CHECK(mods.front() >= 0.5 - 1e-9);
  }
  CHECK(stable_count == 100);
}

TEST_SUITE_END();
