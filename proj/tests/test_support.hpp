#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "excimech/scenarios.hpp"

// Shared generators and reference constructions for the test suites. These
// stay independent of the library's solver paths: symplectic eigenvalues
// are checked against transformed thermal spectra, covariances against
// closed-form states.
namespace excimech::testing {

inline Eigen::Matrix2d rotation2(double phi) {
  Eigen::Matrix2d r;
  r << std::cos(phi), std::sin(phi), -std::sin(phi), std::cos(phi);
  return r;
}

inline Eigen::Matrix2d squeezer2(double r) {
  Eigen::Matrix2d s;
  s << std::exp(r), 0.0, 0.0, std::exp(-r);
  return s;
}

inline Eigen::Matrix4d two_local(const Eigen::Matrix2d& a,
                                 const Eigen::Matrix2d& b) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m.block<2, 2>(0, 0) = a;
  m.block<2, 2>(2, 2) = b;
  return m;
}

inline Eigen::Matrix4d beam_splitter4(double theta) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  const Eigen::Matrix2d i2 = Eigen::Matrix2d::Identity();
  m.block<2, 2>(0, 0) = std::cos(theta) * i2;
  m.block<2, 2>(0, 2) = std::sin(theta) * i2;
  m.block<2, 2>(2, 0) = -std::sin(theta) * i2;
  m.block<2, 2>(2, 2) = std::cos(theta) * i2;
  return m;
}

// Two-mode squeezed vacuum with squeezing r, vacuum variance 1/2:
// its mode-1 partial transpose has minimum symplectic eigenvalue
// exp(-2r)/2, so E_N = 2r.
inline Eigen::Matrix4d tmsv_cm(double r) {
  Eigen::Matrix4d v = Eigen::Matrix4d::Zero();
  const double ch = std::cosh(2.0 * r) / 2.0;
  const double sh = std::sinh(2.0 * r) / 2.0;
  v(0, 0) = v(1, 1) = v(2, 2) = v(3, 3) = ch;
  v(0, 2) = v(2, 0) = sh;
  v(1, 3) = v(3, 1) = -sh;
  return v;
}

// Random symplectic transformation: local rotations x two-mode mixing x
// local squeezing x local rotations.
inline Eigen::Matrix4d random_symplectic(std::mt19937& rng) {
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> squeeze(-0.8, 0.8);
  return two_local(rotation2(angle(rng)), rotation2(angle(rng))) *
         beam_splitter4(angle(rng)) *
         two_local(squeezer2(squeeze(rng)), squeezer2(squeeze(rng))) *
         two_local(rotation2(angle(rng)), rotation2(angle(rng)));
}

// Random physical two-mode CM with known symplectic spectrum
// (nu_1, nu_2 >= 1/2): V = S diag(nu_1, nu_1, nu_2, nu_2) S^T.
inline Eigen::Matrix4d random_physical_cm(std::mt19937& rng, double& nu_1,
                                          double& nu_2) {
  std::uniform_real_distribution<double> occ(0.0, 2.0);
  nu_1 = 0.5 + occ(rng);
  nu_2 = 0.5 + occ(rng);
  Eigen::Vector4d diag(nu_1, nu_1, nu_2, nu_2);
  const Eigen::Matrix4d s = random_symplectic(rng);
  Eigen::Matrix4d v = s * diag.asDiagonal() * s.transpose();
  if (nu_1 > nu_2) std::swap(nu_1, nu_2);
  return (v + v.transpose()) / 2.0;
}

// Moduli of eig(Omega V), computed here rather than through the library.
inline std::vector<double> reference_symplectic_moduli(
    const Eigen::MatrixXd& v) {
  const Eigen::Index n = v.rows();
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k < n / 2; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(omega * v, false);
  std::vector<double> mods(static_cast<size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    mods[static_cast<size_t>(k)] = std::abs(es.eigenvalues()(k));
  }
  std::sort(mods.begin(), mods.end());
  return mods;
}

// Multiplicative perturbation of the baseline working point; detunings stay
// in the sideband-resonant wedge so most draws remain stable.
inline SystemParams random_baseline_perturbation(std::mt19937& rng) {
  std::uniform_real_distribution<double> mult(0.7, 1.3);
  std::uniform_real_distribution<double> temp(0.0, 4.0);
  SystemParams p = baseline_params();
  p.kappa_b *= mult(rng);
  p.kappa_c *= mult(rng);
  p.kappa_1 *= mult(rng);
  p.kappa_2 *= mult(rng);
  p.g_1 *= mult(rng);
  p.g_2 *= mult(rng);
  p.G0_1 *= mult(rng);
  p.G0_2 *= mult(rng);
  p.omega_drive = *p.omega_drive * mult(rng);
  p.delta_1 *= mult(rng);
  p.delta_2 *= mult(rng);
  p.delta_c *= mult(rng);
  p.temperature = temp(rng);
  return p;
}

}  // namespace excimech::testing
