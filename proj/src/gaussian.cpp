#include "excimech/gaussian.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace excimech {

namespace {

constexpr double kRouteTol = 1e-9;
constexpr double kPhysicalityTol = 1e-9;
constexpr double kUnphysicalInputTol = 1e-6;

// One 2x2 symplectic block [[0,1],[-1,0]] (= i sigma_y).
Eigen::Matrix2d j_block() {
  Eigen::Matrix2d j;
  j << 0.0, 1.0, -1.0, 0.0;
  return j;
}

}  // namespace

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::kX1: return "x1";
    case Mode::kX2: return "x2";
    case Mode::kC: return "c";
    case Mode::kB: return "b";
  }
  return "?";
}

Eigen::Matrix4d symplectic_form_4() {
  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega.block<2, 2>(0, 0) = j_block();
  omega.block<2, 2>(2, 2) = j_block();
  return omega;
}

Eigen::Matrix4d partial_transpose_matrix(int mode) {
  if (mode != 0 && mode != 1) {
    throw DomainError("partial_transpose_matrix: mode must be 0 or 1");
  }
  Eigen::Vector4d diag = Eigen::Vector4d::Ones();
  diag(2 * mode + 1) = -1.0;
  return diag.asDiagonal();
}

Eigen::Matrix4d reduce(const Matrix8d& v, Mode m1, Mode m2) {
  if (m1 == m2) {
    throw DomainError("reduce: modes must be distinct");
  }
  const int i = std::min(static_cast<int>(m1), static_cast<int>(m2));
  const int j = std::max(static_cast<int>(m1), static_cast<int>(m2));
  Eigen::Matrix4d out;
  out.block<2, 2>(0, 0) = v.block<2, 2>(2 * i, 2 * i);
  out.block<2, 2>(0, 2) = v.block<2, 2>(2 * i, 2 * j);
  out.block<2, 2>(2, 0) = v.block<2, 2>(2 * j, 2 * i);
  out.block<2, 2>(2, 2) = v.block<2, 2>(2 * j, 2 * j);
  return out;
}

std::vector<double> symplectic_spectrum(const Eigen::MatrixXd& v) {
  const Eigen::Index n = v.rows();
  if (n != v.cols() || n % 2 != 0) {
    throw DomainError("symplectic_spectrum: even-dimensional square input");
  }
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k < n / 2; ++k) {
    omega.block<2, 2>(2 * k, 2 * k) = j_block();
  }
  // |eig(i Omega V)| = |eig(Omega V)|; the latter stays real arithmetic.
  Eigen::EigenSolver<Eigen::MatrixXd> es(omega * v,
                                         /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw NumericalError("symplectic_spectrum: eigensolver did not converge");
  }
  std::vector<double> mods(static_cast<size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    mods[static_cast<size_t>(k)] = std::abs(es.eigenvalues()(k));
  }
  std::sort(mods.begin(), mods.end());
  return mods;
}

std::pair<double, double> symplectic_eigenvalues(const Eigen::Matrix4d& v4) {
  const Eigen::Matrix2d a = v4.block<2, 2>(0, 0);
  const Eigen::Matrix2d b = v4.block<2, 2>(2, 2);
  const Eigen::Matrix2d c = v4.block<2, 2>(0, 2);
  const double delta = a.determinant() + b.determinant() +
                       2.0 * c.determinant();
  const double det_v = v4.determinant();
  const double disc = std::max(delta * delta - 4.0 * det_v, 0.0);
  const double root = std::sqrt(disc);
  const double nu_minus = std::sqrt(std::max((delta - root) / 2.0, 0.0));
  const double nu_plus = std::sqrt(std::max((delta + root) / 2.0, 0.0));

  // Cross-check against the eigenvalue route.
  const std::vector<double> mods = symplectic_spectrum(v4);
  const double scale = std::max(1.0, nu_plus);
  if (std::abs(mods[0] - nu_minus) > kRouteTol * scale ||
      std::abs(mods[1] - nu_minus) > kRouteTol * scale ||
      std::abs(mods[2] - nu_plus) > kRouteTol * scale ||
      std::abs(mods[3] - nu_plus) > kRouteTol * scale) {
    std::ostringstream os;
    os << "symplectic_eigenvalues: closed form (" << nu_minus << ", "
       << nu_plus << ") disagrees with eigenvalue route (" << mods[0] << ", "
       << mods[1] << ", " << mods[2] << ", " << mods[3] << ")";
    throw NumericalError(os.str());
  }
  return {nu_minus, nu_plus};
}

double ptransposed_min_symplectic(const Eigen::Matrix4d& v4) {
  const Eigen::Matrix4d p = partial_transpose_matrix(0);
  return symplectic_eigenvalues(p * v4 * p).first;
}

double logarithmic_negativity(const Eigen::Matrix4d& v4) {
  const auto [nu_minus, nu_plus] = symplectic_eigenvalues(v4);
  (void)nu_plus;
  if (nu_minus < 0.5 - kUnphysicalInputTol) {
    std::ostringstream os;
    os << "logarithmic_negativity: unphysical CM, nu_- = " << nu_minus
       << " < 1/2";
    throw DomainError(os.str());
  }
  const double nu_pt = ptransposed_min_symplectic(v4);
  return std::max(0.0, -std::log(2.0 * nu_pt));
}

double effective_phonon_number(const Matrix8d& v) {
  return (v(6, 6) + v(7, 7) - 1.0) / 2.0;
}

bool check_physicality(const Eigen::MatrixXd& v) {
  const std::vector<double> mods = symplectic_spectrum(v);
  return mods.front() >= 0.5 - kPhysicalityTol;
}

}  // namespace excimech
