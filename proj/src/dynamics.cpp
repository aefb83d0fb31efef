#include "excimech/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace excimech {

Matrix8d build_drift(const SteadyState& state,
                     const DimensionlessSystem& sys) {
  const double dt1 = state.eff_delta_1;
  const double dt2 = state.eff_delta_2;
  const double re_g1 = state.G_1.real(), im_g1 = state.G_1.imag();
  const double re_g2 = state.G_2.real(), im_g2 = state.G_2.imag();

  Matrix8d a = Matrix8d::Zero();
  // exciton 1
  a(0, 0) = -sys.kappa_1;  a(0, 1) = dt1;
  a(1, 0) = -dt1;          a(1, 1) = -sys.kappa_1;
  a(0, 5) = sys.g_1;
  a(1, 4) = -sys.g_1;
  a(0, 6) = -2.0 * re_g1;
  a(1, 6) = -2.0 * im_g1;
  // exciton 2
  a(2, 2) = -sys.kappa_2;  a(2, 3) = dt2;
  a(3, 2) = -dt2;          a(3, 3) = -sys.kappa_2;
  a(2, 5) = sys.g_2;
  a(3, 4) = -sys.g_2;
  a(2, 6) = -2.0 * re_g2;
  a(3, 6) = -2.0 * im_g2;
  // cavity
  a(4, 1) = sys.g_1;       a(4, 3) = sys.g_2;
  a(5, 0) = -sys.g_1;      a(5, 2) = -sys.g_2;
  a(4, 4) = -sys.kappa_c;  a(4, 5) = sys.delta_c;
  a(5, 4) = -sys.delta_c;  a(5, 5) = -sys.kappa_c;
  // phonon
  a(6, 6) = -sys.kappa_b;  a(6, 7) = sys.omega_b;
  a(7, 6) = -sys.omega_b;  a(7, 7) = -sys.kappa_b;
  a(7, 0) = -2.0 * im_g1;  a(7, 1) = 2.0 * re_g1;
  a(7, 2) = -2.0 * im_g2;  a(7, 3) = 2.0 * re_g2;
  return a;
}

Matrix8d build_diffusion(const DimensionlessSystem& sys) {
  Matrix8d d = Matrix8d::Zero();
  const double dx1 = sys.kappa_1 * (2.0 * sys.baths.N_x1 + 1.0);
  const double dx2 = sys.kappa_2 * (2.0 * sys.baths.N_x2 + 1.0);
  const double dc = sys.kappa_c * (2.0 * sys.baths.N_c + 1.0);
  const double db = sys.kappa_b * (2.0 * sys.baths.N_b + 1.0);
  d.diagonal() << dx1, dx1, dx2, dx2, dc, dc, db, db;
  return d;
}

StabilityResult is_stable(const Matrix8d& a) {
  Eigen::EigenSolver<Matrix8d> es(a, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw NumericalError("is_stable: eigensolver did not converge");
  }
  const double max_re = es.eigenvalues().real().maxCoeff();
  return {max_re < -kStabilityMargin, max_re};
}

Matrix8d solve_lyapunov(const Matrix8d& a, const Matrix8d& d) {
  const StabilityResult st = is_stable(a);
  if (!st.stable) {
    std::ostringstream os;
    os << "solve_lyapunov: drift matrix is not stable (max Re eig = "
       << st.max_re << ")";
    throw StabilityError(os.str());
  }

  // K = I (x) A + A (x) I acting on column-major vec(V).
  Eigen::Matrix<double, 64, 64> k = Eigen::Matrix<double, 64, 64>::Zero();
  for (int col = 0; col < 8; ++col) {
    k.block<8, 8>(8 * col, 8 * col) += a;
    for (int row = 0; row < 8; ++row) {
      for (int j = 0; j < 8; ++j) {
        k(8 * col + row, 8 * j + row) += a(col, j);
      }
    }
  }
  Eigen::Matrix<double, 64, 1> rhs;
  for (int col = 0; col < 8; ++col) {
    rhs.segment<8>(8 * col) = -d.col(col);
  }
  const Eigen::Matrix<double, 64, 1> vec_v =
      k.partialPivLu().solve(rhs);

  Matrix8d v;
  for (int col = 0; col < 8; ++col) {
    v.col(col) = vec_v.segment<8>(8 * col);
  }
  v = ((v + v.transpose()) / 2.0).eval();

  const double residual = (a * v + v * a.transpose() + d).norm();
  if (!(residual <= kLyapunovResidualTol * d.norm())) {
    std::ostringstream os;
    os << "solve_lyapunov: residual " << residual << " exceeds "
       << kLyapunovResidualTol << " * ||D|| = "
       << kLyapunovResidualTol * d.norm();
    throw NumericalError(os.str());
  }
  return v;
}

}  // namespace excimech
