#pragma once

#include <Eigen/Dense>

#include "excimech/params.hpp"
#include "excimech/steady_state.hpp"

namespace excimech {

// Quadrature ordering of all 8x8 matrices:
//   (X_x1, Y_x1, X_x2, Y_x2, X_c, Y_c, X_b, Y_b)
// with X = (a + a^dag)/sqrt(2), Y = i (a^dag - a)/sqrt(2); vacuum variance
// is 1/2 in this convention.
using Matrix8d = Eigen::Matrix<double, 8, 8>;

// Points whose slowest eigenvalue lies within this margin of the imaginary
// axis are treated as unstable: the covariance there is numerically
// meaningless. Working units (omega_b-normalized in the standard pipeline).
inline constexpr double kStabilityMargin = 1e-9;

// Relative Frobenius bound on ||A V + V A^T + D|| enforced by the solver.
inline constexpr double kLyapunovResidualTol = 1e-10;

// Drift matrix A of the linearized quadrature dynamics du = A u dt + noise.
Matrix8d build_drift(const SteadyState& state, const DimensionlessSystem& sys);

// Diffusion matrix D = Diag[kappa_j (2 N_j + 1)], one pair per mode.
Matrix8d build_diffusion(const DimensionlessSystem& sys);

struct StabilityResult {
  bool stable = false;
  double max_re = 0;  // largest eigenvalue real part, working units
};

// Hurwitz test via explicit eigenvalues. Throws NumericalError if the
// eigensolver does not converge.
StabilityResult is_stable(const Matrix8d& a);

// Steady-state covariance from A V + V A^T = -D, solved by vectorization:
// (I (x) A + A (x) I) vec(V) = -vec(D), a 64x64 partial-pivoting solve.
// The result is symmetrized and its residual checked. Throws StabilityError
// when A is not stable, NumericalError when the residual bound fails.
Matrix8d solve_lyapunov(const Matrix8d& a, const Matrix8d& d);

}  // namespace excimech
