#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "excimech/dynamics.hpp"

namespace excimech {

// Mode order of the full covariance matrix.
enum class Mode { kX1 = 0, kX2 = 1, kC = 2, kB = 3 };

std::string mode_name(Mode m);

// 4x4 symplectic form Omega_2 = direct sum of two [[0,1],[-1,0]] blocks.
Eigen::Matrix4d symplectic_form_4();

// Partial-transposition matrix for one mode of a two-mode CM:
// Diag[1,-1,1,1] (mode index 0) or Diag[1,1,1,-1] (mode index 1).
Eigen::Matrix4d partial_transpose_matrix(int mode);

// Two-mode reduction: keeps the 2x2 quadrature blocks of the selected
// modes in canonical (x1, x2, c, b) order. Throws DomainError for equal
// modes.
Eigen::Matrix4d reduce(const Matrix8d& v, Mode m1, Mode m2);

// Symplectic eigenvalues (nu_minus, nu_plus) of a two-mode CM.
// Primary route: the closed form nu^2 = (Delta -+ sqrt(Delta^2 - 4 det V))/2
// with Delta = det A + det B + 2 det C on blocks [[A, C], [C^T, B]].
// Cross-checked against the moduli of eig(i Omega_2 V); disagreement beyond
// 1e-9 raises NumericalError.
std::pair<double, double> symplectic_eigenvalues(const Eigen::Matrix4d& v4);

// Minimum symplectic eigenvalue of the partially transposed CM (nu~_-).
double ptransposed_min_symplectic(const Eigen::Matrix4d& v4);

// E_N = max[0, -ln 2 nu~_-]. Throws DomainError when the input CM itself is
// unphysical (nu_- < 1/2 - 1e-6 before transposition).
double logarithmic_negativity(const Eigen::Matrix4d& v4);

// n_eff = (V_77 + V_88 - 1)/2 from the phonon quadrature variances.
double effective_phonon_number(const Matrix8d& v);

// All 2n moduli of eig(i Omega_n V), ascending (pairs of equal values for a
// physical CM). Input must be even-dimensional and symmetric.
std::vector<double> symplectic_spectrum(const Eigen::MatrixXd& v);

// True iff every symplectic eigenvalue is >= 1/2 - 1e-9.
bool check_physicality(const Eigen::MatrixXd& v);

}  // namespace excimech
