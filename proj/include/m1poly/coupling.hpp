#pragma once

#include <vector>

#include <Eigen/Dense>

#include "m1poly/families.hpp"

namespace m1poly {

struct IrrepLabel {
  double mu;  // mu > 0
  int eps;    // +1 or -1, stored exactly
};

// mu12 = mu1 + mu2 + j + 1/2, eps12 = eps1 eps2 (-1)^j. Every coupled-label
// computation in the library funnels through this one function.
struct CoupledLabel {
  double mu12;
  int eps12;
  int j;
};
CoupledLabel couple(const IrrepLabel& r1, const IrrepLabel& r2, int j);

// The five decomposition integers of a threefold product; the constructor
// enforces j123 = j_12_3 + j12 = j_1_23 + j23 with all entries nonnegative.
struct ThreeFoldLabels {
  int j12, j23, j123;
  int j_12_3, j_1_23;
  ThreeFoldLabels(int j12_, int j23_, int j123_);
};

long long cg_phase(long long n1, long long n2, long long j);

// Clebsch-Gordan coefficient <n1, n2 | N, j> with n1 + n2 = N + j.
double cg_coefficient(int n1, int n2, int N, int j, const IrrepLabel& r1, const IrrepLabel& r2);

// (total+1) x (total+1) orthogonal matrix; rows indexed by n1 ascending
// (n2 = total - n1), columns by j ascending (N = total - j).
Eigen::MatrixXd cg_matrix(int total, const IrrepLabel& r1, const IrrepLabel& r2);

long long racah_phase(const ThreeFoldLabels& labels);

// Bannai-Ito parameters realized by the three-fold coupling problem; the
// finite coefficient matrix exists because they satisfy the truncation
// condition at N = j123 (even: r2 - rho1 = (N+1)/2, odd: rho1 + rho2 =
// -(N+1)/2) up to roundoff.
BannaiItoParams racah_bi_params(int j123, double mu1, double mu2, double mu3);

double racah_coefficient(const ThreeFoldLabels& labels, double mu1, double mu2, double mu3,
                         int eps3);

// Symmetric tridiagonal truncation of X_c on the representation (mu, eps):
// diagonal c*eps*(-1)^n, off-diagonal sqrt([n+1]_mu).
struct TriMatrix {
  int dimension = 0;
  std::vector<double> diagonal;
  std::vector<double> superdiagonal;  // subdiagonal equals superdiagonal
};
TriMatrix xc_matrix(int dim, const IrrepLabel& r, double c);

// Apply the coproduct realization X_c (x) R + 1 (x) X_0 to a coefficient
// vector on the truncated product basis, row-major index n1*dim2 + n2.
// Output entries at the truncation boundary (see delta_xc_boundary) miss
// contributions from outside the box and must not be asserted against.
std::vector<double> delta_xc_apply(const std::vector<double>& coeffs, int dim1, int dim2,
                                   const IrrepLabel& r1, const IrrepLabel& r2, double c);
constexpr bool delta_xc_boundary(int n1, int n2, int dim1, int dim2) {
  return n1 == dim1 - 1 || n2 == dim2 - 1;
}

}  // namespace m1poly
