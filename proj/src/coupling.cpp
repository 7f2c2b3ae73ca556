#include "m1poly/coupling.hpp"

#include <cmath>
#include <string>

namespace m1poly {

namespace {

void validate(const IrrepLabel& r) {
  if (!(r.mu > 0)) throw ParameterError("irrep label: mu must be positive");
  if (r.eps != 1 && r.eps != -1) throw ParameterError("irrep label: eps must be +1 or -1");
}

}  // namespace

CoupledLabel couple(const IrrepLabel& r1, const IrrepLabel& r2, int j) {
  validate(r1);
  validate(r2);
  if (j < 0) throw ParameterError("couple: j must be nonnegative");
  return {r1.mu + r2.mu + j + 0.5, r1.eps * r2.eps * parity_sign(j), j};
}

ThreeFoldLabels::ThreeFoldLabels(int j12_, int j23_, int j123_)
    : j12(j12_), j23(j23_), j123(j123_), j_12_3(j123_ - j12_), j_1_23(j123_ - j23_) {
  if (j12 < 0 || j23 < 0 || j123 < 0 || j_12_3 < 0 || j_1_23 < 0)
    throw ParameterError("threefold labels: need 0 <= j12, j23 <= j123");
}

long long cg_phase(long long n1, long long n2, long long j) {
  return n1 * (n1 - 1) / 2 + j * (j + 1) / 2 + n1 * (n1 + n2 + 1);
}

double cg_coefficient(int n1, int n2, int N, int j, const IrrepLabel& r1, const IrrepLabel& r2) {
  validate(r1);
  validate(r2);
  if (n1 < 0 || n2 < 0 || N < 0 || j < 0 || n1 + n2 != N + j)
    throw ParameterError("cg_coefficient: indices must satisfy n1 + n2 = N + j");
  int tot = n1 + n2;
  DualHahnParams dh{r2.mu, r1.mu, tot};
  auto [zs, rhos] = dualhahn_reversed(dh);
  double rho_j = rhos[j];
  double nu0 = dualhahn_ortho(dh).norms[0];
  double rad = mu_factorial(n2, r2.mu) * rho_j /
               (mu_factorial(n1, r1.mu) * mu_factorial(tot, r2.mu) * nu0);
  if (rad < 0) throw ParameterError("cg_coefficient: negative radicand");
  return parity_sign(cg_phase(n1, n2, j)) * parity_sign(r2.eps == -1 ? n1 : 0) *
         std::ldexp(1.0, -n1) * std::sqrt(rad) * dualhahn_eval(n1, zs[j], dh);
}

Eigen::MatrixXd cg_matrix(int total, const IrrepLabel& r1, const IrrepLabel& r2) {
  if (total < 0) throw ParameterError("cg_matrix: total must be nonnegative");
  Eigen::MatrixXd M(total + 1, total + 1);
  for (int n1 = 0; n1 <= total; ++n1)
    for (int j = 0; j <= total; ++j)
      M(n1, j) = cg_coefficient(n1, total - n1, total - j, j, r1, r2);
  return M;
}

long long racah_phase(const ThreeFoldLabels& l) {
  long long j12 = l.j12, j23 = l.j23, j123 = l.j123;
  return j123 * (j12 - 1) * j12 / 2 + (j123 + 1) * (j23 + (j12 + 1) * j12 / 2);
}

BannaiItoParams racah_bi_params(int j123, double mu1, double mu2, double mu3) {
  if (!(mu1 > 0 && mu2 > 0 && mu3 > 0))
    throw ParameterError("racah_bi_params: mu labels must be positive");
  if (j123 < 0) throw ParameterError("racah_bi_params: j123 must be nonnegative");
  double mu123 = mu1 + mu2 + mu3 + 1 + j123;
  double sgn = parity_sign(j123);
  return {(mu2 + mu3) / 2, (mu1 + sgn * mu123) / 2, (mu3 - mu2) / 2, (sgn * mu123 - mu1) / 2};
}

double racah_coefficient(const ThreeFoldLabels& l, double mu1, double mu2, double mu3, int eps3) {
  if (eps3 != 1 && eps3 != -1) throw ParameterError("racah_coefficient: eps3 must be +1 or -1");
  BannaiItoParams bp = racah_bi_params(l.j123, mu1, mu2, mu3);
  OrthoData d = bi_ortho(bp, l.j123);
  double w = d.weights[l.j23];
  double h = d.norms[l.j12];
  return parity_sign(racah_phase(l)) * parity_sign(eps3 == -1 ? l.j12 : 0) * std::sqrt(w / h) *
         bannai_ito_eval(l.j12, d.points[l.j23], bp);
}

TriMatrix xc_matrix(int dim, const IrrepLabel& r, double c) {
  validate(r);
  if (dim < 1) throw ParameterError("xc_matrix: dimension must be at least 1");
  TriMatrix m;
  m.dimension = dim;
  for (int n = 0; n < dim; ++n) m.diagonal.push_back(c * r.eps * parity_sign(n));
  for (int n = 0; n + 1 < dim; ++n) m.superdiagonal.push_back(std::sqrt(mu_number(n + 1, r.mu)));
  return m;
}

std::vector<double> delta_xc_apply(const std::vector<double>& coeffs, int dim1, int dim2,
                                   const IrrepLabel& r1, const IrrepLabel& r2, double c) {
  validate(r1);
  validate(r2);
  if (dim1 < 1 || dim2 < 1 || coeffs.size() != static_cast<size_t>(dim1) * dim2)
    throw ParameterError("delta_xc_apply: coefficient vector must have dim1*dim2 entries");
  std::vector<double> out(coeffs.size(), 0.0);
  auto idx = [dim2](int n1, int n2) { return n1 * dim2 + n2; };
  for (int n1 = 0; n1 < dim1; ++n1) {
    for (int n2 = 0; n2 < dim2; ++n2) {
      double v = coeffs[idx(n1, n2)];
      if (v == 0.0) continue;
      // X_c (x) R: the grading on the second factor contributes eps2*(-1)^n2
      double grade = r2.eps * parity_sign(n2);
      if (n1 > 0) out[idx(n1 - 1, n2)] += v * grade * std::sqrt(mu_number(n1, r1.mu));
      out[idx(n1, n2)] += v * grade * c * r1.eps * parity_sign(n1);
      if (n1 + 1 < dim1) out[idx(n1 + 1, n2)] += v * grade * std::sqrt(mu_number(n1 + 1, r1.mu));
      // 1 (x) X_0: plain tridiagonal action on the second factor
      if (n2 > 0) out[idx(n1, n2 - 1)] += v * std::sqrt(mu_number(n2, r2.mu));
      if (n2 + 1 < dim2) out[idx(n1, n2 + 1)] += v * std::sqrt(mu_number(n2 + 1, r2.mu));
    }
  }
  return out;
}

}  // namespace m1poly
