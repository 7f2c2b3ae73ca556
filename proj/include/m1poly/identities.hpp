#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "m1poly/coupling.hpp"

namespace m1poly {

// Spectral points restricted to the nested two-branch domains on which the
// convolution identities hold; constructors reject anything outside.
struct SpectralPoint2 {
  double lambda1, lambda2, c;
  SpectralPoint2(double l1, double l2, double c_);
};

struct SpectralPoint3 {
  double lambda1, lambda2, lambda3, c;
  SpectralPoint3(double l1, double l2, double l3, double c_);
};

struct ResidualReport {
  std::map<std::string, double> inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;  // |lhs-rhs| / max(|lhs|, |rhs|, 1e-300)
  double tol = 0.0;
  bool pass = false;
};

ResidualReport make_residual_report(std::map<std::string, double> inputs, double lhs, double rhs,
                                    double tol);

// Proportionality factor between the coupled eigenvector component and the
// product P_N * J_j; K_0 = 1. The odd-j branch carries sign(lambda2) because
// the radicand hides a squared linear factor whose sign the analytic
// coefficient retains.
double k_factor(int j, double lambda2, double mu2, double mu1, double c, int eps1, int eps2);

ResidualReport conv1_residual(int N, int j, const SpectralPoint2& pt, const IrrepLabel& r1,
                              const IrrepLabel& r2, double tol = 1e-9);

ResidualReport conv1_inverse_residual(int n1, int n2, const SpectralPoint2& pt,
                                      const IrrepLabel& r1, const IrrepLabel& r2,
                                      double tol = 1e-9);

double theta_f(const ThreeFoldLabels& labels, int n123, const SpectralPoint3& pt,
               const IrrepLabel& r1, const IrrepLabel& r2, const IrrepLabel& r3);

double theta_g(const ThreeFoldLabels& labels, int n123, const SpectralPoint3& pt,
               const IrrepLabel& r1, const IrrepLabel& r2, const IrrepLabel& r3);

enum class Conv2Direction { forward, inverse };

// forward: theta_f(j12) against the Racah-weighted j23-sum of theta_g;
// inverse: theta_g(j23) against the j12-sum. The common P factor cancels,
// so n123 = 0 is used throughout.
ResidualReport conv2_residual(const ThreeFoldLabels& labels, const SpectralPoint3& pt,
                              const IrrepLabel& r1, const IrrepLabel& r2, const IrrepLabel& r3,
                              Conv2Direction direction, double tol = 1e-8);

enum class GenFunForm { hypergeometric, bessel, partial_sum };

// Generating function sum_n P_n(lambda) z^n / sqrt([n]_mu!). p.gamma plays
// the role of c*eps. The bessel form falls back to the hypergeometric one
// when lambda^2 <= gamma^2 or z = 0, where its rewriting degenerates.
double chihara_genfun(double lambda, double z, const ChiharaParams& p, GenFunForm form,
                      int partial_terms = 80);

// Closed-form realization of the coupled basis vector's polynomial part;
// equals the Clebsch-Gordan expansion sum. Requires z2 != 0.
double coupled_basis_realization(int N, int j, double z1, double z2, const IrrepLabel& r1,
                                 const IrrepLabel& r2);

// Product of two generating functions against its expansion over coupled
// labels, truncated at jmax; inputs["tail_estimate"] records the last
// term's relative size so truncation error is distinguishable from an
// identity failure.
ResidualReport bilinear_genfun_residual(const SpectralPoint2& pt, double z1, double z2,
                                        const IrrepLabel& r1, const IrrepLabel& r2, int jmax = 40,
                                        double tol = 1e-7);

}  // namespace m1poly
