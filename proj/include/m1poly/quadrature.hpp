#pragma once

#include <Eigen/Dense>
#include <functional>
#include <limits>
#include <vector>

#include "m1poly/coupling.hpp"
#include "m1poly/families.hpp"

namespace m1poly {

// Symmetric two-branch support (-outer, -inner) u (inner, outer).
struct TwoBranchDomain {
  double inner = 0.0;
  double outer = std::numeric_limits<double>::infinity();
};

struct QuadConfig {
  int compact_nodes = 96;  // Gauss-Legendre per branch segment
  int tail_nodes = 64;     // Gauss-Laguerre, infinite outer bound only
  int subdivisions = 4;
};

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Classical rules via the Golub-Welsch eigenproblem.
QuadRule gauss_legendre(int n);                           // weight 1 on (-1, 1)
QuadRule gauss_jacobi(int n, double alpha, double beta);  // (1-x)^alpha (1+x)^beta on (-1, 1)
QuadRule gauss_laguerre(int n, double alpha);             // x^alpha e^{-x} on (0, inf)

// Sum of the two branch integrals of f. A finite outer bound uses subdivided
// Gauss-Legendre panels; an infinite one substitutes t = (x^2 - inner^2)/2 so
// the weight's e^{-t} factor is Gauss-Laguerre-native.
double integrate(const std::function<double(double)>& f, const TwoBranchDomain& dom,
                 const QuadConfig& cfg = {});

// G_nm = integral of P_n P_m W over |lambda| > |gamma|; approximately the
// identity in the orthonormal convention.
Eigen::MatrixXd chihara_gram(int nmax, const ChiharaParams& p, const QuadConfig& cfg = {});

// G_nm ~ delta_nm * bigjacobi_ortho_prefactor(p) * h_n(a, b); needs |c| < 1.
Eigen::MatrixXd bigjacobi_gram(int nmax, const BigJacobiParams& p, const QuadConfig& cfg = {});

enum class TwoVarBasis { coupled, uncoupled };

// Gram matrix over the region |c| < |lambda1| < |lambda2| with measure
// W(lambda1; mu1, c eps1) W(lambda2; mu2, lambda1 eps2), iterated with the
// inner integral on lambda1. Both bases are indexed by total degree
// (n1 + n2, or N + j) up to total_degree and come out close to the identity.
Eigen::MatrixXd twovar_gram(int total_degree, double c, const IrrepLabel& r1,
                            const IrrepLabel& r2, TwoVarBasis basis, const QuadConfig& cfg = {});

// Inner lambda1-integral of the two-variable measure at fixed lambda2,
// evaluated through the substitution u = eps2 lambda1 / lambda2. Matches
// the closed-form one-variable mass times the measure jacobian.
double twovar_inner_mass(double lambda2, double c, const IrrepLabel& r1, const IrrepLabel& r2,
                         const QuadConfig& cfg = {});

}  // namespace m1poly
