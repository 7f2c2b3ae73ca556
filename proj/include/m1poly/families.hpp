#pragma once

#include <utility>
#include <vector>

#include "m1poly/numerics.hpp"

namespace m1poly {

enum class EvalMethod { recurrence, closed };

// sign(0) = 0; the only sign convention used anywhere in the library
constexpr double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

struct ChiharaParams {
  double mu;  // mu > -1/2
  double gamma;
};

struct BigJacobiParams {
  double a;  // a > -1
  double b;  // b > -1
  double c;  // |c| != 1; orthogonality additionally needs |c| < 1
};

struct DualHahnParams {
  double eta;
  double xi;
  int N;  // grid size N+1; weights must come out nonnegative
};

struct BannaiItoParams {
  double rho1, rho2, r1, r2;
  double g() const { return rho1 + rho2 - r1 - r2; }
};

// Grid, weights and squared norms of a finite discrete orthogonality
// relation; all three arrays have length N+1. Immutable after construction.
struct OrthoData {
  std::vector<double> points;
  std::vector<double> weights;
  std::vector<double> norms;
  int N = 0;
};

// --- specialized Chihara polynomials, orthonormal normalization ---

double chihara_eval(int n, double lambda, const ChiharaParams& p,
                    EvalMethod method = EvalMethod::recurrence);

// Weight on the two-branch support |lambda| > |gamma|; the normalized flag
// divides by the total mass 2*Gamma(mu+1/2).
double chihara_weight(double lambda, const ChiharaParams& p, bool normalized = true);

// --- big -1 Jacobi polynomials, J_0 = 1 normalization ---

double bigjacobi_eval(int n, double x, const BigJacobiParams& p,
                      EvalMethod method = EvalMethod::recurrence);

// Weight on |c| < |x| < 1 (two branches).
double bigjacobi_weight(double x, const BigJacobiParams& p);

// Norm factor h_n(a,b); the full orthogonality constant is
// bigjacobi_ortho_prefactor(p) * h_n.
double bigjacobi_norm(int n, double a, double b);
double bigjacobi_ortho_prefactor(const BigJacobiParams& p);

// --- dual -1 Hahn polynomials, monic ---

double dualhahn_eval(int n, double x, const DualHahnParams& p,
                     EvalMethod method = EvalMethod::recurrence);

// Grid y_s, weights, and squared norms of the (N+1)-point orthogonality.
OrthoData dualhahn_ortho(const DualHahnParams& p);

// Reversed grid z_s with matching weights: the indexing permutation flips
// for even N only.
std::pair<std::vector<double>, std::vector<double>> dualhahn_reversed(const DualHahnParams& p);

// --- Bannai-Ito polynomials, monic ---

// (A_n, C_n) of x B_n = B_{n+1} + (rho1 - A_n - C_n) B_n + A_{n-1} C_n B_{n-1}.
std::pair<double, double> bi_recurrence_coeffs(int n, const BannaiItoParams& p);

double bannai_ito_eval(int n, double x, const BannaiItoParams& p,
                       EvalMethod method = EvalMethod::recurrence);

// Parameter conditions under which the recurrence truncates after N+1
// polynomials. Only even_r2_rho1 (N even) and odd_rho_sum (N odd) admit the
// closed weight/norm formulas used by bi_ortho.
enum class BiTruncation {
  even_r_minus_rho,  // some r_j - rho_l = (N+1)/2, N even
  odd_rho_sum,       // rho1 + rho2 = -(N+1)/2, N odd
  odd_r_sum,         // r1 + r2 = (N+1)/2, N odd
  odd_g_value,       // g = -(N+1)/2, N odd
};
BiTruncation bi_truncation(const BannaiItoParams& p, int N);

OrthoData bi_ortho(const BannaiItoParams& p, int N);

}  // namespace m1poly
