#pragma once

#include <cmath>
#include <initializer_list>
#include <span>
#include <stdexcept>

namespace m1poly {

// All numerical failures derive from NumericError so callers can map the
// whole family to one exit path without enumerating subtypes.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OverflowError : NumericError {
  using NumericError::NumericError;
};
struct ConvergenceError : NumericError {
  using NumericError::NumericError;
};
struct PoleError : NumericError {
  using NumericError::NumericError;
};
struct DomainError : NumericError {
  using NumericError::NumericError;
};
struct ParameterError : NumericError {
  using NumericError::NumericError;
};

struct SeriesPolicy {
  int max_terms = 500;
  double tail_tol = 1e-16;
};

// (-1)^n from integer parity; never use floating pow for unit signs
constexpr int parity_sign(long long n) { return (n % 2 == 0) ? 1 : -1; }

// n = 2*even_part(n) + odd_part(n), odd_part in {0,1}
constexpr long long even_part(long long n) { return n / 2; }
constexpr int odd_part(long long n) { return static_cast<int>(n % 2); }

// Compensated accumulator (Neumaier variant of Kahan summation).
struct NeumaierSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

// Rising factorial (a)_n = a(a+1)...(a+n-1).
double pochhammer(double a, int n);

// [n] = n + (1-(-1)^n) mu  and its factorial, the building blocks of the
// ladder normalizations used throughout.
double mu_number(int n, double mu);
double mu_factorial(int n, double mu);

// Generalized hypergeometric series sum_k prod(num)_k / prod(den)_k x^k/k!.
// A numerator parameter within 1e-12 of a nonpositive integer makes the
// series terminate (the earliest such index wins); otherwise the sum runs
// until two consecutive terms fall below tail_tol relative to the partial
// sum. A denominator parameter hitting a nonpositive integer before
// termination is a pole.
double hyp_pfq(std::span<const double> num, std::span<const double> den, double x,
               const SeriesPolicy& policy = {});
inline double hyp_pfq(std::initializer_list<double> num, std::initializer_list<double> den,
                      double x, const SeriesPolicy& policy = {}) {
  return hyp_pfq(std::span<const double>(num.begin(), num.size()),
                 std::span<const double>(den.begin(), den.size()), x, policy);
}

// Generalized Laguerre polynomial L_n^(alpha)(x).
double laguerre(int n, double alpha, double x);

// prod Gamma(num_i) / prod Gamma(den_j), evaluated through lgamma with
// explicit sign bookkeeping so mixed-sign arguments stay exact in sign and
// large ratios avoid overflow. Nonpositive-integer arguments are poles.
double gamma_ratio(std::span<const double> num, std::span<const double> den);
inline double gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den) {
  return gamma_ratio(std::span<const double>(num.begin(), num.size()),
                     std::span<const double>(den.begin(), den.size()));
}

}  // namespace m1poly
