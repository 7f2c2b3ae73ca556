#include "m1poly/numerics.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace m1poly {

namespace {

constexpr double kIntegerSnapTol = 1e-12;

// If a is within snapping distance of a nonpositive integer, return that
// integer's absolute value through *index and report true.
bool near_nonpositive_integer(double a, long long* index) {
  double r = std::round(a);
  if (r > 0.5 || std::abs(a - r) > kIntegerSnapTol) return false;
  *index = static_cast<long long>(-r);
  return true;
}

int gamma_sign(double x) {
  if (x > 0.0) return 1;
  return parity_sign(static_cast<long long>(std::floor(x)));
}

}  // namespace

double pochhammer(double a, int n) {
  if (n < 0) throw ParameterError("pochhammer: order must be nonnegative, got " + std::to_string(n));
  double prod = 1.0;
  for (int k = 0; k < n; ++k) {
    prod *= a + k;
    if (!std::isfinite(prod))
      throw OverflowError("pochhammer overflow at factor index " + std::to_string(k));
  }
  return prod;
}

double mu_number(int n, double mu) {
  if (n < 0) throw ParameterError("mu_number: index must be nonnegative");
  return n + (odd_part(n) ? 2.0 * mu : 0.0);
}

double mu_factorial(int n, double mu) {
  if (n < 0) throw ParameterError("mu_factorial: index must be nonnegative");
  double prod = 1.0;
  for (int k = 1; k <= n; ++k) {
    prod *= mu_number(k, mu);
    if (!std::isfinite(prod))
      throw OverflowError("mu_factorial overflow at index " + std::to_string(k));
  }
  return prod;
}

double hyp_pfq(std::span<const double> num, std::span<const double> den, double x,
               const SeriesPolicy& policy) {
  // Terminating series: earliest nonpositive-integer numerator wins.
  long long terminate_at = -1;
  for (double a : num) {
    long long m;
    if (near_nonpositive_integer(a, &m)) {
      if (terminate_at < 0 || m < terminate_at) terminate_at = m;
    }
  }
  // Denominator poles only matter if the series is still running when the
  // zero factor would be divided out: the ratio step k -> k+1 divides by
  // (b + k), so a pole at index kp is hit iff kp <= last summed index - 1.
  for (double b : den) {
    long long kp;
    if (near_nonpositive_integer(b, &kp)) {
      if (terminate_at < 0 || kp < terminate_at)
        throw PoleError("hyp_pfq: denominator parameter " + std::to_string(b) +
                        " hits a pole before the series terminates");
    }
  }

  NeumaierSum acc;
  double term = 1.0;
  acc.add(term);
  int quiet = 0;
  long long kmax = (terminate_at >= 0) ? terminate_at : policy.max_terms;
  for (long long k = 0; k < kmax; ++k) {
    double ratio = 1.0;
    for (double a : num) ratio *= a + k;
    for (double b : den) ratio /= b + k;
    term *= ratio * x / (k + 1);
    if (!std::isfinite(term))
      throw OverflowError("hyp_pfq overflow at term " + std::to_string(k + 1));
    acc.add(term);
    if (terminate_at < 0) {
      if (std::abs(term) <= policy.tail_tol * std::max(1.0, std::abs(acc.value())))
        ++quiet;
      else
        quiet = 0;
      if (quiet >= 2) return acc.value();
    }
  }
  if (terminate_at < 0)
    throw ConvergenceError("hyp_pfq: no convergence within " +
                           std::to_string(policy.max_terms) + " terms");
  return acc.value();
}

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw ParameterError("laguerre: degree must be nonnegative");
  if (n == 0) return 1.0;
  double lm = 1.0;
  double l = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    double lp = ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm) / (k + 1.0);
    lm = l;
    l = lp;
  }
  return l;
}

double gamma_ratio(std::span<const double> num, std::span<const double> den) {
  double logsum = 0.0;
  int sign = 1;
  for (double x : num) {
    long long idx;
    if (near_nonpositive_integer(x, &idx))
      throw PoleError("gamma_ratio: numerator argument " + std::to_string(x) +
                      " is a pole of Gamma");
    logsum += std::lgamma(x);
    sign *= gamma_sign(x);
  }
  for (double x : den) {
    long long idx;
    if (near_nonpositive_integer(x, &idx)) return 0.0;  // 1/Gamma vanishes there
    logsum -= std::lgamma(x);
    sign *= gamma_sign(x);
  }
  double r = sign * std::exp(logsum);
  if (!std::isfinite(r)) throw OverflowError("gamma_ratio overflow");
  return r;
}

}  // namespace m1poly
