#include <cmath>
#include <vector>

#include "doctest.h"
#include "m1poly/numerics.hpp"
#include "reference_values.hpp"
#include "test_util.hpp"

using namespace m1poly;

TEST_CASE("parity helpers") {
  CHECK(parity_sign(0) == 1);
  CHECK(parity_sign(7) == -1);
  CHECK(parity_sign(12) == 1);
  for (long long n : {0LL, 1LL, 2LL, 9LL, 40LL}) CHECK(2 * even_part(n) + odd_part(n) == n);
}

TEST_CASE("NeumaierSum keeps small addends against a large cancelling pair") {
  NeumaierSum s;
  s.add(1.0);
  s.add(1e100);
  s.add(1.0);
  s.add(-1e100);
  CHECK(s.value() == 2.0);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(2.5, 0) == 1.0);
  CHECK(pochhammer(2.0, 3) == doctest::Approx(24.0).epsilon(1e-15));
  CHECK(pochhammer(-1.5, 2) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK_THROWS_AS(pochhammer(1.0, -1), ParameterError);
}

TEST_CASE("mu-number ladder") {
  const double mu = 0.35;
  CHECK(mu_number(0, mu) == 0.0);
  CHECK(mu_number(1, mu) == doctest::Approx(1.0 + 2 * mu).epsilon(1e-15));
  CHECK(mu_number(2, mu) == 2.0);
  CHECK(mu_number(3, mu) == doctest::Approx(3.0 + 2 * mu).epsilon(1e-15));
  double prod = 1.0;
  for (int k = 1; k <= 6; ++k) {
    prod *= mu_number(k, mu);
    CHECK(rel_err(mu_factorial(k, mu), prod) < 1e-15);
  }
  CHECK(mu_factorial(0, mu) == 1.0);
}

TEST_CASE("hypergeometric series against exact rational sums") {
  CHECK(rel_err(hyp_pfq({-2.0, 1.0, 1.0}, {2.0, 2.0}, 1.0), refvals::pfq_3f2_m2_1_1__2_2__1) <
        1e-14);
  CHECK(rel_err(hyp_pfq({-3.0, 0.5}, {1.0 / 3.0}, 0.4), refvals::pfq_2f1_m3_half__third__2_5) <
        1e-14);
  CHECK(rel_err(hyp_pfq({-4.0, 7.0 / 3.0, 0.2, -2.25}, {0.5, 5.0 / 3.0, 11.0 / 7.0}, 1.0),
                refvals::pfq_4f3_at_1) < 1e-14);
}

TEST_CASE("hypergeometric series, non-terminating cases") {
  // 0F0 is exp
  CHECK(rel_err(hyp_pfq({}, {}, 0.3), std::exp(0.3)) < 1e-14);
  // 1F1(1;2;x) = (e^x - 1)/x
  CHECK(rel_err(hyp_pfq({1.0}, {2.0}, 0.9), (std::exp(0.9) - 1.0) / 0.9) < 1e-14);
}

TEST_CASE("hypergeometric pole handling depends on the termination index") {
  // terminates at k=2 before the denominator -3 is reached at k=4
  CHECK(std::isfinite(hyp_pfq({-2.0, 1.0}, {-3.0}, 0.7)));
  // denominator -1 hits at k=2 before the numerator -5 terminates at k=6
  CHECK_THROWS_AS(hyp_pfq({-5.0, 1.0}, {-1.0}, 0.7), PoleError);
  // non-terminating series with a nonpositive denominator is always a pole
  CHECK_THROWS_AS(hyp_pfq({0.5}, {-2.0}, 0.1), PoleError);
}

TEST_CASE("hypergeometric divergence is reported, not returned") {
  SeriesPolicy tight;
  tight.max_terms = 40;
  CHECK_THROWS_AS(hyp_pfq({3.0, 2.0}, {1.5}, 1.5, tight), ConvergenceError);
}

TEST_CASE("laguerre against exact rational values") {
  CHECK(rel_err(laguerre(2, 0.0, 1.0), refvals::laguerre_2_0_1) < 1e-14);
  CHECK(rel_err(laguerre(3, 1.5, 1.75), refvals::laguerre_3_3half_7quarter) < 1e-14);
  CHECK(rel_err(laguerre(5, 0.3, 0.9), refvals::laguerre_5_a3_10_x9_10) < 1e-13);
  CHECK(laguerre(0, 0.7, 3.0) == 1.0);
}

TEST_CASE("gamma_ratio") {
  CHECK(rel_err(gamma_ratio({5.0}, {3.0}), 12.0) < 1e-14);
  // sign bookkeeping through a negative argument: Gamma(-0.5) = -2 sqrt(pi)
  CHECK(rel_err(gamma_ratio({-0.5}, {0.5}), -2.0) < 1e-14);
  // numerator pole
  CHECK_THROWS_AS(gamma_ratio({-2.0}, {1.0}), PoleError);
  // denominator pole kills the ratio
  CHECK(gamma_ratio({1.0}, {-3.0}) == 0.0);
  // balanced huge arguments stay finite through lgamma
  CHECK(rel_err(gamma_ratio({400.25}, {400.25}), 1.0) < 1e-13);
}
