#include <cmath>
#include <numbers>

#include "doctest.h"
#include "m1poly/quadrature.hpp"
#include "reference_values.hpp"
#include "test_util.hpp"

using namespace m1poly;

namespace {
double beta_fn(double x, double y) {
  return std::tgamma(x) * std::tgamma(y) / std::tgamma(x + y);
}
}  // namespace

TEST_CASE("gauss_legendre integrates monomials exactly") {
  const QuadRule r = gauss_legendre(8);
  double m0 = 0, m6 = 0;
  for (size_t i = 0; i < r.nodes.size(); ++i) {
    m0 += r.weights[i];
    m6 += r.weights[i] * std::pow(r.nodes[i], 6);
  }
  CHECK(rel_err(m0, 2.0) < 1e-14);
  CHECK(rel_err(m6, 2.0 / 7.0) < 1e-14);
}

TEST_CASE("gauss_jacobi moments against beta-function values") {
  const double a = 0.3, b = -0.4;
  const QuadRule r = gauss_jacobi(12, a, b);
  double m0 = 0, m1 = 0;
  for (size_t i = 0; i < r.nodes.size(); ++i) {
    m0 += r.weights[i];
    m1 += r.weights[i] * r.nodes[i];
  }
  CHECK(rel_err(m0, std::pow(2.0, a + b + 1) * beta_fn(a + 1, b + 1)) < 1e-13);
  // shift x = (1+x) - 1 reduces the first moment to two beta values
  const double want =
      std::pow(2.0, a + b + 2) * beta_fn(a + 1, b + 2) - std::pow(2.0, a + b + 1) * beta_fn(a + 1, b + 1);
  CHECK(rel_err(m1, want) < 1e-13);
  // Chebyshev check: alpha = beta = 1/2 has mass pi/2 and second moment pi/8
  const QuadRule ch = gauss_jacobi(10, 0.5, 0.5);
  double c0 = 0, c2 = 0;
  for (size_t i = 0; i < ch.nodes.size(); ++i) {
    c0 += ch.weights[i];
    c2 += ch.weights[i] * ch.nodes[i] * ch.nodes[i];
  }
  CHECK(rel_err(c0, std::numbers::pi / 2) < 1e-14);
  CHECK(rel_err(c2, std::numbers::pi / 8) < 1e-14);
}

TEST_CASE("gauss_jacobi survives alpha + beta = -1 where the generic recurrence is 0/0") {
  const double a = -0.3, b = -0.7;
  const QuadRule r = gauss_jacobi(10, a, b);
  double m0 = 0, m1 = 0;
  for (size_t i = 0; i < r.nodes.size(); ++i) {
    m0 += r.weights[i];
    m1 += r.weights[i] * r.nodes[i];
  }
  CHECK(rel_err(m0, beta_fn(a + 1, b + 1)) < 1e-13);
  const double want = 2.0 * beta_fn(a + 1, b + 2) - beta_fn(a + 1, b + 1);
  CHECK(rel_err(m1, want) < 1e-13);
}

TEST_CASE("gauss_laguerre moments are gamma values") {
  const double a = 0.7;
  const QuadRule r = gauss_laguerre(10, a);
  double m0 = 0, m1 = 0, m3 = 0;
  for (size_t i = 0; i < r.nodes.size(); ++i) {
    m0 += r.weights[i];
    m1 += r.weights[i] * r.nodes[i];
    m3 += r.weights[i] * std::pow(r.nodes[i], 3);
  }
  CHECK(rel_err(m0, std::tgamma(a + 1)) < 1e-13);
  CHECK(rel_err(m1, std::tgamma(a + 2)) < 1e-13);
  CHECK(rel_err(m3, std::tgamma(a + 4)) < 1e-13);
}

TEST_CASE("rule constructors validate") {
  CHECK_THROWS_AS(gauss_legendre(0), ParameterError);
  CHECK_THROWS_AS(gauss_jacobi(5, -1.0, 0.0), ParameterError);
  CHECK_THROWS_AS(gauss_laguerre(5, -1.5), ParameterError);
  CHECK_THROWS_AS(gauss_legendre(200000), OverflowError);
}

TEST_CASE("integrate: normalized chihara mass on the infinite two-branch domain") {
  const ChiharaParams p{0.5, 0.0};
  const TwoBranchDomain dom{0.0, std::numeric_limits<double>::infinity()};
  const double mass = integrate([&](double x) { return chihara_weight(x, p); }, dom);
  CHECK(rel_err(mass, 1.0) < 1e-12);
  // odd integrand times the even weight cancels between branches
  const double odd =
      integrate([&](double x) { return x * chihara_weight(x, p); }, dom);
  CHECK(std::abs(odd) < 1e-14);
}

TEST_CASE("integrate: big -1 Jacobi mass with smooth exponents") {
  const BigJacobiParams p{1.0, 1.0, 0.0};
  const TwoBranchDomain dom{0.0, 1.0};
  const double mass = integrate([&](double x) { return bigjacobi_weight(x, p); }, dom);
  const double want = bigjacobi_ortho_prefactor(p) * bigjacobi_norm(0, p.a, p.b);
  CHECK(rel_err(mass, want) < 1e-10);
}

TEST_CASE("integrate rejects bad domains and non-finite samples") {
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, TwoBranchDomain{-1.0, 2.0}),
                  ParameterError);
  CHECK_THROWS_AS(integrate([](double) { return 2.0; }, TwoBranchDomain{3.0, 1.0}),
                  ParameterError);
  CHECK_THROWS_AS(
      integrate([](double x) { return 1.0 / (x - x); }, TwoBranchDomain{0.5, 2.0}),
      NumericError);
}

TEST_CASE("chihara_gram is the identity") {
  const Eigen::MatrixXd g = chihara_gram(6, ChiharaParams{0.8, 0.4});
  CHECK((g - Eigen::MatrixXd::Identity(7, 7)).cwiseAbs().maxCoeff() < 1e-12);
  const Eigen::MatrixXd g0 = chihara_gram(0, ChiharaParams{0.5, 0.0});
  CHECK(rel_err(g0(0, 0), 1.0) < 1e-13);
  // negating gamma preserves every even-even entry
  const Eigen::MatrixXd gm = chihara_gram(6, ChiharaParams{0.8, -0.4});
  for (int n = 0; n < 7; n += 2)
    for (int m = 0; m < 7; m += 2) CHECK(std::abs(g(n, m) - gm(n, m)) < 1e-12);
}

TEST_CASE("bigjacobi_gram is diagonal with the closed-form constants") {
  const BigJacobiParams p{0.5, 1.2, 0.3};
  const Eigen::MatrixXd g = bigjacobi_gram(6, p);
  const double pref = bigjacobi_ortho_prefactor(p);
  for (int n = 0; n <= 6; ++n) {
    CHECK(rel_err(g(n, n), pref * refvals::bigjacobi_h_0p5_1p2[n]) < 1e-10);
    for (int m = n + 1; m <= 6; ++m)
      CHECK(std::abs(g(n, m)) < 1e-10 * std::sqrt(g(n, n) * g(m, m)));
  }
  // pinned masses at singular endpoint exponents (a = b = 0.5)
  const Eigen::MatrixXd gs = bigjacobi_gram(1, BigJacobiParams{0.5, 0.5, 0.25});
  CHECK(rel_err(gs(0, 0), refvals::bigjacobi_mass_0) < 1e-11);
  CHECK(rel_err(gs(1, 1), refvals::bigjacobi_mass_1) < 1e-11);
  // negative and zero c branches of the endpoint-exponent selection
  const BigJacobiParams pm{0.5, 1.2, -0.3};
  const Eigen::MatrixXd gm = bigjacobi_gram(4, pm);
  const double prefm = bigjacobi_ortho_prefactor(pm);
  for (int n = 0; n <= 4; ++n) CHECK(rel_err(gm(n, n), prefm * refvals::bigjacobi_h_0p5_1p2[n]) < 1e-10);
  const Eigen::MatrixXd gz = bigjacobi_gram(2, BigJacobiParams{0.7, 1.1, 0.0});
  const double prefz = 1.0;
  CHECK(rel_err(gz(0, 0), prefz * bigjacobi_norm(0, 0.7, 1.1)) < 1e-10);
  CHECK(std::abs(gz(0, 1)) < 1e-10);
}

TEST_CASE("node doubling leaves one-variable gram entries stable") {
  QuadConfig base, doubled;
  doubled.compact_nodes = 2 * base.compact_nodes;
  doubled.tail_nodes = 2 * base.tail_nodes;
  const ChiharaParams cp{0.8, 0.4};
  const Eigen::MatrixXd c1 = chihara_gram(6, cp, base), c2 = chihara_gram(6, cp, doubled);
  CHECK((c1 - c2).cwiseAbs().maxCoeff() < 1e-9);
  const BigJacobiParams bp{0.5, 1.2, 0.3};
  const Eigen::MatrixXd b1 = bigjacobi_gram(6, bp, base), b2 = bigjacobi_gram(6, bp, doubled);
  CHECK((b1 - b2).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("two-variable gram: mass, uncoupled and coupled orthonormality") {
  const IrrepLabel r1{0.6, 1}, r2{0.9, 1};
  const double c = 0.3;
  const Eigen::MatrixXd m0 = twovar_gram(0, c, r1, r2, TwoVarBasis::uncoupled);
  CHECK(rel_err(m0(0, 0), 1.0) < 1e-9);
  const Eigen::MatrixXd gu = twovar_gram(2, c, r1, r2, TwoVarBasis::uncoupled);
  CHECK((gu - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-6);
  const Eigen::MatrixXd gc = twovar_gram(2, c, r1, r2, TwoVarBasis::coupled);
  CHECK((gc - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-6);
  // symmetry is structural
  CHECK((gu - gu.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  for (int i = 0; i < 6; ++i) CHECK(gu(i, i) > 0.0);
  // flipped second grading
  const Eigen::MatrixXd gf = twovar_gram(2, c, r1, IrrepLabel{0.9, -1}, TwoVarBasis::coupled);
  CHECK((gf - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("two-variable inner mass matches the closed-form factorization") {
  const IrrepLabel r1{0.6, 1}, r2{0.9, 1};
  const double c = 0.3;
  for (const double lam2 : {1.7, -2.4}) {
    const double got = twovar_inner_mass(lam2, c, r1, r2);
    const double c2 = -c * r1.eps * r2.eps / lam2;
    const BigJacobiParams bj{2 * r2.mu, 2 * r1.mu, c2};
    const double jac = std::pow(std::abs(lam2), 3) *
                       std::pow(lam2 * lam2 / 2.0, r1.mu + r2.mu - 1.0) *
                       std::exp(-(lam2 * lam2 - c * c) / 2.0) /
                       (4.0 * std::tgamma(r1.mu + 0.5) * std::tgamma(r2.mu + 0.5));
    const double want = jac * bigjacobi_ortho_prefactor(bj) * bigjacobi_norm(0, bj.a, bj.b);
    CHECK(rel_err(got, want) < 1e-7);
  }
}
