#include <cmath>
#include <vector>

#include "doctest.h"
#include "m1poly/coupling.hpp"
#include "reference_values.hpp"
#include "test_util.hpp"

using namespace m1poly;

TEST_CASE("couple composes the label arithmetic") {
  const CoupledLabel cl = couple(IrrepLabel{0.6, 1}, IrrepLabel{0.9, 1}, 1);
  CHECK(rel_err(cl.mu12, 3.0) < 1e-15);
  CHECK(cl.eps12 == -1);
  CHECK(cl.j == 1);
  const CoupledLabel ev = couple(IrrepLabel{0.6, -1}, IrrepLabel{0.9, 1}, 2);
  CHECK(ev.eps12 == -1);
  CHECK(rel_err(ev.mu12, 4.0) < 1e-15);
}

TEST_CASE("ThreeFoldLabels validates the decomposition range") {
  const ThreeFoldLabels ok(1, 0, 3);
  CHECK(ok.j_12_3 == 2);
  CHECK(ok.j_1_23 == 3);
  CHECK_THROWS_AS(ThreeFoldLabels(4, 0, 3), ParameterError);
  CHECK_THROWS_AS(ThreeFoldLabels(0, -1, 3), ParameterError);
}

TEST_CASE("Clebsch-Gordan matrix against the pinned 4x4 block") {
  const IrrepLabel r1{0.6, 1}, r2{0.9, 1};
  const Eigen::MatrixXd m = cg_matrix(3, r1, r2);
  REQUIRE(m.rows() == 4);
  for (int n1 = 0; n1 < 4; ++n1)
    for (int j = 0; j < 4; ++j)
      CHECK(rel_err(m(n1, j), refvals::cg_total3_mu1_3_5_mu2_9_10[4 * n1 + j]) < 1e-12);
  // orthogonality across both index directions
  const Eigen::MatrixXd gtg = m.transpose() * m - Eigen::MatrixXd::Identity(4, 4);
  CHECK(gtg.cwiseAbs().maxCoeff() < 1e-12);
  CHECK(rel_err(cg_coefficient(1, 2, 2, 1, r1, r2), m(1, 1)) < 1e-14);
}

TEST_CASE("Racah matrix against the pinned 3x3 block") {
  Eigen::MatrixXd m(3, 3);
  for (int j12 = 0; j12 < 3; ++j12)
    for (int j23 = 0; j23 < 3; ++j23)
      m(j12, j23) = racah_coefficient(ThreeFoldLabels(j12, j23, 2), 0.6, 0.9, 1.3, 1);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(rel_err(m(a, b), refvals::racah_j123_2_mu_6_9_13[3 * a + b]) < 1e-12);
  const Eigen::MatrixXd gtg = m.transpose() * m - Eigen::MatrixXd::Identity(3, 3);
  CHECK(gtg.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("xc_matrix entries") {
  const TriMatrix m = xc_matrix(3, IrrepLabel{0.7, -1}, 0.4);
  CHECK(m.dimension == 3);
  CHECK(m.diagonal[0] == -0.4);
  CHECK(m.diagonal[1] == 0.4);
  CHECK(m.diagonal[2] == -0.4);
  CHECK(rel_err(m.superdiagonal[0], std::sqrt(1.0 + 2 * 0.7)) < 1e-15);
  CHECK(rel_err(m.superdiagonal[1], std::sqrt(2.0)) < 1e-15);
}

// The coupled vectors assembled from Clebsch-Gordan columns must carry the
// coproduct operator as a tridiagonal ladder in N that never mixes different
// j. Projections of the applied vector onto neighboring coupled vectors give
// sqrt([N]_mu12) and sqrt([N+1]_mu12) up to the column sign conventions, and
// the same-total projection gives c*eps12*(-1)^N exactly.
TEST_CASE("delta_xc_apply is j-diagonal on coupled vectors") {
  const IrrepLabel r1{0.6, 1}, r2{0.9, 1};
  const double c = 0.35;
  const int N = 2, j = 1, total = N + j;
  const int dim = 6;  // totals up to 4 stay away from the truncation boundary

  auto embed = [&](const Eigen::MatrixXd& cgm, int tot, int col) {
    std::vector<double> v(dim * dim, 0.0);
    for (int n1 = 0; n1 <= tot; ++n1) v[n1 * dim + (tot - n1)] = cgm(n1, col);
    return v;
  };
  auto dot = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };

  const Eigen::MatrixXd cg_t = cg_matrix(total, r1, r2);
  const std::vector<double> v = embed(cg_t, total, j);
  const std::vector<double> w = delta_xc_apply(v, dim, dim, r1, r2, c);

  const CoupledLabel cl = couple(r1, r2, j);
  // same-total projections: diagonal in j with the exact c-coefficient
  for (int jp = 0; jp <= total; ++jp) {
    const double coef = dot(embed(cg_t, total, jp), w);
    if (jp == j)
      CHECK(rel_err(coef, c * cl.eps12 * parity_sign(N)) < 1e-12);
    else
      CHECK(std::abs(coef) < 1e-12);
  }
  // neighboring totals: only the matching j column survives
  for (int tot : {total - 1, total + 1}) {
    const Eigen::MatrixXd cg_n = cg_matrix(tot, r1, r2);
    for (int jp = 0; jp <= tot; ++jp) {
      const double coef = dot(embed(cg_n, tot, jp), w);
      if (jp == j) {
        const int Np = tot - jp;
        const double want = std::sqrt(mu_number(std::max(N, Np), cl.mu12));
        CHECK(rel_err(std::abs(coef), want) < 1e-12);
      } else {
        CHECK(std::abs(coef) < 1e-12);
      }
    }
  }
}

TEST_CASE("delta_xc_apply validates its inputs") {
  CHECK_THROWS_AS(delta_xc_apply(std::vector<double>(5, 0.0), 2, 2, IrrepLabel{0.6, 1},
                                 IrrepLabel{0.9, 1}, 0.1),
                  ParameterError);
  CHECK_THROWS_AS(xc_matrix(2, IrrepLabel{-0.5, 1}, 0.1), ParameterError);
  CHECK_THROWS_AS(xc_matrix(2, IrrepLabel{0.5, 2}, 0.1), ParameterError);
}
