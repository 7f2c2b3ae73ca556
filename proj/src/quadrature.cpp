#include "m1poly/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "m1poly/identities.hpp"

namespace m1poly {

namespace {

void check_node_count(int n) {
  if (n < 1) throw ParameterError("quadrature rule needs at least one node");
  if (n > 100000) throw OverflowError("node-count overflow: " + std::to_string(n));
}

QuadRule from_tridiagonal(const Eigen::VectorXd& diag, const Eigen::VectorXd& sub, double mu0) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw NumericError("quadrature eigensolve failed");
  const int n = static_cast<int>(diag.size());
  QuadRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = es.eigenvalues()(i);
    const double v = es.eigenvectors()(0, i);
    r.weights[i] = mu0 * v * v;
  }
  return r;
}

}  // namespace

QuadRule gauss_legendre(int n) {
  check_node_count(n);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  for (int k = 1; k < n; ++k) sub(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
  return from_tridiagonal(diag, sub, 2.0);
}

QuadRule gauss_jacobi(int n, double alpha, double beta) {
  check_node_count(n);
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw ParameterError("gauss_jacobi needs alpha, beta > -1");
  const double s = alpha + beta;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  diag(0) = (beta - alpha) / (s + 2.0);
  for (int k = 1; k < n; ++k) {
    const double d = 2.0 * k + s;
    diag(k) = (beta * beta - alpha * alpha) / (d * (d + 2.0));
    // k = 1 separately: the generic form has an exact 0/0 at alpha+beta = -1
    const double b2 = (k == 1)
        ? 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + s) * (2.0 + s) * (3.0 + s))
        : 4.0 * k * (k + alpha) * (k + beta) * (k + s) / (d * d * (d + 1.0) * (d - 1.0));
    sub(k - 1) = std::sqrt(b2);
  }
  const double mu0 =
      std::pow(2.0, s + 1.0) * std::tgamma(alpha + 1.0) * std::tgamma(beta + 1.0) /
      std::tgamma(s + 2.0);
  return from_tridiagonal(diag, sub, mu0);
}

QuadRule gauss_laguerre(int n, double alpha) {
  check_node_count(n);
  if (!(alpha > -1.0)) throw ParameterError("gauss_laguerre needs alpha > -1");
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) diag(k) = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < n; ++k) sub(k - 1) = std::sqrt(k * (k + alpha));
  return from_tridiagonal(diag, sub, std::tgamma(alpha + 1.0));
}

double integrate(const std::function<double(double)>& f, const TwoBranchDomain& dom,
                 const QuadConfig& cfg) {
  if (!(dom.inner >= 0.0)) throw ParameterError("two-branch domain needs inner >= 0");
  if (!(dom.inner < dom.outer)) throw ParameterError("two-branch domain needs inner < outer");
  if (cfg.subdivisions < 1) throw ParameterError("subdivisions must be positive");
  check_node_count(cfg.compact_nodes);
  check_node_count(cfg.tail_nodes);

  auto sample = [&f](double x) {
    const double v = f(x);
    if (!std::isfinite(v))
      throw NumericError("non-finite integrand sample at x = " + std::to_string(x));
    return v;
  };

  NeumaierSum total;
  if (std::isfinite(dom.outer)) {
    const QuadRule leg = gauss_legendre(cfg.compact_nodes);
    const double width = (dom.outer - dom.inner) / cfg.subdivisions;
    for (int branch : {1, -1})
      for (int p = 0; p < cfg.subdivisions; ++p) {
        const double half = width / 2.0;
        const double mid = dom.inner + p * width + half;
        for (std::size_t i = 0; i < leg.nodes.size(); ++i)
          total.add(half * leg.weights[i] * sample(branch * (mid + half * leg.nodes[i])));
      }
  } else {
    const QuadRule lag = gauss_laguerre(cfg.tail_nodes, 0.0);
    for (int branch : {1, -1})
      for (std::size_t i = 0; i < lag.nodes.size(); ++i) {
        const double t = lag.nodes[i];
        const double x = std::sqrt(dom.inner * dom.inner + 2.0 * t);
        // e^{+t} undoes the Laguerre weight; the integrand supplies its own decay
        total.add(std::exp(t + std::log(lag.weights[i])) * sample(branch * x) / x);
      }
  }
  return total.value();
}

Eigen::MatrixXd chihara_gram(int nmax, const ChiharaParams& p, const QuadConfig& cfg) {
  if (nmax < 0) throw ParameterError("chihara_gram needs nmax >= 0");
  if (!(p.mu > -0.5)) throw ParameterError("chihara weight needs mu > -1/2");
  check_node_count(cfg.tail_nodes);

  // Substituting t = (lambda^2 - gamma^2)/2 per branch turns the weight into
  // the Gauss-Laguerre measure t^{mu-1/2} e^{-t}, and the symmetrized branch
  // combination of P_n P_m is a polynomial in t, so the rule is exact once
  // the node count clears the degree.
  const int nn = std::max(cfg.tail_nodes, nmax + 2);
  const QuadRule rule = gauss_laguerre(nn, p.mu - 0.5);
  const double norm = 2.0 * std::tgamma(p.mu + 0.5);

  const int dim = nmax + 1;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::VectorXd vp(dim), vm(dim);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = rule.nodes[i];
    const double lam = std::sqrt(p.gamma * p.gamma + 2.0 * t);
    for (int n = 0; n < dim; ++n) {
      vp(n) = chihara_eval(n, lam, p);
      vm(n) = chihara_eval(n, -lam, p);
    }
    const double w = rule.weights[i] / norm;
    g.noalias() += (w * (1.0 + p.gamma / lam)) * vp * vp.transpose();
    g.noalias() += (w * (1.0 - p.gamma / lam)) * vm * vm.transpose();
  }
  return g;
}

namespace {

// Two-branch scheme for integrals against the big -1 Jacobi weight on
// |c| < |x| < 1. Endpoint exponents of the absorbed Jacobi rules depend only
// on sign(c), so one rule pair serves every |c| through affine rescaling.
class TwoBranchJacobiRule {
 public:
  TwoBranchJacobiRule(double a, double b, double sign_c, int nodes) : a_(a), b_(b), sc_(sign_c) {
    if (!(a > -1.0) || !(b > -1.0)) throw ParameterError("bigjacobi weight needs a, b > -1");
    ap_ = (a - 1.0) / 2.0;
    am_ = (a + 1.0) / 2.0;
    bp_ = sc_ > 0 ? (b + 1.0) / 2.0 : (sc_ < 0 ? (b - 1.0) / 2.0 : b);
    bm_ = sc_ > 0 ? (b - 1.0) / 2.0 : (sc_ < 0 ? (b + 1.0) / 2.0 : b);
    plus_ = gauss_jacobi(nodes, ap_, bp_);
    minus_ = gauss_jacobi(nodes, am_, bm_);
  }

  // Calls emit(x, w) so that sum of w f(x) approximates the weighted integral.
  template <typename F>
  void run(double q, F&& emit) const {
    const double m = (1.0 + q) / 2.0;
    const double h = (1.0 - q) / 2.0;
    const double scale_p = std::pow(h, ap_ + bp_ + 1.0);
    const double scale_m = std::pow(h, am_ + bm_ + 1.0);
    for (std::size_t i = 0; i < plus_.nodes.size(); ++i) {
      const double x = m + h * plus_.nodes[i];
      emit(x, scale_p * plus_.weights[i] * smooth_plus(x, q));
    }
    for (std::size_t i = 0; i < minus_.nodes.size(); ++i) {
      const double v = m + h * minus_.nodes[i];
      emit(-v, scale_m * minus_.weights[i] * smooth_minus(v, q));
    }
  }

 private:
  // Weight factors not absorbed into the rule; smooth on the closed branch.
  double smooth_plus(double x, double q) const {
    double s = std::pow(1.0 + x, (a_ + 1.0) / 2.0);
    if (sc_ > 0) s *= std::pow(x + q, (b_ - 1.0) / 2.0);
    if (sc_ < 0) s *= std::pow(x + q, (b_ + 1.0) / 2.0);
    return s;
  }
  double smooth_minus(double v, double q) const {
    double s = std::pow(1.0 + v, (a_ - 1.0) / 2.0);
    if (sc_ > 0) s *= std::pow(v + q, (b_ + 1.0) / 2.0);
    if (sc_ < 0) s *= std::pow(v + q, (b_ - 1.0) / 2.0);
    return s;
  }

  double a_, b_, sc_;
  double ap_, bp_, am_, bm_;
  QuadRule plus_, minus_;
};

void check_irrep(const IrrepLabel& r) {
  if (!(r.mu > 0.0)) throw ParameterError("irrep label needs mu > 0");
  if (r.eps != 1 && r.eps != -1) throw ParameterError("irrep label needs eps = +1 or -1");
}

}  // namespace

Eigen::MatrixXd bigjacobi_gram(int nmax, const BigJacobiParams& p, const QuadConfig& cfg) {
  if (nmax < 0) throw ParameterError("bigjacobi_gram needs nmax >= 0");
  if (!(std::abs(p.c) < 1.0)) throw ParameterError("bigjacobi orthogonality needs |c| < 1");
  check_node_count(cfg.compact_nodes);

  const int nn = std::max(cfg.compact_nodes, nmax + 2);
  const TwoBranchJacobiRule rule(p.a, p.b, sign_of(p.c), nn);
  const int dim = nmax + 1;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::VectorXd v(dim);
  rule.run(std::abs(p.c), [&](double x, double w) {
    for (int n = 0; n < dim; ++n) v(n) = bigjacobi_eval(n, x, p);
    g.noalias() += w * v * v.transpose();
  });
  return g;
}

Eigen::MatrixXd twovar_gram(int total_degree, double c, const IrrepLabel& r1,
                            const IrrepLabel& r2, TwoVarBasis basis, const QuadConfig& cfg) {
  if (total_degree < 0) throw ParameterError("twovar_gram needs total_degree >= 0");
  if (!std::isfinite(c)) throw ParameterError("twovar_gram needs finite c");
  check_irrep(r1);
  check_irrep(r2);
  if (cfg.subdivisions < 1) throw ParameterError("subdivisions must be positive");
  check_node_count(cfg.compact_nodes);

  const int d = total_degree;
  const int dim = (d + 1) * (d + 2) / 2;
  // uncoupled rows are (n1, n2), coupled rows are (N, j); both by total degree
  std::vector<std::pair<int, int>> idx;
  idx.reserve(dim);
  for (int tot = 0; tot <= d; ++tot)
    for (int k = 0; k <= tot; ++k)
      idx.push_back(basis == TwoVarBasis::uncoupled ? std::pair<int, int>{k, tot - k}
                                                    : std::pair<int, int>{tot - k, k});

  // Inner rules cached by sign of the rescaled parameter c2 = -c eps1 eps2 / lambda2.
  std::optional<TwoBranchJacobiRule> rules[3];
  auto inner_rule = [&](double sc) -> const TwoBranchJacobiRule& {
    const int slot = sc > 0 ? 0 : (sc < 0 ? 1 : 2);
    if (!rules[slot]) rules[slot].emplace(2.0 * r2.mu, 2.0 * r1.mu, sc, cfg.compact_nodes);
    return *rules[slot];
  };

  // Outer nodes on t = (lambda2^2 - c^2)/2. Geometric panels crowd toward
  // t = 0 where (c^2 + 2t)^{mu1+mu2-1} loses analyticity; at c == 0 exactly
  // the first panel absorbs the resulting t^{mu1+mu2} into a Jacobi rule.
  const double T = 72.0;
  const double gg = 4.0 * std::tgamma(r1.mu + 0.5) * std::tgamma(r2.mu + 0.5);
  auto measure_pre = [&](double t) {
    const double s2 = c * c + 2.0 * t;
    return std::exp(-t) * s2 * std::pow(s2 / 2.0, r1.mu + r2.mu - 1.0) / gg;
  };
  std::vector<std::pair<double, double>> outer;  // (t, weight including measure_pre)
  std::vector<double> bounds{0.0};
  for (int k = cfg.subdivisions; k >= 0; --k) bounds.push_back(T * std::pow(8.0, -k));
  const QuadRule leg = gauss_legendre(cfg.compact_nodes);
  for (std::size_t pnl = 0; pnl + 1 < bounds.size(); ++pnl) {
    const double lo = bounds[pnl], hi = bounds[pnl + 1];
    if (pnl == 0 && c == 0.0) {
      const double beta = r1.mu + r2.mu;
      const QuadRule gj = gauss_jacobi(cfg.compact_nodes, 0.0, beta);
      const double scale = std::pow(hi / 2.0, beta + 1.0) * 2.0 / gg;
      for (std::size_t i = 0; i < gj.nodes.size(); ++i) {
        const double t = hi / 2.0 * (1.0 + gj.nodes[i]);
        outer.emplace_back(t, scale * gj.weights[i] * std::exp(-t));
      }
      continue;
    }
    const double half = (hi - lo) / 2.0;
    for (std::size_t i = 0; i < leg.nodes.size(); ++i) {
      const double t = lo + half * (1.0 + leg.nodes[i]);
      outer.emplace_back(t, half * leg.weights[i] * measure_pre(t));
    }
  }

  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::VectorXd v(dim);
  std::vector<double> kf(d + 1);
  std::vector<ChiharaParams> coupled_p(d + 1);
  const ChiharaParams p1{r1.mu, c * r1.eps};
  for (const auto& [t, wt] : outer) {
    const double lam2p = std::sqrt(c * c + 2.0 * t);
    for (int sg : {1, -1}) {
      const double lam2 = sg * lam2p;
      const double c2 = c == 0.0 ? 0.0 : -c * r1.eps * r2.eps / lam2;
      const BigJacobiParams bjp{2.0 * r2.mu, 2.0 * r1.mu, c2};
      if (basis == TwoVarBasis::coupled)
        for (int j = 0; j <= d; ++j) {
          kf[j] = k_factor(j, lam2, r2.mu, r1.mu, c, r1.eps, r2.eps);
          const CoupledLabel cl = couple(r1, r2, j);
          coupled_p[j] = ChiharaParams{cl.mu12, c * cl.eps12};
        }
      inner_rule(sign_of(c2)).run(std::abs(c2), [&](double u, double wu) {
        const double lam1 = r2.eps * u * lam2;
        if (basis == TwoVarBasis::uncoupled) {
          const ChiharaParams p2{r2.mu, lam1 * r2.eps};
          for (int i = 0; i < dim; ++i)
            v(i) = chihara_eval(idx[i].first, lam1, p1) * chihara_eval(idx[i].second, lam2, p2);
        } else {
          for (int i = 0; i < dim; ++i)
            v(i) = kf[idx[i].second] * bigjacobi_eval(idx[i].second, u, bjp) *
                   chihara_eval(idx[i].first, lam2, coupled_p[idx[i].second]);
        }
        g.noalias() += (wt * wu) * v * v.transpose();
      });
    }
  }
  return g;
}

double twovar_inner_mass(double lambda2, double c, const IrrepLabel& r1, const IrrepLabel& r2,
                         const QuadConfig& cfg) {
  check_irrep(r1);
  check_irrep(r2);
  if (!(std::abs(lambda2) > std::abs(c)))
    throw ParameterError("twovar inner integral needs |lambda2| > |c|");
  check_node_count(cfg.compact_nodes);

  const double c2 = c == 0.0 ? 0.0 : -c * r1.eps * r2.eps / lambda2;
  const TwoBranchJacobiRule rule(2.0 * r2.mu, 2.0 * r1.mu, sign_of(c2), cfg.compact_nodes);
  const ChiharaParams p1{r1.mu, c * r1.eps};
  const BigJacobiParams bjp{2.0 * r2.mu, 2.0 * r1.mu, c2};
  NeumaierSum mass;
  rule.run(std::abs(c2), [&](double u, double wu) {
    const double lam1 = r2.eps * u * lambda2;
    const ChiharaParams p2{r2.mu, lam1 * r2.eps};
    const double density = chihara_weight(lam1, p1) * chihara_weight(lambda2, p2) *
                           std::abs(lambda2) / bigjacobi_weight(u, bjp);
    mass.add(wu * density);
  });
  return mass.value();
}

}  // namespace m1poly
