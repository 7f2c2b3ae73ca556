#include "m1poly/identities.hpp"

#include <cmath>
#include <string>

namespace m1poly {

namespace {

void require_chain(bool ok, const char* what) {
  if (!ok) throw DomainError(std::string("spectral point outside domain: need ") + what);
}

// modified Bessel function of the first kind; std::cyl_bessel_i rejects
// negative orders, so those are reached through the reflection
// I_{-a} = I_a + (2/pi) sin(pi a) K_a
double bessel_i(double nu, double x) {
  if (nu >= 0.0) return std::cyl_bessel_i(nu, x);
  double a = -nu;
  return std::cyl_bessel_i(a, x) +
         (2.0 / M_PI) * std::sin(M_PI * a) * std::cyl_bessel_k(a, x);
}

}  // namespace

SpectralPoint2::SpectralPoint2(double l1, double l2, double c_) : lambda1(l1), lambda2(l2), c(c_) {
  require_chain(std::abs(l2) > std::abs(l1), "|lambda2| > |lambda1|");
  require_chain(std::abs(l1) > std::abs(c_), "|lambda1| > |c|");
}

SpectralPoint3::SpectralPoint3(double l1, double l2, double l3, double c_)
    : lambda1(l1), lambda2(l2), lambda3(l3), c(c_) {
  require_chain(std::abs(l3) > std::abs(l2), "|lambda3| > |lambda2|");
  require_chain(std::abs(l2) > std::abs(l1), "|lambda2| > |lambda1|");
  require_chain(std::abs(l1) > std::abs(c_), "|lambda1| > |c|");
}

ResidualReport make_residual_report(std::map<std::string, double> inputs, double lhs, double rhs,
                                    double tol) {
  ResidualReport r;
  r.inputs = std::move(inputs);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_residual = std::abs(lhs - rhs);
  r.rel_residual = r.abs_residual / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  r.tol = tol;
  r.pass = r.rel_residual <= tol;
  return r;
}

double k_factor(int j, double lambda2, double mu2, double mu1, double c, int eps1, int eps2) {
  if (j < 0) throw ParameterError("k_factor: j must be nonnegative");
  if (!(std::abs(lambda2) > std::abs(c)))
    throw DomainError("k_factor: need |lambda2| > |c|");
  double ep = eps1 * eps2;
  double den = lambda2 - parity_sign(j) * c * ep;
  if (std::abs(den) < 1e-14) throw PoleError("k_factor: denominator lambda2 - (-1)^j c eps");
  double rad = std::pow((lambda2 * lambda2 - c * c) / 2.0, j) * (lambda2 - c * ep) / den *
               gamma_ratio({mu1 + 0.5, mu2 + 0.5}, {mu1 + mu2 + j + 1}) /
               bigjacobi_norm(j, 2 * mu2, 2 * mu1);
  if (!(rad > 0)) throw DomainError("k_factor: nonpositive radicand");
  double s = (j % 2 == 1) ? sign_of(lambda2) : 1.0;
  return s * std::sqrt(rad);
}

namespace {

double conv1_lhs(int N, int j, const SpectralPoint2& pt, const IrrepLabel& r1,
                 const IrrepLabel& r2) {
  CoupledLabel cl = couple(r1, r2, j);
  ChiharaParams coupled{cl.mu12, pt.c * cl.eps12};
  BigJacobiParams bj{2 * r2.mu, 2 * r1.mu, -pt.c * r1.eps * r2.eps / pt.lambda2};
  return k_factor(j, pt.lambda2, r2.mu, r1.mu, pt.c, r1.eps, r2.eps) *
         chihara_eval(N, pt.lambda2, coupled) *
         bigjacobi_eval(j, r2.eps * pt.lambda1 / pt.lambda2, bj);
}

double conv1_product(int n1, int n2, const SpectralPoint2& pt, const IrrepLabel& r1,
                     const IrrepLabel& r2) {
  ChiharaParams p1{r1.mu, pt.c * r1.eps};
  ChiharaParams p2{r2.mu, pt.lambda1 * r2.eps};
  return chihara_eval(n1, pt.lambda1, p1) * chihara_eval(n2, pt.lambda2, p2);
}

}  // namespace

ResidualReport conv1_residual(int N, int j, const SpectralPoint2& pt, const IrrepLabel& r1,
                              const IrrepLabel& r2, double tol) {
  if (N < 0 || j < 0) throw ParameterError("conv1_residual: N, j must be nonnegative");
  double lhs = conv1_lhs(N, j, pt, r1, r2);
  NeumaierSum rhs;
  for (int n1 = 0; n1 <= N + j; ++n1)
    rhs.add(cg_coefficient(n1, N + j - n1, N, j, r1, r2) *
            conv1_product(n1, N + j - n1, pt, r1, r2));
  return make_residual_report(
      {{"N", double(N)},
       {"j", double(j)},
       {"lambda1", pt.lambda1},
       {"lambda2", pt.lambda2},
       {"c", pt.c},
       {"mu1", r1.mu},
       {"mu2", r2.mu},
       {"eps1", double(r1.eps)},
       {"eps2", double(r2.eps)}},
      lhs, rhs.value(), tol);
}

ResidualReport conv1_inverse_residual(int n1, int n2, const SpectralPoint2& pt,
                                      const IrrepLabel& r1, const IrrepLabel& r2, double tol) {
  if (n1 < 0 || n2 < 0) throw ParameterError("conv1_inverse_residual: indices nonnegative");
  double lhs = conv1_product(n1, n2, pt, r1, r2);
  NeumaierSum rhs;
  for (int j = 0; j <= n1 + n2; ++j)
    rhs.add(cg_coefficient(n1, n2, n1 + n2 - j, j, r1, r2) *
            conv1_lhs(n1 + n2 - j, j, pt, r1, r2));
  return make_residual_report(
      {{"n1", double(n1)},
       {"n2", double(n2)},
       {"lambda1", pt.lambda1},
       {"lambda2", pt.lambda2},
       {"c", pt.c},
       {"mu1", r1.mu},
       {"mu2", r2.mu},
       {"eps1", double(r1.eps)},
       {"eps2", double(r2.eps)}},
      lhs, rhs.value(), tol);
}

double theta_f(const ThreeFoldLabels& l, int n123, const SpectralPoint3& pt, const IrrepLabel& r1,
               const IrrepLabel& r2, const IrrepLabel& r3) {
  CoupledLabel c12 = couple(r1, r2, l.j12);
  IrrepLabel r12{c12.mu12, c12.eps12};
  CoupledLabel c123 = couple(r12, r3, l.j_12_3);
  BigJacobiParams inner{2 * r2.mu, 2 * r1.mu, -pt.c * r1.eps * r2.eps / pt.lambda2};
  BigJacobiParams outer{2 * r3.mu, 2 * r12.mu, -pt.c * r12.eps * r3.eps / pt.lambda3};
  ChiharaParams top{c123.mu12, pt.c * c123.eps12};
  return k_factor(l.j12, pt.lambda2, r2.mu, r1.mu, pt.c, r1.eps, r2.eps) *
         bigjacobi_eval(l.j12, r2.eps * pt.lambda1 / pt.lambda2, inner) *
         k_factor(l.j_12_3, pt.lambda3, r3.mu, r12.mu, pt.c, r12.eps, r3.eps) *
         bigjacobi_eval(l.j_12_3, r3.eps * pt.lambda2 / pt.lambda3, outer) *
         chihara_eval(n123, pt.lambda3, top);
}

double theta_g(const ThreeFoldLabels& l, int n123, const SpectralPoint3& pt, const IrrepLabel& r1,
               const IrrepLabel& r2, const IrrepLabel& r3) {
  CoupledLabel c23 = couple(r2, r3, l.j23);
  IrrepLabel r23{c23.mu12, c23.eps12};
  CoupledLabel c123 = couple(r1, r23, l.j_1_23);
  // the first coupled pair lives at spectral parameter lambda1 in the c slot
  BigJacobiParams inner{2 * r3.mu, 2 * r2.mu, -pt.lambda1 * r2.eps * r3.eps / pt.lambda3};
  BigJacobiParams outer{2 * r23.mu, 2 * r1.mu, -pt.c * r1.eps * r23.eps / pt.lambda3};
  ChiharaParams top{c123.mu12, pt.c * c123.eps12};
  return k_factor(l.j23, pt.lambda3, r3.mu, r2.mu, pt.lambda1, r2.eps, r3.eps) *
         bigjacobi_eval(l.j23, r3.eps * pt.lambda2 / pt.lambda3, inner) *
         k_factor(l.j_1_23, pt.lambda3, r23.mu, r1.mu, pt.c, r1.eps, r23.eps) *
         bigjacobi_eval(l.j_1_23, r23.eps * pt.lambda1 / pt.lambda3, outer) *
         chihara_eval(n123, pt.lambda3, top);
}

ResidualReport conv2_residual(const ThreeFoldLabels& l, const SpectralPoint3& pt,
                              const IrrepLabel& r1, const IrrepLabel& r2, const IrrepLabel& r3,
                              Conv2Direction direction, double tol) {
  double lhs = 0.0;
  NeumaierSum rhs;
  if (direction == Conv2Direction::forward) {
    lhs = theta_f(l, 0, pt, r1, r2, r3);
    for (int j23 = 0; j23 <= l.j123; ++j23) {
      ThreeFoldLabels term(l.j12, j23, l.j123);
      rhs.add(racah_coefficient(term, r1.mu, r2.mu, r3.mu, r3.eps) *
              theta_g(term, 0, pt, r1, r2, r3));
    }
  } else {
    lhs = theta_g(l, 0, pt, r1, r2, r3);
    for (int j12 = 0; j12 <= l.j123; ++j12) {
      ThreeFoldLabels term(j12, l.j23, l.j123);
      rhs.add(racah_coefficient(term, r1.mu, r2.mu, r3.mu, r3.eps) *
              theta_f(term, 0, pt, r1, r2, r3));
    }
  }
  return make_residual_report(
      {{"j12", double(l.j12)},
       {"j23", double(l.j23)},
       {"j123", double(l.j123)},
       {"lambda1", pt.lambda1},
       {"lambda2", pt.lambda2},
       {"lambda3", pt.lambda3},
       {"c", pt.c},
       {"mu1", r1.mu},
       {"mu2", r2.mu},
       {"mu3", r3.mu},
       {"eps1", double(r1.eps)},
       {"eps2", double(r2.eps)},
       {"eps3", double(r3.eps)},
       {"direction", direction == Conv2Direction::forward ? 0.0 : 1.0}},
      lhs, rhs.value(), tol);
}

namespace {

double genfun_hyper(double lam, double z, double mu, double gam) {
  double arg = z * z * (lam * lam - gam * gam) / 4.0;
  return std::exp(-z * z / 2.0) *
         (hyp_pfq({}, {mu + 0.5}, arg) +
          z * (lam - gam) / (2 * mu + 1) * hyp_pfq({}, {mu + 1.5}, arg));
}

}  // namespace

double chihara_genfun(double lambda, double z, const ChiharaParams& p, GenFunForm form,
                      int partial_terms) {
  if (form == GenFunForm::hypergeometric) return genfun_hyper(lambda, z, p.mu, p.gamma);
  if (form == GenFunForm::bessel) {
    double d2 = lambda * lambda - p.gamma * p.gamma;
    if (!(d2 > 0.0) || z == 0.0) return genfun_hyper(lambda, z, p.mu, p.gamma);
    double x = std::abs(z) * std::sqrt(d2);
    double pref = std::exp(-z * z / 2.0) * std::tgamma(p.mu + 0.5) *
                  std::pow(x / 2.0, 0.5 - p.mu);
    return pref * (bessel_i(p.mu - 0.5, x) +
                   sign_of(z) * (lambda - p.gamma) / std::sqrt(d2) * bessel_i(p.mu + 0.5, x));
  }
  if (partial_terms < 0) throw ParameterError("chihara_genfun: partial_terms must be >= 0");
  NeumaierSum acc;
  double pm = 0.0, pc = 1.0;  // recurrence values P_{n-1}, P_n
  double zpow = 1.0, fac = 1.0;
  for (int n = 0; n <= partial_terms; ++n) {
    acc.add(pc * zpow / std::sqrt(fac));
    double pn = ((lambda - p.gamma * parity_sign(n)) * pc - std::sqrt(mu_number(n, p.mu)) * pm) /
                std::sqrt(mu_number(n + 1, p.mu));
    pm = pc;
    pc = pn;
    zpow *= z;
    fac *= mu_number(n + 1, p.mu);
  }
  return acc.value();
}

namespace {

// Polynomial parts of the coupled-basis generating functions; canonical for
// z2 > 0, callers handle the z2 < 0 extension.
double fe_fo(int j, double z1, double z2, double mu1, double mu2, int eps2, bool odd) {
  long long je = even_part(j);
  int jp = odd_part(j);
  double u = -(z1 / z2) * (z1 / z2);
  double pref = parity_sign(je + jp) * std::pow(z2, j) / std::sqrt(mu_factorial(j, mu2)) *
                std::sqrt(pochhammer(0.5 + mu1, static_cast<int>(je) + jp) /
                          pochhammer(je + 1 + mu1 + mu2, static_cast<int>(je) + jp));
  double nje = static_cast<double>(-je);
  if (!odd) {
    double s = hyp_pfq({nje, 0.5 - je - jp - mu2}, {0.5 + mu1}, u);
    if (je + jp >= 1)
      s += parity_sign(jp) * z1 * (j + 2 * mu2 * jp) / (z2 * eps2 * (1 + 2 * mu1)) *
           hyp_pfq({1.0 - je - jp, 0.5 - je - mu2}, {1.5 + mu1}, u);
    return pref * s;
  }
  double s = hyp_pfq({static_cast<double>(-je - jp), -0.5 - je - mu2}, {0.5 + mu1}, u);
  s += parity_sign(jp) * z1 * (j + 1 + 2 * mu1 + 2 * mu2 * jp) / (z2 * eps2 * (1 + 2 * mu1)) *
       hyp_pfq({nje, 0.5 - je - jp - mu2}, {1.5 + mu1}, u);
  return pref * std::pow(z1 * z1 / (z2 * z2) + 1.0, -0.5) * s;
}

}  // namespace

double coupled_basis_realization(int N, int j, double z1, double z2, const IrrepLabel& r1,
                                 const IrrepLabel& r2) {
  if (N < 0 || j < 0) throw ParameterError("coupled_basis_realization: indices nonnegative");
  if (z2 == 0.0) throw DomainError("coupled_basis_realization: z2 must be nonzero");
  double sign = 1.0;
  if (z2 < 0) {  // realization extends through e_N(z1,z2) = (-1)^{N+j} e_N(-z1,-z2)
    sign = parity_sign(N + j);
    z1 = -z1;
    z2 = -z2;
  }
  CoupledLabel cl = couple(r1, r2, j);
  double f = fe_fo(j, z1, z2, r1.mu, r2.mu, r2.eps, odd_part(N) == 1);
  return sign * std::pow(z1 * z1 + z2 * z2, N / 2.0) / std::sqrt(mu_factorial(N, cl.mu12)) * f;
}

ResidualReport bilinear_genfun_residual(const SpectralPoint2& pt, double z1, double z2,
                                        const IrrepLabel& r1, const IrrepLabel& r2, int jmax,
                                        double tol) {
  if (jmax < 0) throw ParameterError("bilinear_genfun_residual: jmax must be >= 0");
  double lhs = genfun_hyper(pt.lambda1, z1, r1.mu, pt.c * r1.eps) *
               genfun_hyper(pt.lambda2, z2, r2.mu, pt.lambda1 * r2.eps);
  double s2 = z1 * z1 + z2 * z2;
  double rhs, tail = 0.0;
  if (s2 == 0.0) {
    rhs = 1.0;  // only the j=0 term survives and every factor in it is 1
  } else {
    if (z2 == 0.0) throw DomainError("bilinear_genfun_residual: z2 must be nonzero");
    // the odd part carries sign(z2) through the square root of s2
    double signed_s = sign_of(z2) * std::sqrt(s2);
    NeumaierSum acc;
    double last = 0.0;
    for (int jj = 0; jj <= jmax; ++jj) {
      CoupledLabel cl = couple(r1, r2, jj);
      double arg = s2 * (pt.lambda2 * pt.lambda2 - pt.c * pt.c) / 4.0;
      BigJacobiParams bj{2 * r2.mu, 2 * r1.mu, -pt.c * r1.eps * r2.eps / pt.lambda2};
      double term =
          k_factor(jj, pt.lambda2, r2.mu, r1.mu, pt.c, r1.eps, r2.eps) *
          bigjacobi_eval(jj, r2.eps * pt.lambda1 / pt.lambda2, bj) *
          (fe_fo(jj, z1, z2, r1.mu, r2.mu, r2.eps, false) * hyp_pfq({}, {cl.mu12 + 0.5}, arg) +
           fe_fo(jj, z1, z2, r1.mu, r2.mu, r2.eps, true) * signed_s *
               (pt.lambda2 - pt.c * cl.eps12) / (2 * cl.mu12 + 1) *
               hyp_pfq({}, {cl.mu12 + 1.5}, arg));
      acc.add(term);
      last = term;
    }
    rhs = std::exp(-s2 / 2.0) * acc.value();
    tail = std::abs(last) / std::max(std::abs(acc.value()), 1e-300);
  }
  ResidualReport rep = make_residual_report({{"lambda1", pt.lambda1},
                                             {"lambda2", pt.lambda2},
                                             {"c", pt.c},
                                             {"z1", z1},
                                             {"z2", z2},
                                             {"mu1", r1.mu},
                                             {"mu2", r2.mu},
                                             {"eps1", double(r1.eps)},
                                             {"eps2", double(r2.eps)},
                                             {"jmax", double(jmax)}},
                                            lhs, rhs, tol);
  rep.inputs["tail_estimate"] = tail;
  return rep;
}

}  // namespace m1poly
