#include "m1poly/families.hpp"

#include <cmath>
#include <string>

namespace m1poly {

namespace {

constexpr double kTruncTol = 1e-12;

void validate(const ChiharaParams& p) {
  if (!(p.mu > -0.5))
    throw ParameterError("chihara: mu must exceed -1/2, got " + std::to_string(p.mu));
}

void validate(const BigJacobiParams& p) {
  if (!(p.a > -1.0) || !(p.b > -1.0))
    throw ParameterError("bigjacobi: a and b must exceed -1");
  if (std::abs(std::abs(p.c) - 1.0) < 1e-14)
    throw ParameterError("bigjacobi: |c| = 1 is excluded");
}

}  // namespace

// --- Chihara ---

double chihara_eval(int n, double lambda, const ChiharaParams& p, EvalMethod method) {
  validate(p);
  if (n < 0) throw ParameterError("chihara_eval: negative degree");
  if (method == EvalMethod::recurrence) {
    double pm = 0.0, pc = 1.0;
    for (int k = 0; k < n; ++k) {
      double pn = ((lambda - p.gamma * parity_sign(k)) * pc -
                   std::sqrt(mu_number(k, p.mu)) * pm) /
                  std::sqrt(mu_number(k + 1, p.mu));
      pm = pc;
      pc = pn;
    }
    return pc;
  }
  double t = (lambda * lambda - p.gamma * p.gamma) / 2.0;
  long long m = even_part(n);
  int mi = static_cast<int>(m);
  if (odd_part(n) == 0) {
    double scale = std::sqrt(pochhammer(1.0, mi) / pochhammer(p.mu + 0.5, mi));
    return parity_sign(m) * scale * laguerre(mi, p.mu - 0.5, t);
  }
  double scale = std::sqrt(pochhammer(1.0, mi) / pochhammer(p.mu + 1.5, mi));
  return parity_sign(m) * scale * (lambda - p.gamma) / std::sqrt(2.0 * p.mu + 1.0) *
         laguerre(mi, p.mu + 0.5, t);
}

double chihara_weight(double lambda, const ChiharaParams& p, bool normalized) {
  validate(p);
  if (std::abs(lambda) <= std::abs(p.gamma))
    throw DomainError("chihara_weight: |lambda| must exceed |gamma|");
  double t = (lambda * lambda - p.gamma * p.gamma) / 2.0;
  double w = sign_of(lambda) * (lambda + p.gamma) * std::pow(t, p.mu - 0.5) * std::exp(-t);
  return normalized ? w / (2.0 * std::tgamma(p.mu + 0.5)) : w;
}

// --- big -1 Jacobi ---

namespace {

// A_n, C_n of x J_n = A_n J_{n+1} + (1 - A_n - C_n) J_n + C_n J_{n-1}
std::pair<double, double> bigjacobi_AC(int n, const BigJacobiParams& p) {
  double a = p.a, b = p.b, c = p.c;
  if (n % 2 == 0) {
    double A = (n + a + 1) * (c + 1) / (2 * n + a + b + 2);
    double C = n > 0 ? n * (1 - c) / (2 * n + a + b) : 0.0;
    return {A, C};
  }
  double A = (1 - c) * (n + a + b + 1) / (2 * n + a + b + 2);
  double C = (n + b) * (1 + c) / (2 * n + a + b);
  return {A, C};
}

}  // namespace

double bigjacobi_eval(int n, double x, const BigJacobiParams& p, EvalMethod method) {
  validate(p);
  if (n < 0) throw ParameterError("bigjacobi_eval: negative degree");
  if (method == EvalMethod::recurrence) {
    double jm = 0.0, jc = 1.0;
    for (int k = 0; k < n; ++k) {
      auto [A, C] = bigjacobi_AC(k, p);
      double jn = ((x - (1 - A - C)) * jc - C * jm) / A;
      jm = jc;
      jc = jn;
    }
    return jc;
  }
  double a = p.a, b = p.b, c = p.c;
  double y = (1 - x * x) / (1 - c * c);
  if (n % 2 == 0) {
    double ne = n / 2;
    double s = hyp_pfq({-ne, (n + a + b + 2) / 2}, {(a + 1) / 2}, y);
    if (n > 0)
      s += n * (1 - x) / ((1 + c) * (a + 1)) *
           hyp_pfq({1 - ne, (n + a + b + 2) / 2}, {(a + 3) / 2}, y);
    return s;
  }
  double ne = (n - 1) / 2;
  double s = hyp_pfq({-ne, (n + a + b + 1) / 2}, {(a + 1) / 2}, y);
  s -= (n + a + b + 1) * (1 - x) / ((1 + c) * (a + 1)) *
       hyp_pfq({-ne, (n + a + b + 3) / 2}, {(a + 3) / 2}, y);
  return s;
}

double bigjacobi_weight(double x, const BigJacobiParams& p) {
  validate(p);
  if (!(std::abs(p.c) < std::abs(x) && std::abs(x) < 1.0))
    throw DomainError("bigjacobi_weight: need |c| < |x| < 1");
  return sign_of(x) * (1 + x) * (x - p.c) * std::pow(x * x - p.c * p.c, (p.b - 1) / 2) *
         std::pow(1 - x * x, (p.a - 1) / 2);
}

double bigjacobi_norm(int n, double a, double b) {
  if (n < 0) throw ParameterError("bigjacobi_norm: negative degree");
  if (n % 2 == 0) {
    int ne = n / 2;
    double g = gamma_ratio({(n + b + 1) / 2, (n + a + 3) / 2, ne + 1.0}, {(n + a + b + 2) / 2});
    double q = pochhammer((a + 1) / 2, ne);
    return 2.0 * g / ((n + a + 1) * q * q);
  }
  int ne = (n - 1) / 2;
  double g = gamma_ratio({(n + b + 2) / 2, (n + a + 2) / 2, ne + 1.0}, {(n + a + b + 3) / 2});
  double q = pochhammer((a + 1) / 2, ne + 1);
  return (n + a + b + 1) * g / (2.0 * q * q);
}

double bigjacobi_ortho_prefactor(const BigJacobiParams& p) {
  validate(p);
  if (!(std::abs(p.c) < 1.0))
    throw ParameterError("bigjacobi_ortho_prefactor: orthogonality needs |c| < 1");
  return std::pow(1 - p.c * p.c, (p.a + p.b + 2) / 2) / (1 + p.c);
}

// --- dual -1 Hahn ---

double dualhahn_eval(int n, double x, const DualHahnParams& p, EvalMethod method) {
  if (n < 0) throw ParameterError("dualhahn_eval: negative degree");
  double eta = p.eta, xi = p.xi;
  int N = p.N;
  if (method == EvalMethod::recurrence) {
    double rm = 0.0, rc = 1.0;
    for (int k = 0; k < n; ++k) {
      double bk = parity_sign(k + 1) * (2 * xi + parity_sign(N) * 2 * eta) - 1;
      double uk = 4.0 * mu_number(k, xi) * mu_number(N - k + 1, eta);
      double rn = (x - bk) * rc - uk * rm;
      rm = rc;
      rc = rn;
    }
    return rc;
  }
  // Closed forms hold in the orthogonality regime n <= N; beyond it the
  // prefactor Pochhammers vanish against series poles, so use the recurrence.
  if (N % 2 == 0) {
    double d = -(eta + xi + N) / 2;
    if (n % 2 == 0) {
      double ne = n / 2;
      double pre = std::ldexp(1.0, 4 * static_cast<int>(ne)) * pochhammer(-N / 2.0, n / 2) *
                   pochhammer((1 - 2 * eta - N) / 2, n / 2);
      return pre * hyp_pfq({-ne, d + (x + 1) / 4, d - (x + 1) / 4},
                           {-N / 2.0, (1 - 2 * eta - N) / 2}, 1.0);
    }
    int ne = (n - 1) / 2;
    double pre = std::ldexp(1.0, 4 * ne) * pochhammer(1 - N / 2.0, ne) *
                 pochhammer((1 - 2 * eta - N) / 2, ne);
    return pre * (x + 2 * eta + 2 * xi + 1) *
           hyp_pfq({static_cast<double>(-ne), d + (x + 1) / 4, d - (x + 1) / 4},
                   {1 - N / 2.0, (1 - 2 * eta - N) / 2}, 1.0);
  }
  double d = (eta + xi + 1) / 2;
  if (n % 2 == 0) {
    int ne = n / 2;
    double pre = std::ldexp(1.0, 4 * ne) * pochhammer((1.0 - N) / 2, ne) *
                 pochhammer(xi + 0.5, ne);
    return pre * hyp_pfq({static_cast<double>(-ne), d + (x + 1) / 4, d - (x + 1) / 4},
                         {(1.0 - N) / 2, xi + 0.5}, 1.0);
  }
  int ne = (n - 1) / 2;
  double pre = std::ldexp(1.0, 4 * ne) * pochhammer((1.0 - N) / 2, ne) *
               pochhammer(xi + 1.5, ne);
  return pre * (x + 2 * xi - 2 * eta + 1) *
         hyp_pfq({static_cast<double>(-ne), d + (x + 1) / 4, d - (x + 1) / 4},
                 {(1.0 - N) / 2, xi + 1.5}, 1.0);
}

namespace {

double dualhahn_weight_at(int s, const DualHahnParams& p) {
  double eta = p.eta, xi = p.xi;
  int N = p.N;
  long long se = even_part(s);
  int sei = static_cast<int>(se);
  if (N % 2 == 0) {
    double base = -N / 2.0;
    if (odd_part(s) == 0)
      return parity_sign(se) * pochhammer(base, sei) * pochhammer(base - eta + 0.5, sei) *
             pochhammer(-N - eta - xi, sei) /
             (pochhammer(1.0, sei) * pochhammer(base - xi + 0.5, sei) *
              pochhammer(base - eta - xi, sei));
    return parity_sign(se) * pochhammer(base, sei + 1) * pochhammer(base - eta + 0.5, sei) *
           pochhammer(-N - eta - xi, sei) /
           (pochhammer(1.0, sei) * pochhammer(base - xi + 0.5, sei) *
            pochhammer(base - eta - xi, sei + 1));
  }
  if (odd_part(s) == 0)
    return parity_sign(se) * pochhammer((1.0 - N) / 2, sei) * pochhammer(xi + 0.5, sei) *
           pochhammer(eta + xi + 1, sei) /
           (pochhammer(1.0, sei) * pochhammer(eta + 0.5, sei) *
            pochhammer((N + 3) / 2.0 + eta + xi, sei));
  return parity_sign(se) * pochhammer((1.0 - N) / 2, sei) * pochhammer(xi + 0.5, sei + 1) *
         pochhammer(eta + xi + 1, sei) /
         (pochhammer(1.0, sei) * pochhammer(eta + 0.5, sei + 1) *
          pochhammer((N + 3) / 2.0 + eta + xi, sei));
}

double dualhahn_norm_at(int n, const DualHahnParams& p) {
  double eta = p.eta, xi = p.xi;
  int N = p.N;
  long long ne = even_part(n);
  int nei = static_cast<int>(ne);
  double p16 = std::ldexp(1.0, 4 * n);  // 16^n, exact
  if (N % 2 == 0) {
    double tail = pochhammer(-N - eta - xi, N / 2) / pochhammer((-N - 2 * xi + 1) / 2, N / 2);
    if (odd_part(n) == 0)
      return p16 * pochhammer(1.0, nei) * pochhammer(-N / 2.0, nei) * pochhammer(xi + 0.5, nei) *
             pochhammer((-N - 2 * eta + 1) / 2, nei) * tail;
    return -p16 * pochhammer(1.0, nei) * pochhammer(-N / 2.0, nei + 1) *
           pochhammer(xi + 0.5, nei + 1) * pochhammer((-N - 2 * eta + 1) / 2, nei) * tail;
  }
  double tail = pochhammer(eta + xi + 1, (N + 1) / 2) / pochhammer(eta + 0.5, (N + 1) / 2);
  if (odd_part(n) == 0)
    return p16 * pochhammer(1.0, nei) * pochhammer((1.0 - N) / 2, nei) *
           pochhammer(xi + 0.5, nei) * pochhammer(-N / 2.0 - eta, nei) * tail;
  return -p16 * pochhammer(1.0, nei) * pochhammer((1.0 - N) / 2, nei) *
         pochhammer(xi + 0.5, nei + 1) * pochhammer(-N / 2.0 - eta, nei + 1) * tail;
}

}  // namespace

OrthoData dualhahn_ortho(const DualHahnParams& p) {
  if (p.N < 0) throw ParameterError("dualhahn_ortho: N must be nonnegative");
  OrthoData d;
  d.N = p.N;
  for (int s = 0; s <= p.N; ++s) {
    double y = (p.N % 2 == 0)
                   ? parity_sign(s) * (2 * s - 2 * p.eta - 2 * p.xi - 2 * p.N - 1)
                   : parity_sign(s) * (2 * s + 2 * p.eta + 2 * p.xi + 1);
    d.points.push_back(y);
    double w = dualhahn_weight_at(s, p);
    if (w < 0)
      throw ParameterError("dualhahn_ortho: negative weight at grid index " + std::to_string(s));
    d.weights.push_back(w);
  }
  for (int n = 0; n <= p.N; ++n) {
    double nu = dualhahn_norm_at(n, p);
    if (!(nu > 0))
      throw ParameterError("dualhahn_ortho: nonpositive norm at degree " + std::to_string(n));
    d.norms.push_back(nu);
  }
  return d;
}

std::pair<std::vector<double>, std::vector<double>> dualhahn_reversed(const DualHahnParams& p) {
  OrthoData base = dualhahn_ortho(p);  // validates weights
  std::vector<double> z, w;
  for (int s = 0; s <= p.N; ++s) {
    z.push_back(parity_sign(s + p.N + 1) * (2 * s + 2 * p.eta + 2 * p.xi + 1));
    w.push_back(base.weights[(p.N % 2 == 0) ? p.N - s : s]);
  }
  return {z, w};
}

// --- Bannai-Ito ---

std::pair<double, double> bi_recurrence_coeffs(int n, const BannaiItoParams& p) {
  if (n < 0) throw ParameterError("bi_recurrence_coeffs: negative index");
  double g = p.g();
  if (std::abs(n + g + 1) < 1e-14 || (n > 0 && std::abs(n + g) < 1e-14))
    throw PoleError("bi_recurrence_coeffs: denominator n + g(+1) vanishes at n = " +
                    std::to_string(n));
  if (n % 2 == 0) {
    double A = (n + 2 * p.rho1 - 2 * p.r1 + 1) * (n + 2 * p.rho1 - 2 * p.r2 + 1) /
               (4 * (n + g + 1));
    double C = n > 0 ? -n * (n - 2 * p.r1 - 2 * p.r2) / (4 * (n + g)) : 0.0;
    return {A, C};
  }
  double A = (n + 2 * g + 1) * (n + 2 * p.rho1 + 2 * p.rho2 + 1) / (4 * (n + g + 1));
  double C = -(n + 2 * p.rho2 - 2 * p.r2) * (n + 2 * p.rho2 - 2 * p.r1) / (4 * (n + g));
  return {A, C};
}

double bannai_ito_eval(int n, double x, const BannaiItoParams& p, EvalMethod method) {
  if (n < 0) throw ParameterError("bannai_ito_eval: negative degree");
  if (method == EvalMethod::recurrence) {
    double bm = 0.0, bc = 1.0, Aprev = 0.0;
    for (int k = 0; k < n; ++k) {
      auto [A, C] = bi_recurrence_coeffs(k, p);
      double u = k > 0 ? Aprev * C : 0.0;
      double bn = (x - (p.rho1 - A - C)) * bc - u * bm;
      bm = bc;
      bc = bn;
      Aprev = A;
    }
    return bc;
  }
  double g = p.g();
  long long ne = even_part(n);
  int np = odd_part(n);
  int nei = static_cast<int>(ne);
  double eta_n = parity_sign(n) * pochhammer(p.rho1 - p.r1 + 0.5, nei + np) *
                 pochhammer(p.rho2 - p.r1 + 0.5, nei + np) * pochhammer(1 - p.r1 - p.r2, nei) /
                 pochhammer(ne + g + 1, nei + np);
  double s = hyp_pfq({static_cast<double>(-ne), ne + g + 1, x - p.r1 + 0.5, -x - p.r1 + 0.5},
                     {1 - p.r1 - p.r2, p.rho1 - p.r1 + 0.5, p.rho2 - p.r1 + 0.5}, 1.0);
  if (ne + np >= 1) {
    double coeff = parity_sign(n) * (ne + np + g * np) * (x - p.r1 + 0.5) /
                   ((p.rho1 - p.r1 + 0.5) * (p.rho2 - p.r1 + 0.5));
    s += coeff * hyp_pfq({static_cast<double>(-ne - np + 1), ne + np + g + 1, x - p.r1 + 1.5,
                          -x - p.r1 + 0.5},
                         {1 - p.r1 - p.r2, p.rho1 - p.r1 + 1.5, p.rho2 - p.r1 + 1.5}, 1.0);
  }
  double v = eta_n * s;
  if (!std::isfinite(v))
    throw PoleError("bannai_ito_eval: closed-form prefactor denominator vanishes");
  return v;
}

BiTruncation bi_truncation(const BannaiItoParams& p, int N) {
  if (N < 0) throw ParameterError("bi_truncation: N must be nonnegative");
  double half = (N + 1) / 2.0;
  if (N % 2 == 0) {
    for (double r : {p.r1, p.r2})
      for (double rho : {p.rho1, p.rho2})
        if (std::abs(r - rho - half) <= kTruncTol) return BiTruncation::even_r_minus_rho;
  } else {
    if (std::abs(p.rho1 + p.rho2 + half) <= kTruncTol) return BiTruncation::odd_rho_sum;
    if (std::abs(p.r1 + p.r2 - half) <= kTruncTol) return BiTruncation::odd_r_sum;
    if (std::abs(p.g() + half) <= kTruncTol) return BiTruncation::odd_g_value;
  }
  throw ParameterError("bi_truncation: no truncation condition holds at N = " + std::to_string(N));
}

namespace {

double bi_weight_at(int k, const BannaiItoParams& p) {
  long long ke = even_part(k);
  int kp = odd_part(k);
  int kei = static_cast<int>(ke);
  return parity_sign(k) / pochhammer(1.0, kei) * pochhammer(p.rho1 - p.r1 + 0.5, kei + kp) *
         pochhammer(p.rho1 - p.r2 + 0.5, kei + kp) * pochhammer(p.rho1 + p.rho2 + 1, kei) *
         pochhammer(2 * p.rho1 + 1, kei) /
         (pochhammer(p.rho1 + p.r1 + 0.5, kei + kp) * pochhammer(p.rho1 + p.r2 + 0.5, kei + kp) *
          pochhammer(p.rho1 - p.rho2 + 1, kei));
}

double bi_norm_at(int n, const BannaiItoParams& p, int N) {
  double g = p.g();
  long long ne = even_part(n);
  int np = odd_part(n);
  int nei = static_cast<int>(ne);
  int Ne = static_cast<int>(even_part(N));
  double dp = pochhammer(1 + ne + g, nei + np);
  if (N % 2 == 0) {
    return pochhammer(1.0, nei) * pochhammer(1.0, Ne) * pochhammer(1 + 2 * p.rho1, Ne) *
           pochhammer(1 + p.rho1 + p.rho2, nei) * pochhammer(1 + ne + g, Ne - nei) *
           pochhammer(0.5 + p.rho1 - p.r1, nei + np) * pochhammer(0.5 + p.rho2 - p.r1, nei + np) /
           (pochhammer(1.0, Ne - nei - np) * pochhammer(0.5 + p.rho1 + p.r1, Ne - nei) *
            pochhammer(0.5 + ne + np + p.rho2 - p.r2, Ne - nei - np) * dp * dp);
  }
  return pochhammer(1.0, nei) * pochhammer(1.0, Ne) * pochhammer(1 + 2 * p.rho1, Ne + 1) *
         pochhammer(1 - p.r1 - p.r2, nei) * pochhammer(1 + ne + g, Ne + 1 - nei) *
         pochhammer(0.5 + p.rho1 - p.r1, nei + np) * pochhammer(0.5 + p.rho1 - p.r2, nei + np) /
         (pochhammer(1.0, Ne - nei) * pochhammer(0.5 + p.rho1 + p.r1, Ne + 1 - nei - np) *
          pochhammer(0.5 + ne + np + p.rho2 - p.r2, Ne + 1 - nei - np) * dp * dp);
}

}  // namespace

OrthoData bi_ortho(const BannaiItoParams& p, int N) {
  if (N < 0) throw ParameterError("bi_ortho: N must be nonnegative");
  double half = (N + 1) / 2.0;
  if (N % 2 == 0) {
    if (std::abs(p.r2 - p.rho1 - half) > kTruncTol)
      throw ParameterError("bi_ortho: even N requires r2 - rho1 = (N+1)/2");
  } else {
    if (std::abs(p.rho1 + p.rho2 + half) > kTruncTol)
      throw ParameterError("bi_ortho: odd N requires rho1 + rho2 = -(N+1)/2");
  }
  for (int n = 1; n <= N; ++n) {
    double A = bi_recurrence_coeffs(n - 1, p).first;
    double C = bi_recurrence_coeffs(n, p).second;
    if (!(A * C > 0))
      throw ParameterError("bi_ortho: positivity u_n > 0 fails at n = " + std::to_string(n));
  }
  OrthoData d;
  d.N = N;
  for (int k = 0; k <= N; ++k) {
    d.points.push_back(parity_sign(k) * (k / 2.0 + p.rho1 + 0.25) - 0.25);
    double w = bi_weight_at(k, p);
    if (w < 0)
      throw ParameterError("bi_ortho: negative weight at grid index " + std::to_string(k));
    d.weights.push_back(w);
  }
  for (int n = 0; n <= N; ++n) {
    double h = bi_norm_at(n, p, N);
    if (!(h > 0))
      throw ParameterError("bi_ortho: nonpositive norm at degree " + std::to_string(n));
    d.norms.push_back(h);
  }
  return d;
}

}  // namespace m1poly
