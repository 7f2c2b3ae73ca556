#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "m1poly/coupling.hpp"
#include "m1poly/families.hpp"
#include "m1poly/identities.hpp"
#include "m1poly/numerics.hpp"
#include "m1poly/quadrature.hpp"

namespace py = pybind11;
using namespace m1poly;

namespace {

py::dict ortho_dict(const OrthoData& od) {
  py::dict d;
  d["points"] = od.points;
  d["weights"] = od.weights;
  d["norms"] = od.norms;
  d["N"] = od.N;
  return d;
}

py::dict residual_dict(const ResidualReport& r) {
  py::dict d;
  d["inputs"] = r.inputs;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["abs_residual"] = r.abs_residual;
  d["rel_residual"] = r.rel_residual;
  d["tol"] = r.tol;
  d["pass"] = r.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_m1poly, m) {
  m.doc() = "orthogonal polynomial families of the -1 scheme, their coupling "
            "coefficients, and numerical identity checks";
  m.attr("__version__") = "0.1.0";

  py::register_exception<NumericError>(m, "NumericError", PyExc_ValueError);

  py::enum_<EvalMethod>(m, "EvalMethod")
      .value("recurrence", EvalMethod::recurrence)
      .value("closed", EvalMethod::closed);
  py::enum_<GenFunForm>(m, "GenFunForm")
      .value("hypergeometric", GenFunForm::hypergeometric)
      .value("bessel", GenFunForm::bessel)
      .value("partial_sum", GenFunForm::partial_sum);
  py::enum_<Conv2Direction>(m, "Conv2Direction")
      .value("forward", Conv2Direction::forward)
      .value("inverse", Conv2Direction::inverse);
  py::enum_<TwoVarBasis>(m, "TwoVarBasis")
      .value("coupled", TwoVarBasis::coupled)
      .value("uncoupled", TwoVarBasis::uncoupled);

  m.def("mu_number", &mu_number, py::arg("n"), py::arg("mu"));
  m.def("mu_factorial", &mu_factorial, py::arg("n"), py::arg("mu"));
  m.def(
      "hyp_pfq",
      [](const std::vector<double>& a, const std::vector<double>& b, double x) {
        return hyp_pfq(std::span<const double>(a), std::span<const double>(b), x);
      },
      py::arg("numerator"), py::arg("denominator"), py::arg("x"));

  m.def(
      "chihara_eval",
      [](int n, double lam, double mu, double gamma, EvalMethod method) {
        return chihara_eval(n, lam, ChiharaParams{mu, gamma}, method);
      },
      py::arg("n"), py::arg("lam"), py::arg("mu"), py::arg("gamma"),
      py::arg("method") = EvalMethod::recurrence);
  m.def(
      "bigjacobi_eval",
      [](int n, double x, double a, double b, double c, EvalMethod method) {
        return bigjacobi_eval(n, x, BigJacobiParams{a, b, c}, method);
      },
      py::arg("n"), py::arg("x"), py::arg("a"), py::arg("b"), py::arg("c"),
      py::arg("method") = EvalMethod::recurrence);
  m.def(
      "dualhahn_eval",
      [](int n, double x, double eta, double xi, int N, EvalMethod method) {
        return dualhahn_eval(n, x, DualHahnParams{eta, xi, N}, method);
      },
      py::arg("n"), py::arg("x"), py::arg("eta"), py::arg("xi"), py::arg("N"),
      py::arg("method") = EvalMethod::recurrence);
  m.def(
      "bannai_ito_eval",
      [](int n, double x, double rho1, double rho2, double r1, double r2, EvalMethod method) {
        return bannai_ito_eval(n, x, BannaiItoParams{rho1, rho2, r1, r2}, method);
      },
      py::arg("n"), py::arg("x"), py::arg("rho1"), py::arg("rho2"), py::arg("r1"),
      py::arg("r2"), py::arg("method") = EvalMethod::recurrence);

  m.def(
      "dualhahn_ortho",
      [](double eta, double xi, int N) { return ortho_dict(dualhahn_ortho({eta, xi, N})); },
      py::arg("eta"), py::arg("xi"), py::arg("N"));
  m.def(
      "bi_ortho",
      [](double rho1, double rho2, double r1, double r2, int N) {
        return ortho_dict(bi_ortho(BannaiItoParams{rho1, rho2, r1, r2}, N));
      },
      py::arg("rho1"), py::arg("rho2"), py::arg("r1"), py::arg("r2"), py::arg("N"));

  m.def(
      "cg_coefficient",
      [](int n1, int n2, int N, int j, double mu1, int eps1, double mu2, int eps2) {
        return cg_coefficient(n1, n2, N, j, IrrepLabel{mu1, eps1}, IrrepLabel{mu2, eps2});
      },
      py::arg("n1"), py::arg("n2"), py::arg("N"), py::arg("j"), py::arg("mu1"), py::arg("eps1"),
      py::arg("mu2"), py::arg("eps2"));
  m.def(
      "cg_matrix",
      [](int total, double mu1, int eps1, double mu2, int eps2) {
        return cg_matrix(total, IrrepLabel{mu1, eps1}, IrrepLabel{mu2, eps2});
      },
      py::arg("total"), py::arg("mu1"), py::arg("eps1"), py::arg("mu2"), py::arg("eps2"));
  m.def(
      "racah_coefficient",
      [](int j12, int j23, int j123, double mu1, double mu2, double mu3, int eps3) {
        return racah_coefficient(ThreeFoldLabels(j12, j23, j123), mu1, mu2, mu3, eps3);
      },
      py::arg("j12"), py::arg("j23"), py::arg("j123"), py::arg("mu1"), py::arg("mu2"),
      py::arg("mu3"), py::arg("eps3"));

  m.def(
      "conv1_residual",
      [](int N, int j, double l1, double l2, double c, double mu1, int eps1, double mu2,
         int eps2, double tol) {
        return residual_dict(conv1_residual(N, j, SpectralPoint2(l1, l2, c),
                                            IrrepLabel{mu1, eps1}, IrrepLabel{mu2, eps2}, tol));
      },
      py::arg("N"), py::arg("j"), py::arg("lambda1"), py::arg("lambda2"), py::arg("c"),
      py::arg("mu1"), py::arg("eps1"), py::arg("mu2"), py::arg("eps2"), py::arg("tol") = 1e-9);
  m.def(
      "conv1_inverse_residual",
      [](int n1, int n2, double l1, double l2, double c, double mu1, int eps1, double mu2,
         int eps2, double tol) {
        return residual_dict(conv1_inverse_residual(
            n1, n2, SpectralPoint2(l1, l2, c), IrrepLabel{mu1, eps1}, IrrepLabel{mu2, eps2},
            tol));
      },
      py::arg("n1"), py::arg("n2"), py::arg("lambda1"), py::arg("lambda2"), py::arg("c"),
      py::arg("mu1"), py::arg("eps1"), py::arg("mu2"), py::arg("eps2"), py::arg("tol") = 1e-9);
  m.def(
      "conv2_residual",
      [](int j12, int j23, int j123, double l1, double l2, double l3, double c, double mu1,
         int eps1, double mu2, int eps2, double mu3, int eps3, Conv2Direction direction,
         double tol) {
        return residual_dict(conv2_residual(
            ThreeFoldLabels(j12, j23, j123), SpectralPoint3(l1, l2, l3, c),
            IrrepLabel{mu1, eps1}, IrrepLabel{mu2, eps2}, IrrepLabel{mu3, eps3}, direction,
            tol));
      },
      py::arg("j12"), py::arg("j23"), py::arg("j123"), py::arg("lambda1"), py::arg("lambda2"),
      py::arg("lambda3"), py::arg("c"), py::arg("mu1"), py::arg("eps1"), py::arg("mu2"),
      py::arg("eps2"), py::arg("mu3"), py::arg("eps3"),
      py::arg("direction") = Conv2Direction::forward, py::arg("tol") = 1e-8);

  m.def(
      "chihara_genfun",
      [](double lam, double z, double mu, double gamma, GenFunForm form, int partial_terms) {
        return chihara_genfun(lam, z, ChiharaParams{mu, gamma}, form, partial_terms);
      },
      py::arg("lam"), py::arg("z"), py::arg("mu"), py::arg("gamma"),
      py::arg("form") = GenFunForm::hypergeometric, py::arg("partial_terms") = 80);
  m.def(
      "coupled_basis_realization",
      [](int N, int j, double z1, double z2, double mu1, int eps1, double mu2, int eps2) {
        return coupled_basis_realization(N, j, z1, z2, IrrepLabel{mu1, eps1},
                                         IrrepLabel{mu2, eps2});
      },
      py::arg("N"), py::arg("j"), py::arg("z1"), py::arg("z2"), py::arg("mu1"), py::arg("eps1"),
      py::arg("mu2"), py::arg("eps2"));
  m.def(
      "bilinear_genfun_residual",
      [](double l1, double l2, double c, double z1, double z2, double mu1, int eps1, double mu2,
         int eps2, int jmax, double tol) {
        return residual_dict(bilinear_genfun_residual(SpectralPoint2(l1, l2, c), z1, z2,
                                                      IrrepLabel{mu1, eps1},
                                                      IrrepLabel{mu2, eps2}, jmax, tol));
      },
      py::arg("lambda1"), py::arg("lambda2"), py::arg("c"), py::arg("z1"), py::arg("z2"),
      py::arg("mu1"), py::arg("eps1"), py::arg("mu2"), py::arg("eps2"), py::arg("jmax") = 40,
      py::arg("tol") = 1e-7);

  m.def(
      "chihara_gram",
      [](int nmax, double mu, double gamma) {
        return chihara_gram(nmax, ChiharaParams{mu, gamma});
      },
      py::arg("nmax"), py::arg("mu"), py::arg("gamma"));
  m.def(
      "bigjacobi_gram",
      [](int nmax, double a, double b, double c) {
        return bigjacobi_gram(nmax, BigJacobiParams{a, b, c});
      },
      py::arg("nmax"), py::arg("a"), py::arg("b"), py::arg("c"));
  m.def(
      "twovar_gram",
      [](int total_degree, double c, double mu1, int eps1, double mu2, int eps2,
         TwoVarBasis basis) {
        return twovar_gram(total_degree, c, IrrepLabel{mu1, eps1}, IrrepLabel{mu2, eps2},
                           basis);
      },
      py::arg("total_degree"), py::arg("c"), py::arg("mu1"), py::arg("eps1"), py::arg("mu2"),
      py::arg("eps2"), py::arg("basis") = TwoVarBasis::coupled);
}
