#include "m1poly/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "m1poly/coupling.hpp"
#include "m1poly/families.hpp"
#include "m1poly/identities.hpp"
#include "m1poly/numerics.hpp"
#include "m1poly/quadrature.hpp"
#include "m1poly/rng.hpp"

namespace m1poly {
namespace {

using ordered_json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  std::string family;
  std::string identity;
  std::map<std::string, double> params;  // resolved, defaults materialized
  int nmax = 0;
  int draws = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::string format = "json";
  std::string out_path;  // empty: stdout
};

// Raw option values as parsed; unset optionals mark "not given" so
// per-command defaults can be materialized afterwards.
struct RawOptions {
  std::string family = "chihara";
  std::string identity;
  std::string params;
  std::optional<int> nmax;
  std::optional<int> draws;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string format = "json";
  std::string out_path;
};

std::map<std::string, double> parse_params(const std::string& text) {
  std::map<std::string, double> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ParameterError("--params entries must look like key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(val, &used);
    } catch (const std::exception&) {
      throw ParameterError("--params value for '" + key + "' is not a number: '" + val + "'");
    }
    if (used != val.size())
      throw ParameterError("--params value for '" + key + "' is not a number: '" + val + "'");
    out[key] = v;
  }
  return out;
}

// Overlays user params onto defaults; any key outside the default set is
// unknown for this command/family and rejected.
std::map<std::string, double> resolve_params(const std::map<std::string, double>& defaults,
                                             const std::map<std::string, double>& user,
                                             const std::string& context) {
  if (defaults.empty() && !user.empty())
    throw ParameterError(context + " draws its parameters randomly; --params is not accepted");
  std::map<std::string, double> out = defaults;
  for (const auto& [k, v] : user) {
    auto it = out.find(k);
    if (it == out.end()) {
      std::string known;
      for (const auto& [dk, dv] : defaults) {
        if (!known.empty()) known += ", ";
        known += dk;
      }
      throw ParameterError("unknown parameter '" + k + "' for " + context + " (accepts: " + known +
                           ")");
    }
    it->second = v;
  }
  return out;
}

int as_int(double v, const std::string& name) {
  if (!(std::abs(v) < 1e9) || v != std::floor(v))
    throw ParameterError("parameter " + name + " must be an integer, got " + std::to_string(v));
  return static_cast<int>(v);
}

int as_sign(double v, const std::string& name) {
  int s = as_int(v, name);
  if (s != 1 && s != -1) throw ParameterError("parameter " + name + " must be +1 or -1");
  return s;
}

// All doubles are serialized through the JSON encoder so both formats share
// the shortest round-trip representation.
std::string num_str(double v) { return ordered_json(v).dump(); }

ordered_json config_json(const RunConfig& c) {
  ordered_json j;
  j["command"] = c.command;
  j["family"] = c.family;
  j["identity"] = c.identity;
  ordered_json p;
  for (const auto& [k, v] : c.params) p[k] = v;
  j["params"] = p;
  j["nmax"] = c.nmax;
  j["draws"] = c.draws;
  j["seed"] = c.seed;
  j["tol"] = c.tol;
  j["format"] = c.format;
  j["out"] = c.out_path.empty() ? "-" : c.out_path;
  return j;
}

void flatten_entry(const ordered_json& entry, std::vector<std::string>& cols,
                   std::map<std::string, std::string>& row) {
  for (const auto& [k, v] : entry.items()) {
    if (v.is_object()) {
      for (const auto& [k2, v2] : v.items()) {
        if (std::find(cols.begin(), cols.end(), k2) == cols.end()) cols.push_back(k2);
        row[k2] = v2.dump();
      }
    } else {
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
      row[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
  }
}

// CSV is a flat projection of the entries array: nested "inputs" objects are
// splatted into their own columns, column order follows first appearance.
std::string to_csv(const ordered_json& report) {
  std::vector<std::string> cols;
  std::vector<std::map<std::string, std::string>> rows;
  for (const auto& entry : report.at("entries")) {
    std::map<std::string, std::string> row;
    flatten_entry(entry, cols, row);
    rows.push_back(std::move(row));
  }
  std::string out;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) out += ',';
    out += cols[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) out += ',';
      auto it = row.find(cols[i]);
      if (it != row.end()) out += it->second;
    }
    out += '\n';
  }
  return out;
}

ordered_json residual_entry(int draw, const ResidualReport& r) {
  ordered_json e;
  e["draw"] = draw;
  ordered_json in;
  for (const auto& [k, v] : r.inputs) in[k] = v;
  e["inputs"] = in;
  e["lhs"] = r.lhs;
  e["rhs"] = r.rhs;
  e["abs_residual"] = r.abs_residual;
  e["rel_residual"] = r.rel_residual;
  e["tol"] = r.tol;
  e["pass"] = r.pass;
  return e;
}

// ---- eval ------------------------------------------------------------

ordered_json cmd_eval(RunConfig& cfg, bool& all_pass) {
  ordered_json entries = ordered_json::array();
  double max_delta = 0.0;
  auto add_row = [&](int n, double rec, double clo) {
    double delta = std::abs(rec - clo) / std::max({std::abs(rec), std::abs(clo), 1.0});
    max_delta = std::max(max_delta, delta);
    ordered_json e;
    e["n"] = n;
    e["recurrence"] = rec;
    e["closed"] = clo;
    e["delta"] = delta;
    e["pass"] = delta <= cfg.tol;
    entries.push_back(e);
  };

  const auto& P = cfg.params;
  if (cfg.family == "chihara") {
    ChiharaParams p{P.at("mu"), P.at("gamma")};
    double lam = P.at("lambda");
    for (int n = 0; n <= cfg.nmax; ++n)
      add_row(n, chihara_eval(n, lam, p, EvalMethod::recurrence),
              chihara_eval(n, lam, p, EvalMethod::closed));
  } else if (cfg.family == "big-jacobi") {
    BigJacobiParams p{P.at("a"), P.at("b"), P.at("c")};
    double x = P.at("x");
    for (int n = 0; n <= cfg.nmax; ++n)
      add_row(n, bigjacobi_eval(n, x, p, EvalMethod::recurrence),
              bigjacobi_eval(n, x, p, EvalMethod::closed));
  } else if (cfg.family == "dual-hahn") {
    int N = as_int(P.at("N"), "N");
    if (cfg.nmax > N)
      throw ParameterError("dual-hahn degrees stop at N; got nmax = " +
                           std::to_string(cfg.nmax) + " > N = " + std::to_string(N));
    DualHahnParams p{P.at("eta"), P.at("xi"), N};
    double x = P.at("x");
    for (int n = 0; n <= cfg.nmax; ++n)
      add_row(n, dualhahn_eval(n, x, p, EvalMethod::recurrence),
              dualhahn_eval(n, x, p, EvalMethod::closed));
  } else if (cfg.family == "bannai-ito") {
    BannaiItoParams p{P.at("rho1"), P.at("rho2"), P.at("r1"), P.at("r2")};
    double x = P.at("x");
    for (int n = 0; n <= cfg.nmax; ++n)
      add_row(n, bannai_ito_eval(n, x, p, EvalMethod::recurrence),
              bannai_ito_eval(n, x, p, EvalMethod::closed));
  } else {
    throw ParameterError("unknown family '" + cfg.family + "'");
  }

  all_pass = max_delta <= cfg.tol;
  ordered_json summary;
  summary["rows"] = entries.size();
  summary["max_delta"] = max_delta;
  summary["pass"] = all_pass;
  ordered_json report;
  report["entries"] = entries;
  report["summary"] = summary;
  return report;
}

// ---- gram ------------------------------------------------------------

// Shared emitter: matrix entries on the upper triangle against their target,
// off-diagonal deviations scaled by the geometric mean of the diagonal.
ordered_json gram_report(const Eigen::MatrixXd& G, const std::vector<double>& diag_target,
                         double tol, bool& all_pass) {
  const int dim = static_cast<int>(G.rows());
  ordered_json entries = ordered_json::array();
  double max_dev = 0.0;
  for (int n = 0; n < dim; ++n) {
    for (int m = n; m < dim; ++m) {
      double expected = (n == m) ? diag_target[n] : 0.0;
      double dev;
      if (n == m) {
        dev = std::abs(G(n, n) - expected) / std::abs(expected);
      } else {
        dev = std::abs(G(n, m)) / std::sqrt(diag_target[n] * diag_target[m]);
      }
      max_dev = std::max(max_dev, dev);
      ordered_json e;
      e["n"] = n;
      e["m"] = m;
      e["value"] = G(n, m);
      e["expected"] = expected;
      e["deviation"] = dev;
      e["pass"] = dev <= tol;
      entries.push_back(e);
    }
  }
  all_pass = max_dev <= tol;
  ordered_json summary;
  summary["rows"] = entries.size();
  summary["max_deviation"] = max_dev;
  summary["pass"] = all_pass;
  ordered_json report;
  report["entries"] = entries;
  report["summary"] = summary;
  return report;
}

Eigen::MatrixXd discrete_gram(const std::vector<double>& grid, const std::vector<double>& weights,
                              int dim, const std::function<double(int, double)>& poly) {
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t s = 0; s < grid.size(); ++s) {
    Eigen::VectorXd v(dim);
    for (int n = 0; n < dim; ++n) v(n) = poly(n, grid[s]);
    G += weights[s] * v * v.transpose();
  }
  return G;
}

ordered_json cmd_gram(RunConfig& cfg, bool& all_pass) {
  const auto& P = cfg.params;
  if (cfg.family == "chihara") {
    ChiharaParams p{P.at("mu"), P.at("gamma")};
    Eigen::MatrixXd G = chihara_gram(cfg.nmax, p);
    std::vector<double> ones(cfg.nmax + 1, 1.0);
    return gram_report(G, ones, cfg.tol, all_pass);
  }
  if (cfg.family == "big-jacobi") {
    BigJacobiParams p{P.at("a"), P.at("b"), P.at("c")};
    Eigen::MatrixXd G = bigjacobi_gram(cfg.nmax, p);
    double pref = bigjacobi_ortho_prefactor(p);
    std::vector<double> target(cfg.nmax + 1);
    for (int n = 0; n <= cfg.nmax; ++n) target[n] = pref * bigjacobi_norm(n, p.a, p.b);
    return gram_report(G, target, cfg.tol, all_pass);
  }
  if (cfg.family == "dual-hahn") {
    int N = as_int(P.at("N"), "N");
    DualHahnParams p{P.at("eta"), P.at("xi"), N};
    auto od = dualhahn_ortho(p);
    Eigen::MatrixXd G = discrete_gram(od.points, od.weights, N + 1, [&](int n, double x) {
      return dualhahn_eval(n, x, p);
    });
    return gram_report(G, od.norms, cfg.tol, all_pass);
  }
  if (cfg.family == "bannai-ito") {
    int N = as_int(P.at("N"), "N");
    BannaiItoParams p{P.at("rho1"), P.at("rho2"), P.at("r1"), P.at("r2")};
    bi_truncation(p, N);  // diagnose a missing truncation condition by name
    auto od = bi_ortho(p, N);
    Eigen::MatrixXd G = discrete_gram(od.points, od.weights, N + 1, [&](int n, double x) {
      return bannai_ito_eval(n, x, p);
    });
    return gram_report(G, od.norms, cfg.tol, all_pass);
  }
  throw ParameterError("unknown family '" + cfg.family + "'");
}

// ---- convcheck -------------------------------------------------------

// Parameter boxes for random draws. Spectral points are rejected until the
// nesting |c| < |lambda1| < |lambda2| (< |lambda3|) holds; rejections are
// counted and reported.
struct DrawCtx {
  CounterRng rng;
  long long rejected = 0;

  explicit DrawCtx(std::uint64_t seed) : rng(seed) {}

  int next_index(int hi) {  // uniform on {0, ..., hi}
    return static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(hi + 1));
  }
  double mu() { return rng.next_in(0.15, 1.25); }
  int sign() { return rng.next_sign(); }

  SpectralPoint2 point2() {
    for (int attempt = 0; attempt < 100000; ++attempt) {
      double c = rng.next_in(-0.8, 0.8);
      double l1 = rng.next_in(-2.2, 2.2);
      double l2 = rng.next_in(-3.0, 3.0);
      if (std::abs(c) < std::abs(l1) && std::abs(l1) < std::abs(l2))
        return SpectralPoint2(l1, l2, c);
      ++rejected;
    }
    throw ConvergenceError("domain rejection limit exceeded drawing a 2-variable point");
  }

  SpectralPoint3 point3() {
    for (int attempt = 0; attempt < 100000; ++attempt) {
      double c = rng.next_in(-0.8, 0.8);
      double l1 = rng.next_in(-2.2, 2.2);
      double l2 = rng.next_in(-3.0, 3.0);
      double l3 = rng.next_in(-3.8, 3.8);
      if (std::abs(c) < std::abs(l1) && std::abs(l1) < std::abs(l2) &&
          std::abs(l2) < std::abs(l3))
        return SpectralPoint3(l1, l2, l3, c);
      ++rejected;
    }
    throw ConvergenceError("domain rejection limit exceeded drawing a 3-variable point");
  }
};

ordered_json cmd_convcheck(RunConfig& cfg, bool& all_pass) {
  DrawCtx ctx(cfg.seed);
  ordered_json entries = ordered_json::array();
  int passes = 0;
  double max_abs = 0.0, max_rel = 0.0;

  for (int d = 0; d < cfg.draws; ++d) {
    ResidualReport r;
    if (cfg.identity == "conv1" || cfg.identity == "conv1-inverse") {
      IrrepLabel r1{ctx.mu(), ctx.sign()};
      IrrepLabel r2{ctx.mu(), ctx.sign()};
      auto pt = ctx.point2();
      int total = ctx.next_index(cfg.nmax);
      int k = ctx.next_index(total);
      if (cfg.identity == "conv1")
        r = conv1_residual(total - k, k, pt, r1, r2, cfg.tol);
      else
        r = conv1_inverse_residual(total - k, k, pt, r1, r2, cfg.tol);
    } else if (cfg.identity == "conv2" || cfg.identity == "conv2-inverse") {
      IrrepLabel r1{ctx.mu(), ctx.sign()};
      IrrepLabel r2{ctx.mu(), ctx.sign()};
      IrrepLabel r3{ctx.mu(), ctx.sign()};
      auto pt = ctx.point3();
      int j123 = ctx.next_index(cfg.nmax);
      int j12 = ctx.next_index(j123);
      int j23 = ctx.next_index(j123);
      auto dir = cfg.identity == "conv2" ? Conv2Direction::forward : Conv2Direction::inverse;
      r = conv2_residual(ThreeFoldLabels(j12, j23, j123), pt, r1, r2, r3, dir, cfg.tol);
    } else if (cfg.identity == "bilinear") {
      IrrepLabel r1{ctx.mu(), ctx.sign()};
      IrrepLabel r2{ctx.mu(), ctx.sign()};
      auto pt = ctx.point2();
      double z1 = ctx.rng.next_in(-0.6, 0.6);
      double z2 = ctx.rng.next_in(-0.6, 0.6);
      r = bilinear_genfun_residual(pt, z1, z2, r1, r2, cfg.nmax, cfg.tol);
    } else {
      throw ParameterError("unknown identity '" + cfg.identity + "'");
    }
    entries.push_back(residual_entry(d, r));
    if (r.pass) ++passes;
    max_abs = std::max(max_abs, r.abs_residual);
    max_rel = std::max(max_rel, r.rel_residual);
  }

  all_pass = passes == cfg.draws;
  ordered_json summary;
  summary["draws"] = cfg.draws;
  summary["rejected_draws"] = ctx.rejected;
  summary["passes"] = passes;
  summary["failures"] = cfg.draws - passes;
  summary["max_abs_residual"] = max_abs;
  summary["max_rel_residual"] = max_rel;
  summary["pass"] = all_pass;
  ordered_json report;
  report["entries"] = entries;
  report["summary"] = summary;
  return report;
}

// ---- coupling --------------------------------------------------------

ordered_json cmd_coupling(RunConfig& cfg, bool& all_pass) {
  const auto& P = cfg.params;
  ordered_json entries = ordered_json::array();
  double max_dev = 0.0;

  if (cfg.identity == "cg") {
    IrrepLabel r1{P.at("mu1"), as_sign(P.at("eps1"), "eps1")};
    IrrepLabel r2{P.at("mu2"), as_sign(P.at("eps2"), "eps2")};
    Eigen::MatrixXd M = cg_matrix(cfg.nmax, r1, r2);
    for (int n1 = 0; n1 <= cfg.nmax; ++n1) {
      for (int j = 0; j <= cfg.nmax; ++j) {
        ordered_json e;
        e["n1"] = n1;
        e["j"] = j;
        e["value"] = M(n1, j);
        entries.push_back(e);
      }
    }
    Eigen::MatrixXd dev = M.transpose() * M - Eigen::MatrixXd::Identity(M.cols(), M.cols());
    max_dev = dev.cwiseAbs().maxCoeff();
  } else if (cfg.identity == "racah") {
    double mu1 = P.at("mu1"), mu2 = P.at("mu2"), mu3 = P.at("mu3");
    int eps3 = as_sign(P.at("eps3"), "eps3");
    int j123 = cfg.nmax;
    Eigen::MatrixXd W(j123 + 1, j123 + 1);
    for (int j12 = 0; j12 <= j123; ++j12) {
      for (int j23 = 0; j23 <= j123; ++j23) {
        W(j12, j23) = racah_coefficient(ThreeFoldLabels(j12, j23, j123), mu1, mu2, mu3, eps3);
        ordered_json e;
        e["j12"] = j12;
        e["j23"] = j23;
        e["value"] = W(j12, j23);
        entries.push_back(e);
      }
    }
    Eigen::MatrixXd dev = W * W.transpose() - Eigen::MatrixXd::Identity(j123 + 1, j123 + 1);
    max_dev = dev.cwiseAbs().maxCoeff();
  } else {
    throw ParameterError("unknown identity '" + cfg.identity + "' (accepts: cg, racah)");
  }

  all_pass = max_dev <= cfg.tol;
  ordered_json summary;
  summary["rows"] = entries.size();
  summary["max_orthogonality_deviation"] = max_dev;
  summary["pass"] = all_pass;
  ordered_json report;
  report["entries"] = entries;
  report["summary"] = summary;
  return report;
}

// ---- resolution and dispatch ------------------------------------------

std::map<std::string, double> default_params(const std::string& command,
                                             const std::string& family,
                                             const std::string& identity) {
  if (command == "eval" || command == "gram") {
    bool eval = command == "eval";
    if (family == "chihara") {
      std::map<std::string, double> d{{"mu", 0.7}, {"gamma", 0.3}};
      if (eval) d["lambda"] = 1.2;
      return d;
    }
    if (family == "big-jacobi") {
      std::map<std::string, double> d{{"a", 0.5}, {"b", 1.2}, {"c", 0.3}};
      if (eval) d["x"] = 0.7;
      return d;
    }
    if (family == "dual-hahn") {
      std::map<std::string, double> d{{"eta", 0.3}, {"xi", 0.7}, {"N", 4}};
      if (eval) d["x"] = 1.0;
      return d;
    }
    if (family == "bannai-ito") {
      std::map<std::string, double> d{
          {"rho1", 1.1}, {"rho2", 4.2}, {"r1", 0.2}, {"r2", 3.6}, {"N", 4}};
      if (eval) d["x"] = 0.5;
      return d;
    }
    throw ParameterError("unknown family '" + family +
                         "' (accepts: chihara, big-jacobi, dual-hahn, bannai-ito)");
  }
  if (command == "coupling") {
    if (identity == "cg")
      return {{"mu1", 0.6}, {"mu2", 0.9}, {"eps1", 1}, {"eps2", 1}};
    return {{"mu1", 0.6}, {"mu2", 0.9}, {"mu3", 1.3}, {"eps3", 1}};
  }
  return {};  // convcheck draws its parameters
}

int default_nmax(const RunConfig& cfg) {
  if (cfg.command == "eval") return 6;
  if (cfg.command == "gram") return 4;
  if (cfg.command == "coupling") return cfg.identity == "cg" ? 6 : 4;
  // convcheck: degree cap per identity; for bilinear this is the truncation
  // order of the coupled-label sum.
  if (cfg.identity == "conv2" || cfg.identity == "conv2-inverse") return 5;
  if (cfg.identity == "bilinear") return 40;
  return 8;
}

double default_tol(const RunConfig& cfg) {
  if (cfg.command == "eval") return 1e-9;
  if (cfg.command == "gram")
    return (cfg.family == "dual-hahn" || cfg.family == "bannai-ito") ? 1e-10 : 1e-8;
  if (cfg.command == "coupling") return 1e-10;
  if (cfg.identity == "conv2" || cfg.identity == "conv2-inverse") return 1e-8;
  if (cfg.identity == "bilinear") return 1e-7;
  return 1e-9;
}

int run_command(RunConfig cfg, std::ostream& out, std::ostream& err) {
  if (cfg.nmax < 0) throw ParameterError("--nmax must be nonnegative");
  if (cfg.draws < 1 && cfg.command == "convcheck")
    throw ParameterError("--draws must be at least 1");
  if (!(cfg.tol > 0.0)) throw ParameterError("--tol must be positive");

  bool all_pass = false;
  ordered_json body;
  if (cfg.command == "eval")
    body = cmd_eval(cfg, all_pass);
  else if (cfg.command == "gram")
    body = cmd_gram(cfg, all_pass);
  else if (cfg.command == "convcheck")
    body = cmd_convcheck(cfg, all_pass);
  else
    body = cmd_coupling(cfg, all_pass);

  ordered_json report;
  report["version"] = kCliVersion;
  report["config"] = config_json(cfg);
  report["entries"] = body["entries"];
  report["summary"] = body["summary"];

  std::string text =
      cfg.format == "csv" ? to_csv(report) : report.dump(2) + "\n";
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw ParameterError("cannot open output file '" + cfg.out_path + "'");
    f << text;
    if (!f) throw ParameterError("failed writing output file '" + cfg.out_path + "'");
  }
  (void)err;
  return all_pass ? 0 : 1;
}

// Every subcommand accepts the full flag set; flags that do not apply to a
// command are ignored. --identity is membership-checked where it is read.
void add_common_options(CLI::App* sub, RawOptions& raw,
                        const std::vector<std::string>& identities) {
  sub->add_option("--family", raw.family,
                  "polynomial family: chihara, big-jacobi, dual-hahn, bannai-ito");
  auto* id = sub->add_option("--identity", raw.identity,
                             "which identity or coefficient set to check");
  if (!identities.empty()) id->check(CLI::IsMember(identities));
  sub->add_option("--params", raw.params, "comma-separated key=value parameter overrides");
  sub->add_option("--nmax", raw.nmax, "degree bound (meaning depends on the command)");
  sub->add_option("--draws", raw.draws, "number of random draws");
  sub->add_option("--seed", raw.seed, "64-bit unsigned RNG seed");
  sub->add_option("--tol", raw.tol, "tolerance override (must be positive)");
  sub->add_option("--format", raw.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", raw.out_path, "write the report to this file instead of stdout");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"m1poly: evaluation and verification tools for -1 orthogonal polynomials"};
  app.require_subcommand(1);

  RawOptions raw;
  auto* eval = app.add_subcommand(
      "eval", "tabulate one family by recurrence and closed form, with cross-method deltas");
  add_common_options(eval, raw, {});
  auto* gram = app.add_subcommand(
      "gram", "orthogonality check: Gram matrix against the family's normalization");
  add_common_options(gram, raw, {});
  auto* convcheck = app.add_subcommand(
      "convcheck", "randomized residual checks of the convolution and bilinear identities");
  add_common_options(convcheck, raw,
                     {"conv1", "conv1-inverse", "conv2", "conv2-inverse", "bilinear"});
  auto* coupling = app.add_subcommand(
      "coupling", "coefficient tables with orthogonality residuals (cg or racah)");
  add_common_options(coupling, raw, {"cg", "racah"});

  std::vector<const char*> argv;
  argv.push_back("m1poly");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    RunConfig cfg;
    if (eval->parsed())
      cfg.command = "eval";
    else if (gram->parsed())
      cfg.command = "gram";
    else if (convcheck->parsed())
      cfg.command = "convcheck";
    else
      cfg.command = "coupling";

    cfg.family = (cfg.command == "eval" || cfg.command == "gram") ? raw.family : "";
    if (cfg.command == "convcheck")
      cfg.identity = raw.identity.empty() ? "conv1" : raw.identity;
    else if (cfg.command == "coupling")
      cfg.identity = raw.identity.empty() ? "cg" : raw.identity;

    cfg.seed = raw.seed;
    cfg.draws = cfg.command == "convcheck" ? raw.draws.value_or(20) : 0;
    cfg.nmax = raw.nmax.value_or(default_nmax(cfg));
    cfg.tol = raw.tol.value_or(default_tol(cfg));
    cfg.format = raw.format;
    cfg.out_path = raw.out_path;
    cfg.params = resolve_params(default_params(cfg.command, cfg.family, cfg.identity),
                                parse_params(raw.params),
                                cfg.command + (cfg.family.empty() ? "" : " " + cfg.family) +
                                    (cfg.identity.empty() ? "" : " " + cfg.identity));
    return run_command(std::move(cfg), out, err);
  } catch (const NumericError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace m1poly
