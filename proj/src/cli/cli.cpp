#include "fewbody/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>

#include "fewbody/errors.hpp"
#include "fewbody/integrals.hpp"
#include "fewbody/numerics.hpp"
#include "fewbody/sepvar.hpp"
#include "fewbody/spectra.hpp"
#include "fewbody/verify.hpp"

namespace fewbody {

namespace {

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A claimed invariant that did not hold.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParamFlags {
  std::string file, kase;
  std::optional<std::string> m, m1, m2, m3, a, b, c, omega, A, A12, A13, A23, rho23;
  std::optional<int> d, N;
};

struct Common {
  std::string out, format = "json";
  std::uint64_t seed = 1;
};

void add_param_flags(CLI::App* sub, ParamFlags& f, bool rho_is_range) {
  sub->add_option("--params", f.file, "JSON parameter file (flags override it)");
  sub->add_option("--case", f.kase, "model case, e.g. general3, isotropic3, molecular3, two_body_qes");
  sub->add_option("--m", f.m, "shared mass of the case");
  sub->add_option("--m1", f.m1, "mass 1 (rational or inf)");
  sub->add_option("--m2", f.m2, "mass 2");
  sub->add_option("--m3", f.m3, "mass 3");
  sub->add_option("--a", f.a, "spring constant a");
  sub->add_option("--b", f.b, "spring constant b");
  sub->add_option("--c", f.c, "spring constant c");
  sub->add_option("--omega", f.omega, "frequency");
  sub->add_option("--d", f.d, "space dimension");
  sub->add_option("--N", f.N, "QES level / polynomial degree");
  sub->add_option("--A", f.A, "two-body sextic coupling");
  sub->add_option("--A12", f.A12, "primitive QES coupling A12");
  sub->add_option("--A13", f.A13, "primitive QES coupling A13");
  sub->add_option("--A23", f.A23, "primitive QES coupling A23");
  sub->add_option("--rho23", f.rho23, rho_is_range ? "rho23 values, lo:hi:step" : "fixed rho23 (molecular)");
}

void add_common(CLI::App* sub, Common& c, bool tabular) {
  sub->add_option("--out", c.out, "output path (default: standard output)");
  auto* fmt = sub->add_option("--format", c.format, tabular ? "json or csv" : "json");
  fmt->check(CLI::IsMember(tabular ? std::vector<std::string>{"json", "csv"} : std::vector<std::string>{"json"}));
  sub->add_option("--seed", c.seed, "seed for all random draws");
}

Mass parse_mass(const std::string& s) {
  std::string l = s;
  std::transform(l.begin(), l.end(), l.begin(), ::tolower);
  if (l == "inf" || l == "infinity") return Mass::inf();
  return Mass{Rational::parse(s), false};
}

Params resolve_params(const ParamFlags& f, Case fallback, bool use_rho23) {
  json j = json::object();
  if (!f.file.empty()) {
    std::ifstream in(f.file);
    if (!in) throw InputError("cannot read params file " + f.file);
    j = json::parse(in);
  }
  if (!f.kase.empty())
    j["case"] = f.kase;
  else if (!j.contains("case"))
    j["case"] = case_name(fallback);
  if (f.m) j["m"] = *f.m;
  Params p = params_from_json(j);
  const std::optional<std::string>* ms[3] = {&f.m1, &f.m2, &f.m3};
  for (int i = 0; i < 3; ++i)
    if (*ms[i]) p.m[i] = parse_mass(**ms[i]);
  if (f.a) {
    p.a = Rational::parse(*f.a);
    if (!f.b) p.b = p.a;
    if (!f.c && p.kind != Case::Molecular3) p.c = p.a;
  }
  if (f.b) p.b = Rational::parse(*f.b);
  if (f.c) p.c = Rational::parse(*f.c);
  if (f.omega) p.omega = Rational::parse(*f.omega);
  if (f.d) p.d = *f.d;
  if (f.N) p.N = *f.N;
  if (f.A) p.A = Rational::parse(*f.A);
  const std::optional<std::string>* as[3] = {&f.A12, &f.A13, &f.A23};
  for (int i = 0; i < 3; ++i)
    if (*as[i]) p.A3[i] = Rational::parse(**as[i]);
  if (use_rho23 && f.rho23) p.rho23 = Rational::parse(*f.rho23);
  validate(p);
  return p;
}

json header(const std::string& command, const json& params, std::uint64_t seed) {
  json j;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["params"] = params;
  j["seed"] = seed;
  return j;
}

struct Result {
  json results;
  std::optional<std::string> csv;
  std::vector<std::string> failed;  // named invariants that did not hold
};

Result cmd_spectrum(const Params& p, std::optional<int> N) {
  const int n = N ? *N : p.N;
  Result r;
  r.results = to_json(compute_spectrum(p, n));
  return r;
}

Result cmd_integrals(const Params& p) {
  const IntegralInputs in = integral_inputs(p);
  const auto set = build_integral_set(in);
  const auto verdict = classify_superintegrability(in.m, *in.nu, in.d, in.omega);
  Result r;
  auto claim = [&](json& list, const std::string& name, bool ok) {
    list.push_back({{"claim", name}, {"holds", ok}});
    if (!ok) r.failed.push_back(name);
  };
  json claims = json::array();
  for (const std::string x : {"S2", "S3", "F1", "F2", "F3", "L0"})
    claim(claims, "{S1, " + x + "} = 0", conservation_check_classical(set.S1, set.classical(x)).is_zero());
  for (const std::string x : {"S2q", "S3q", "F1q", "F2q", "F3q", "L0q"})
    claim(claims, "[S1q, " + x + "] = 0", conservation_check_quantum(set.S1q, set.quantum(x)).is_zero());
  json triplets = json::array();
  for (const auto& t : involution_triplets(set)) {
    triplets.push_back({{"name", t.name}, {"members", t.members}, {"in_involution", t.in_involution()}});
    if (!t.in_involution()) r.failed.push_back("triplet " + t.name + " in involution");
  }
  // Regime claims: all integrals under the full relations, the (S3t, F1, L0) triplet under m2 nu13 = m3 nu12.
  std::vector<std::string> claimed;
  if (verdict.kind == Superintegrability::Maximal)
    claimed = {"L0", "S2t", "S3t", "F1", "F2", "F3"};
  else if (verdict.kind == Superintegrability::Minimal && verdict.relations[0])
    claimed = {"S3t", "F1", "L0"};
  for (const auto& x : claimed)
    claim(claims, "{H, " + x + "} = 0", conservation_check_classical(*set.H, set.classical(x)).is_zero());
  json residuals = json::object();
  for (const std::string x : {"L0", "S2t", "S3t", "F1", "F2", "F3"})
    residuals[x] = residual_json(conservation_check_classical(*set.H, set.classical(x)));
  r.results = {{"verdict", to_json(verdict)}, {"claims", claims}, {"triplets", triplets}, {"brackets_with_H", residuals}};
  return r;
}

Result cmd_sepvar(const Params& p, std::uint64_t seed, int points) {
  const IntegralInputs in = integral_inputs(p);
  const WMap w = build_wmap(in.m);
  const auto push = verify_pushforward(in.m, in.d, seed, points);
  const auto form = match_separated_template(opham_operator(in.m, in.d));
  const auto pot = potential_in_w(in.m, *in.nu, in.omega);
  Result r;
  r.results = {{"w1", w.w1.to_string()},
               {"w2", w.w2.to_string()},
               {"w3", w.w3.to_string()},
               {"pushforward", to_json(push)},
               {"template", to_json(form)},
               {"potential", to_json(pot)}};
  if (!push.ok) r.failed.push_back("push-forward of the radial operator");
  if (!pot.reproduces_potential) r.failed.push_back("w-expression reproduces V");
  return r;
}

std::vector<double> to_doubles(const std::vector<Rational>& v) {
  std::vector<double> out;
  for (const auto& x : v) out.push_back(x.to_double());
  return out;
}

Result cmd_bo(const Params& p, const std::string& grid, double mu_lo, double mu_hi, int mu_points) {
  const auto m1 = to_doubles(parse_range(grid));
  const auto report = bo_energies(p);
  const auto rows = bo_m1_scan(p, m1);
  const auto scan = bo_mu_scan(p, mu_lo, mu_hi, mu_points);
  Result r;
  r.results = {{"energies", to_json(report)}, {"m1_scan", to_json(rows, "m1", "gap")}, {"mu_scan", to_json(scan, "mu", "gap")}};
  if (m1.size() >= 6) {
    const auto fit = bo_series_fit(p, m1);
    r.results["fit"] = to_json(fit);
  }
  bool decreasing = true;
  for (std::size_t i = 0; i + 1 < scan.size(); ++i) decreasing = decreasing && std::abs(scan[i + 1].y) < std::abs(scan[i].y);
  r.results["gap_decreasing_in_mu"] = decreasing;
  r.csv = to_csv(rows, "m1", "gap");
  return r;
}

Result cmd_qes(const Params& p, int npoints) {
  if (p.kind != Case::TwoBodyQES) throw InputError("qes: case two_body_qes required");
  const auto block = qes_2body_block(p);
  std::vector<double> alg;
  for (const auto& e : block.physical)
    for (int k = 0; k < e.multiplicity; ++k) alg.push_back(e.approx());
  std::sort(alg.begin(), alg.end());
  const auto fd = fd_radial_eigen(radial_problem(p), default_grid(p, npoints), static_cast<int>(alg.size()));
  constexpr double tol = 1e-6;
  Result r;
  json levels = json::array();
  for (std::size_t i = 0; i < alg.size(); ++i) {
    const double rel = std::abs(fd[i] - alg[i]) / std::max(1e-300, std::abs(alg[i]));
    levels.push_back({{"level", i}, {"algebraic", alg[i]}, {"grid", fd[i]}, {"relative_difference", rel}});
    if (!(rel < tol)) r.failed.push_back("QES level " + std::to_string(i) + " agrees with the grid oracle");
  }
  r.results = {{"block", to_json(block)}, {"levels", levels}, {"tolerance", tol}};
  return r;
}

Result cmd_curve(const Params& p, const std::string& range) {
  const auto rows = potential_curve(p, parse_range(range));
  Result r;
  r.results = {{"rows", to_json(rows)}};
  r.csv = to_csv(rows);
  return r;
}

Result cmd_verify_all(std::uint64_t seed, int only) {
  std::vector<int> ids;
  if (only) {
    ids.push_back(only);
  } else {
    ids.resize(kCriterionCount);
    std::iota(ids.begin(), ids.end(), 1);
  }
  Result r;
  r.results = json::array();
  for (const auto& c : run_criteria(ids, seed)) {
    r.results.push_back(to_json(c));
    for (const auto& f : c.failures) r.failed.push_back("criterion " + std::to_string(c.id) + ": " + f);
  }
  return r;
}

}  // namespace

CliOutcome run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Exact and numeric checks of the two- and three-body oscillator models", "fewbody"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  ParamFlags pf;
  Common common;
  std::optional<int> spectrum_N;
  int sep_points = 50, qes_points = 4000, only = 0, mu_points = 31;
  double mu_lo = 0.5, mu_hi = 500;
  std::string curve_range = "0:4:1/2", m1_grid = "0.00001:0.0001:0.00001";

  auto* spectrum = app.add_subcommand("spectrum", "exact spectrum on the invariant polynomial space");
  auto* integrals = app.add_subcommand("integrals", "integrals, brackets and superintegrability verdict");
  auto* sepvar = app.add_subcommand("sepvar", "w-coordinates, push-forward check, separated template");
  auto* bo = app.add_subcommand("bo", "Born-Oppenheimer gap, series fit and mu scan");
  auto* qes = app.add_subcommand("qes", "two-body QES block against the grid oracle");
  auto* curve = app.add_subcommand("curve", "molecular ground-state potential curve");
  auto* verify = app.add_subcommand("verify-all", "run the full invariant battery");

  for (auto* s : {spectrum, integrals, sepvar, bo, qes, curve}) add_param_flags(s, pf, s == curve);
  for (auto* s : {spectrum, integrals, sepvar, bo, qes, curve, verify}) add_common(s, common, s == bo || s == curve);
  spectrum->add_option("--degree", spectrum_N, "degree of the polynomial space (default: N)");
  sepvar->add_option("--points", sep_points, "sample points per test function")->check(CLI::PositiveNumber);
  bo->add_option("--m1-grid", m1_grid, "m1 values for the fit, lo:hi:step");
  bo->add_option("--mu-lo", mu_lo, "smallest mu of the scan");
  bo->add_option("--mu-hi", mu_hi, "largest mu of the scan");
  bo->add_option("--mu-points", mu_points, "scan points");
  qes->add_option("--npoints", qes_points, "grid points of the coarse grid");
  verify->add_option("--only", only, "single criterion 1-9")->check(CLI::Range(1, kCriterionCount));

  CliOutcome out;
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out.artifact = app.help();
    return out;
  } catch (const CLI::CallForVersion&) {
    out.artifact = std::string(kToolVersion) + "\n";
    return out;
  } catch (const CLI::ParseError& e) {
    out.exit_code = kExitInputError;
    out.message = std::string(e.what()) + "\n";
    return out;
  }
  out.out_path = common.out;

  auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    Result r;
    json params = nullptr;
    if (command == "verify-all") {
      r = cmd_verify_all(common.seed, only);
    } else {
      const Case fallback = command == "curve" ? Case::Molecular3 : command == "qes" ? Case::TwoBodyQES : Case::General3;
      ParamFlags flags = pf;
      if (command == "spectrum" && flags.kase.empty() && flags.file.empty()) throw InputError("spectrum: --case or --params required");
      if (command == "qes" && !flags.A && flags.file.empty()) flags.A = "1";
      if (command == "curve" && !flags.rho23) flags.rho23 = curve_range;
      const Params p = resolve_params(flags, fallback, command != "curve");
      params = to_json(p);
      if (command == "spectrum") r = cmd_spectrum(p, spectrum_N);
      if (command == "integrals") r = cmd_integrals(p);
      if (command == "sepvar") r = cmd_sepvar(p, common.seed, sep_points);
      if (command == "bo") r = cmd_bo(p, m1_grid, mu_lo, mu_hi, mu_points);
      if (command == "qes") r = cmd_qes(p, qes_points);
      if (command == "curve") r = cmd_curve(p, *flags.rho23);
    }
    if (common.format == "csv") {
      out.artifact = *r.csv;
    } else {
      json report = header(command, params, common.seed);
      report["results"] = r.results;
      report["failed_invariants"] = r.failed;
      out.artifact = report.dump(2) + "\n";
    }
    if (!r.failed.empty()) {
      out.exit_code = kExitVerificationFailed;
      for (const auto& f : r.failed) out.message += "verification failed: " + f + "\n";
    }
  } catch (const InvariantSubspaceViolation& e) {
    out.exit_code = kExitVerificationFailed;
    out.message = std::string("verification failed: ") + e.what() + "\n";
  } catch (const TemplateMismatch& e) {
    out.exit_code = kExitVerificationFailed;
    out.message = std::string("verification failed: ") + e.what() + "\n";
  } catch (const std::invalid_argument& e) {
    out.exit_code = kExitInputError;
    out.message = std::string("input error: ") + e.what() + "\n";
  } catch (const std::domain_error& e) {
    out.exit_code = kExitInputError;
    out.message = std::string("input error: ") + e.what() + "\n";
  } catch (const json::exception& e) {
    out.exit_code = kExitInputError;
    out.message = std::string("input error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    out.exit_code = kExitVerificationFailed;
    out.message = std::string("error: ") + e.what() + "\n";
  }
  return out;
}

}  // namespace fewbody
