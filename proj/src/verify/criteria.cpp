#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <map>

#include "fewbody/errors.hpp"
#include "fewbody/integrals.hpp"
#include "fewbody/numerics.hpp"
#include "fewbody/sepvar.hpp"
#include "fewbody/spectra.hpp"
#include "fewbody/verify.hpp"

namespace fewbody {

namespace {

// Pinned tolerances and budgets.
constexpr double kQesRelTol = 1e-6;
constexpr double kConvergenceRatio = 4.0;
constexpr double kConvergenceSlack = 0.5;
constexpr double kC1RelTol = 1e-4;
constexpr double kC2RelTol = 1e-3;
constexpr double kOracleTol = 1e-9;

/// Counts checks and groups failures by claim.
class Tally {
 public:
  void check(bool ok, const std::string& claim, const std::string& where = {}) {
    ++checks_;
    if (ok) return;
    auto& f = failed_[claim];
    if (f.count++ == 0) f.first = where;
  }
  int checks() const { return checks_; }
  std::vector<std::string> lines() const {
    std::vector<std::string> out;
    for (const auto& [claim, f] : failed_) {
      std::string s = claim + " (" + std::to_string(f.count) + " failing";
      if (!f.first.empty()) s += ", first at " + f.first;
      out.push_back(s + ")");
    }
    return out;
  }

 private:
  struct Fail {
    int count = 0;
    std::string first;
  };
  int checks_ = 0;
  std::map<std::string, Fail> failed_;
};

Rational draw(RationalSampler& rs) { return Rational(rs.next_int(1, 9), rs.next_int(1, 5)); }
Masses random_masses(RationalSampler& rs) { return {draw(rs), draw(rs), draw(rs)}; }

NuCoefficients maximal_nu(const Masses& m, const Rational& nu13) {
  return {m[1] * nu13 / m[2], nu13, m[1] * nu13 / m[0]};
}

/// Only m2 nu13 = m3 nu12 holds.
NuCoefficients minimal_nu(const Masses& m, const Rational& nu13, RationalSampler& rs) {
  NuCoefficients nu{m[1] * nu13 / m[2], nu13, draw(rs)};
  while (m[0] * nu.nu23 == m[1] * nu13) nu.nu23 += Rational(1);
  return nu;
}

NuCoefficients generic_nu(const Masses& m, RationalSampler& rs) {
  NuCoefficients nu{draw(rs), draw(rs), draw(rs)};
  while (m[1] * nu.nu13 == m[2] * nu.nu12 || m[0] * nu.nu23 == m[1] * nu.nu13 || m[2] * nu.nu12 == m[0] * nu.nu23)
    nu.nu12 += Rational(1);
  return nu;
}

std::string where(const Params& p, int draw_i) { return case_name(p.kind) + " draw " + std::to_string(draw_i); }

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

// 1. (H - E0) Psi0 = 0 exactly.
void ground_states(Tally& t, json& data, std::uint64_t seed) {
  RationalSampler rs(seed);
  int draws = 0;
  for (Case c : all_cases()) {
    for (int i = 0; i < 20; ++i) {
      Params p = random_params(c, rs, 2 + i % 4);
      if (c == Case::TwoBodyQES) p.N = 0;
      const auto gs = ground_state(p);
      const GaussFn r = build_hamiltonian(p).apply(gs.wavefunction) - gs.energy * gs.wavefunction;
      t.check(r.is_zero(), "(H - E0) Psi0 = 0 for " + case_name(c), where(p, i));
      ++draws;
    }
  }
  data["draws"] = draws;
}

// 2. Gauge rotation reproduces the algebraic operators.
void gauge_identity(Tally& t, json& data, std::uint64_t seed) {
  RationalSampler rs(seed);
  const std::vector<Case> cases{Case::General3, Case::TwoBodyQES, Case::TwoBodyES,
                                Case::Atomic3,  Case::Molecular3, Case::OneDim3};
  for (Case c : cases) {
    for (int i = 0; i < 10; ++i) {
      const Params p = random_params(c, rs, 1 + i % 5);
      const auto gs = ground_state(p);
      const DiffOp shifted = build_hamiltonian(p) - DiffOp::multiply(gs.energy, case_nderiv(c));
      t.check(gauge_conjugate(shifted, gs.wavefunction, Rational(0)) == build_h_algebraic(p),
              "gauge-rotated H equals the algebraic operator for " + case_name(c), where(p, i));
    }
  }
  data["cases"] = static_cast<int>(cases.size());
}

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// 3. P_N preserved; Isotropic3 and TwoBodyES spectra.
void invariant_spaces(Tally& t, json& data, std::uint64_t seed) {
  RationalSampler rs(seed);
  const std::vector<Case> solvable{Case::General3,   Case::EqualMass3, Case::Isotropic3, Case::Atomic3,
                                   Case::Molecular3, Case::OneDim3,    Case::TwoBodyES};
  for (Case c : solvable) {
    for (int i = 0; i < 10; ++i) {
      const Params p = random_params(c, rs, 1 + i % 4);
      const DiffOp h = spectral_operator(p);
      for (int N = 0; N <= 6; ++N) {
        bool ok = true;
        try {
          assemble_matrix(h, enumerate_basis(case_variables(c), case_nderiv(c), N));
        } catch (const InvariantSubspaceViolation&) {
          ok = false;
        }
        t.check(ok, "h preserves P_N for " + case_name(c), where(p, i) + " N=" + std::to_string(N));
      }
    }
  }
  for (int i = 0; i < 2; ++i) {
    const Params p = random_params(Case::Isotropic3, rs);
    for (int N = 0; N <= 5; ++N) {
      std::vector<Rational> want;
      for (int n = 0; n <= N; ++n)
        for (int k = 0; k < (n + 1) * (n + 2) / 2; ++k) want.push_back(Rational(6 * n) * p.a * p.omega);
      t.check(sorted(compute_spectrum(p, N).exact_multiset()) == want,
              "Isotropic3 spectrum 6 a omega (N1+N2+N3) with stars-and-bars multiplicities",
              where(p, i) + " N=" + std::to_string(N));
    }
  }
  for (int i = 0; i < 3; ++i) {
    const Params p = random_params(Case::TwoBodyES, rs, 1 + i);
    std::vector<Rational> want;
    for (int n = 0; n <= 10; ++n) want.push_back(Rational(4 * n) * p.omega);
    t.check(sorted(compute_spectrum(p, 10).exact_multiset()) == want, "TwoBodyES spectrum 4 omega n, n <= 10",
            where(p, i));
  }
  data["max_N"] = 6;
}

// 4. EqualMass3 degree-1 block against a brute-force 3x3 oracle.
void degree_one_block(Tally& t, json& data, std::uint64_t) {
  Params p;
  p.kind = Case::EqualMass3;
  p.m = {Mass{Rational(1), false}, Mass{Rational(1), false}, Mass{Rational(1), false}};
  p.a = Rational(1);
  p.b = Rational(1);
  p.c = Rational(2);
  const auto report = compute_spectrum(p, 1);
  std::vector<Rational> block;
  for (const auto& e : report.gauged)
    if (std::find(e.degrees.begin(), e.degrees.end(), 1) != e.degrees.end())
      for (int k = 0; k < e.multiplicity; ++k) block.push_back(e.value);
  const std::vector<Rational> want{Rational(6), Rational(8), Rational(10)};
  t.check(sorted(block) == want, "exact degree-1 eigenvalues are {6, 8, 10}");

  // Oracle: apply h to rho_j directly and diagonalize the linear part in floating point.
  const auto vars = case_variables(p.kind);
  const DiffOp h = build_h_algebraic(p);
  Eigen::Matrix3d M;
  for (int j = 0; j < 3; ++j) {
    const MultiPoly img = h.apply(MultiPoly::var(vars, j));
    for (int i = 0; i < 3; ++i) M(i, j) = img.coeff(Monomial::unit(3, i)).to_double();
  }
  Eigen::EigenSolver<Eigen::Matrix3d> es(M);
  std::vector<double> ev;
  for (int i = 0; i < 3; ++i) {
    t.check(std::abs(es.eigenvalues()[i].imag()) < kOracleTol, "oracle eigenvalues are real");
    ev.push_back(es.eigenvalues()[i].real());
  }
  std::sort(ev.begin(), ev.end());
  for (int i = 0; i < 3; ++i)
    t.check(std::abs(ev[i] - want[i].to_double()) < kOracleTol, "oracle agrees with the exact block");
  data["exact"] = json::array();
  for (const auto& v : sorted(block)) data["exact"].push_back(to_json(v));
  data["oracle"] = ev;
}

// 5. Integral battery.
void integral_battery(Tally& t, json& data, std::uint64_t seed) {
  RationalSampler rs(seed);
  const std::vector<std::string> maximal_cl{"L0", "S2t", "S3t", "F1", "F2", "F3"};
  const std::vector<std::string> maximal_q{"L0q", "S2tq", "S3tq", "F1q", "F2q", "F3q"};
  for (int i = 0; i < 10; ++i) {
    const Masses m = random_masses(rs);
    const Rational nu13 = draw(rs), omega = draw(rs);
    const auto nu_max = maximal_nu(m, nu13);
    const auto nu_min = minimal_nu(m, draw(rs), rs);
    for (int d = 2; d <= 5; ++d) {
      const std::string at = "mass draw " + std::to_string(i) + " d=" + std::to_string(d);
      const auto free = build_integral_set({m, d, Rational(1), std::nullopt});
      for (const std::string name : {"S2", "S3", "F1", "F2", "F3", "L0"})
        t.check(conservation_check_classical(free.S1, free.classical(name)).is_zero(), "free: {S1, " + name + "} = 0", at);
      t.check(poisson_bracket(free.S2, free.S3).is_zero(), "free: {S2, S3} = 0", at);
      for (const std::string name : {"S2q", "S3q", "F1q", "F2q", "F3q", "L0q"})
        t.check(conservation_check_quantum(free.S1q, free.quantum(name)).is_zero(), "free: [S1q, " + name + "] = 0", at);
      for (const auto& trip : involution_triplets(free)) t.check(trip.in_involution(), "free: triplet " + trip.name, at);

      const auto mx = build_integral_set({m, d, omega, nu_max});
      for (const auto& name : maximal_cl)
        t.check(conservation_check_classical(*mx.H, mx.classical(name)).is_zero(), "maximal: {H, " + name + "} = 0", at);
      for (const auto& name : maximal_q)
        t.check(conservation_check_quantum(*mx.Hq, mx.quantum(name)).is_zero(), "maximal: [Hq, " + name + "] = 0", at);

      const auto mn = build_integral_set({m, d, omega, nu_min});
      for (const std::string name : {"S3t", "F1", "L0"})
        t.check(conservation_check_classical(*mn.H, mn.classical(name)).is_zero(),
                "minimal (m2 nu13 = m3 nu12 only): {H, " + name + "} = 0", at);
      for (const std::string name : {"S3tq", "F1q", "L0q"})
        t.check(conservation_check_quantum(*mn.Hq, mn.quantum(name)).is_zero(),
                "minimal (m2 nu13 = m3 nu12 only): [Hq, " + name + "] = 0", at);
      for (const std::string name : {"F2q", "F3q"}) {
        const DiffOp r = conservation_check_quantum(*mn.Hq, mn.quantum(name));
        t.check(!r.is_zero() && !r.terms().begin()->second.is_zero(),
                "minimal: [Hq, " + name + "] has a nonzero canonical coefficient", at);
      }
    }
    const auto gen = build_integral_set({m, 3, omega, generic_nu(m, rs)});
    for (const std::string name : {"S2", "S3", "L0", "S2t", "S3t", "F1", "F2", "F3"}) {
      const PhasePoly r = conservation_check_classical(*gen.H, gen.classical(name));
      t.check(!r.is_zero() && !r.poly().terms().begin()->second.is_zero(),
              "generic nu: {H, " + name + "} has a nonzero canonical coefficient", "mass draw " + std::to_string(i));
    }
  }
  data["mass_draws"] = 10;
  data["d"] = {2, 3, 4, 5};
}

// 6. Separation of variables.
void separation(Tally& t, json& data, std::uint64_t seed) {
  RationalSampler rs(seed);
  int points = 0;
  for (int i = 0; i < 5; ++i) {
    const Masses m = random_masses(rs);
    for (int d = 2; d <= 4; ++d) {
      const std::string at = "mass draw " + std::to_string(i) + " d=" + std::to_string(d);
      const auto rep = verify_pushforward(m, d, seed + 97 * i + d, 50);
      t.check(rep.ok && rep.points >= 50 && rep.functions >= 10, "push-forward of the radial operator", at);
      points += rep.points;
      const auto s = match_separated_template(opham_operator(m, d));
      const auto closed = separated_closed_form(m, d);
      t.check(s.A == (m[1] + m[2]) / (m[1] * m[2]), "template A = (m2+m3)/(m2 m3)", at);
      t.check(s.B == (m[1] + m[2]) * (m[0] + m[1] + m[2]) / m[0], "template B = (m2+m3)(m1+m2+m3)/m1", at);
      t.check(s.d == Rational(d) && s.w3_second == closed.w3_second && s.w3_first == closed.w3_first,
              "template w3-operator", at);
    }
  }
  int independent = 0;
  for (int i = 0; i < 20; ++i) {
    const Masses m = random_masses(rs);
    NuCoefficients nu{draw(rs), draw(rs), draw(rs)};
    if (i % 2 == 0) nu.nu12 = m[1] * nu.nu13 / m[2];
    const auto wp = potential_in_w(m, nu, draw(rs));
    const bool relation = m[1] * nu.nu13 == m[2] * nu.nu12;
    independent += relation;
    t.check(wp.w3_independent == relation, "w3-independence iff m2 nu13 = m3 nu12", "draw " + std::to_string(i));
    t.check(wp.reproduces_potential, "w-expression reproduces V", "draw " + std::to_string(i));
  }
  data["sample_points"] = points;
  data["w3_independent_draws"] = independent;
}

Params qes_params(int N) {
  Params p;
  p.kind = Case::TwoBodyQES;
  p.m[0] = p.m[1] = Mass{Rational(1), false};
  p.m[2] = Mass::inf();
  p.A = Rational(1);
  p.N = N;
  return p;
}

// 7. QES block against the grid oracle.
void qes_oracle(Tally& t, json& data, std::uint64_t) {
  data["levels"] = json::array();
  for (int N = 0; N <= 2; ++N) {
    const Params p = qes_params(N);
    std::vector<double> alg;
    for (const auto& e : qes_2body_block(p).physical)
      for (int k = 0; k < e.multiplicity; ++k) alg.push_back(e.approx());
    std::sort(alg.begin(), alg.end());
    const auto fd = fd_radial_eigen(radial_problem(p), default_grid(p), N + 1);
    t.check(static_cast<int>(alg.size()) == N + 1, "QES block has N+1 levels", "N=" + std::to_string(N));
    for (int i = 0; i <= N && i < static_cast<int>(alg.size()); ++i) {
      t.check(rel(fd[i], alg[i]) < kQesRelTol, "QES energies agree with the grid oracle",
              "N=" + std::to_string(N) + " level " + std::to_string(i));
      data["levels"].push_back({{"N", N}, {"level", i}, {"algebraic", alg[i]}, {"grid", fd[i]}});
    }
  }
  Params es = qes_params(0);
  es.kind = Case::TwoBodyES;
  es.A = Rational(0);
  for (const Params& p : {es, qes_params(0)}) {
    const auto conv = fd_convergence(radial_problem(p), default_grid(p, 500), 3.0, 0, 3);
    for (double r : conv.ratio)
      t.check(std::abs(r - kConvergenceRatio) <= kConvergenceSlack, "second-order convergence (ratio 4 +- 0.5)",
              case_name(p.kind));
    data["convergence_" + case_name(p.kind)] = conv.ratio;
  }
}

Params bo_params() {
  Params p;
  p.kind = Case::General3;
  p.m = {Mass{Rational(1), false}, Mass{Rational(1), false}, Mass{Rational(1), false}};
  p.d = 3;
  return p;
}

// 8. Born-Oppenheimer series and monotonic gap.
void born_oppenheimer(Tally& t, json& data, std::uint64_t) {
  const Params p = bo_params();
  std::vector<double> grid;
  for (int k = 1; k <= 10; ++k) grid.push_back(1e-5 * k);
  const auto fit = bo_series_fit(p, grid);
  const auto closed = bo_energies(p);
  const double c1 = closed.c1_series.to_double(), c2 = closed.c2_series->to_double();
  t.check(rel(fit.c1, c1) < kC1RelTol, "fitted c1 = omega d (a+b)/2");
  t.check(rel(fit.c2, c2) < kC2RelTol, "fitted c2 = series coefficient");
  const auto scan = bo_mu_scan(p, 0.5, 500.0, 31);
  bool decreasing = true;
  for (std::size_t i = 0; i + 1 < scan.size(); ++i) decreasing = decreasing && std::abs(scan[i + 1].y) < std::abs(scan[i].y);
  t.check(decreasing, "gap strictly decreasing over 3 decades of mu");
  data["fit"] = to_json(fit);
  data["c1_closed"] = c1;
  data["c2_closed"] = c2;
}

// 9. Potential curve at a = b = m = omega = 1.
void potential_curves(Tally& t, json& data, std::uint64_t) {
  for (int d : {2, 3, 4}) {
    Params p;
    p.kind = Case::Molecular3;
    p.m = {Mass{Rational(1), false}, Mass::inf(), Mass::inf()};
    p.c = Rational(0);
    p.d = d;
    const auto rows = potential_curve(p, parse_range("0:4:1/2"));
    for (const auto& r : rows)
      t.check(r.E0 == Rational(2 * d) + Rational(2) * r.rho23, "E0 = 2d + 2 rho23", "d=" + std::to_string(d));
    if (d == 3) {
      t.check(rows[0].E0 == Rational(6) && rows[2].E0 == Rational(8) && rows[4].E0 == Rational(10),
              "d=3 values 6, 8, 10 at rho23 = 0, 1, 2");
      data["d3"] = to_json(rows);
    }
  }
}

struct Spec {
  const char* title;
  double budget;
  std::function<void(Tally&, json&, std::uint64_t)> run;
};

const std::vector<Spec>& specs() {
  static const std::vector<Spec> s{
      {"exact ground states", 10, ground_states},
      {"gauge-rotation identity", 0, gauge_identity},
      {"invariant subspace and spectrum", 60, invariant_spaces},
      {"degree-1 block cross-check", 0, degree_one_block},
      {"integral battery", 120, integral_battery},
      {"separation of variables", 0, separation},
      {"QES oracle agreement", 30, qes_oracle},
      {"Born-Oppenheimer", 5, born_oppenheimer},
      {"potential curve", 0, potential_curves},
  };
  return s;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id must be 1.." + std::to_string(kCriterionCount));
  const auto& spec = specs()[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = spec.title;
  r.budget = spec.budget;
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  try {
    spec.run(t, r.data, seed * 1000003ULL + static_cast<std::uint64_t>(id));
  } catch (const std::exception& e) {
    t.check(false, std::string("unexpected error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.checks = t.checks();
  r.failures = t.lines();
  if (r.budget > 0 && r.seconds > r.budget)
    r.failures.push_back("runtime budget exceeded (" + std::to_string(r.seconds) + " s > " +
                         std::to_string(static_cast<int>(r.budget)) + " s)");
  r.pass = r.failures.empty();
  return r;
}

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, std::uint64_t seed) {
  std::vector<std::future<CriterionResult>> jobs;
  for (int id : ids) jobs.push_back(std::async(std::launch::async, run_criterion, id, seed));
  std::vector<CriterionResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

json to_json(const CriterionResult& r) {
  json j;
  j["id"] = r.id;
  j["title"] = r.title;
  j["pass"] = r.pass;
  j["checks"] = r.checks;
  j["failures"] = r.failures;
  j["data"] = r.data;
  return j;
}

}  // namespace fewbody
