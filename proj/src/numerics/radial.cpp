#include <algorithm>
#include <cmath>
#include <future>

#include "fewbody/errors.hpp"
#include "fewbody/numerics.hpp"

namespace fewbody {

Grid1D make_grid(double rmax, int npoints) {
  if (!(rmax > 0)) throw DomainError("grid: rmax must be positive");
  if (npoints < 200) throw DomainError("grid: at least 200 points required");
  return {rmax, npoints};
}

RadialProblem radial_problem(const Params& p) {
  if (p.kind != Case::TwoBodyES && p.kind != Case::TwoBodyQES)
    throw DomainError("radial_problem: two-body case required");
  const MultiPoly V = build_potential(p);
  RadialProblem prob;
  prob.d = p.d;
  prob.mu = reduced_masses(p).mu12.to_double();
  prob.v.assign(V.degree_in(0) + 1, 0.0);
  for (const auto& [m, c] : V.terms()) prob.v[m[0]] = c.to_double();
  return prob;
}

Grid1D default_grid(const Params& p, int npoints) {
  // Ground state is exp(e(rho)) with e decreasing; find where it drops below 1e-12.
  const MultiPoly e = ground_state(p).wavefunction.exponent();
  std::vector<double> ec(e.degree_in(0) + 1, 0.0);
  for (const auto& [m, c] : e.terms()) ec[m[0]] = c.to_double();
  auto at = [&](double rho) {
    double s = 0;
    for (int i = static_cast<int>(ec.size()) - 1; i >= 0; --i) s = s * rho + ec[i];
    return s;
  };
  const double target = std::log(1e-12);
  double rho = 1.0;
  for (int it = 0; it < 200 && at(rho) > target; ++it) rho *= 1.5;
  if (at(rho) > target) throw DomainError("default_grid: ground state does not decay");
  // Widen by 1.5 in r so that the low excited states also fit.
  return make_grid(1.5 * std::sqrt(rho), npoints);
}

namespace {

double potential_at(const std::vector<double>& v, double rho) {
  double s = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) s = s * rho + *it;
  return s;
}

/// Number of eigenvalues below x of the symmetric tridiagonal (diag, sub), by LDL^T pivots.
int count_below(const std::vector<double>& diag, const std::vector<double>& sub, double x) {
  int count = 0;
  double q = 1;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double off = i == 0 ? 0.0 : sub[i - 1] * sub[i - 1] / q;
    q = diag[i] - x - off;
    if (q == 0) q = -1e-300;
    if (q < 0) ++count;
  }
  return count;
}

/// k lowest eigenvalues by bisection on the Sturm count.
std::vector<double> lowest_eigenvalues(const std::vector<double>& diag, const std::vector<double>& sub, int k) {
  double lo = diag[0], hi = diag[0];
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double r = (i > 0 ? std::abs(sub[i - 1]) : 0.0) + (i < sub.size() ? std::abs(sub[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  std::vector<double> out;
  for (int j = 0; j < k; ++j) {
    double a = j == 0 ? lo : out.back(), b = hi;
    while (b - a > 1e-15 * std::max(1.0, std::abs(a) + std::abs(b))) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (count_below(diag, sub, mid) > j)
        b = mid;
      else
        a = mid;
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

}  // namespace

std::vector<double> fd_radial_eigen_raw(const RadialProblem& prob, const Grid1D& grid, int k) {
  if (prob.v.empty() || !(prob.v.back() > 0) || prob.v.size() < 2)
    throw DomainError("fd_radial_eigen: potential is not confining");
  if (prob.d < 1) throw DomainError("fd_radial_eigen: d must be positive");
  const int n = grid.npoints - 1;  // unknowns r_0..r_{n-1}; psi(rmax) = 0
  if (k < 1 || k > n / 20) throw DomainError("fd_radial_eigen: k exceeds the reliable eigenvalue count");
  const double h = grid.spacing();
  const int d = prob.d;
  const double kin = 1.0 / (2.0 * prob.mu);
  auto face = [&](int i) { return std::pow((i + 0.5) * h, d - 1); };  // r_{i+1/2}^{d-1}
  auto volume = [&](int i) {
    const double lo = i == 0 ? 0.0 : (i - 0.5) * h;
    return (std::pow((i + 0.5) * h, d) - std::pow(lo, d)) / d;
  };

  std::vector<double> w(n), diag(n), sub(n - 1);
  for (int i = 0; i < n; ++i) w[i] = volume(i);
  for (int i = 0; i < n; ++i) {
    double kii = face(i);
    if (i > 0) kii += face(i - 1);
    const double r = i * h;
    diag[i] = kin * kii / (h * w[i]) + potential_at(prob.v, r * r);
    if (i + 1 < n) sub[i] = -kin * face(i) / (h * std::sqrt(w[i] * w[i + 1]));
  }
  return lowest_eigenvalues(diag, sub, k);
}

std::vector<double> fd_radial_eigen(const RadialProblem& prob, const Grid1D& grid, int k) {
  auto fine = std::async(std::launch::async, [&] { return fd_radial_eigen_raw(prob, grid.refined(), k); });
  const auto coarse = fd_radial_eigen_raw(prob, grid, k);
  const auto f = fine.get();
  std::vector<double> out(k);
  for (int i = 0; i < k; ++i) out[i] = (4.0 * f[i] - coarse[i]) / 3.0;
  return out;
}

ConvergenceReport fd_convergence(const RadialProblem& prob, const Grid1D& coarse, double exact, int level,
                                 int levels) {
  ConvergenceReport rep;
  std::vector<Grid1D> grids{coarse};
  while (static_cast<int>(grids.size()) < levels) grids.push_back(grids.back().refined());
  std::vector<std::future<double>> jobs;
  for (const auto& g : grids)
    jobs.push_back(std::async(std::launch::async, [&prob, g, level] { return fd_radial_eigen_raw(prob, g, level + 1)[level]; }));
  for (std::size_t i = 0; i < grids.size(); ++i) {
    rep.spacing.push_back(grids[i].spacing());
    rep.error.push_back(std::abs(jobs[i].get() - exact));
  }
  for (std::size_t i = 0; i + 1 < rep.error.size(); ++i) rep.ratio.push_back(rep.error[i] / rep.error[i + 1]);
  return rep;
}

}  // namespace fewbody
