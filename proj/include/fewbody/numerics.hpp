#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fewbody/model.hpp"
#include "fewbody/serialize.hpp"

namespace fewbody {

/// Uniform radial grid r_i = i * spacing, i = 0..npoints-1.
struct Grid1D {
  double rmax = 0;
  int npoints = 0;
  double spacing() const { return rmax / (npoints - 1); }
  /// Same rmax, spacing halved.
  Grid1D refined() const { return {rmax, 2 * npoints - 1}; }
};

/// Throws DomainError unless rmax > 0 and npoints >= 200.
Grid1D make_grid(double rmax, int npoints = 4000);

/// -(1/2mu)(psi'' + (d-1)/r psi') + V(r^2) psi, V given by its coefficients in rho = r^2.
struct RadialProblem {
  std::vector<double> v;
  int d = 3;
  double mu = 0.5;
};

/// The two-body radial problem of a TwoBodyES or TwoBodyQES Params.
RadialProblem radial_problem(const Params& p);

/// rmax where the ground-state Gaussian factor drops below 1e-12, widened for excited states.
Grid1D default_grid(const Params& p, int npoints = 4000);

/// k lowest eigenvalues on one grid (finite-volume, r^{d-1} weights, Dirichlet at rmax).
std::vector<double> fd_radial_eigen_raw(const RadialProblem& prob, const Grid1D& grid, int k);
/// Richardson extrapolation of the raw values over (h, h/2).
std::vector<double> fd_radial_eigen(const RadialProblem& prob, const Grid1D& grid, int k);

struct ConvergenceReport {
  std::vector<double> spacing;
  std::vector<double> error;  // |E_h - exact|
  std::vector<double> ratio;  // error[i] / error[i+1]
};

/// Error of eigenvalue `level` on `levels` successively halved grids.
ConvergenceReport fd_convergence(const RadialProblem& prob, const Grid1D& coarse, double exact, int level = 0,
                                 int levels = 3);

struct SeriesFit {
  double c1 = 0, c2 = 0;
  double c1_err = 0, c2_err = 0;  // standard errors from the residual
  int points = 0;
};

struct BOReport {
  Rational E0;         // exact omega d (a+b+c)
  double E0_nucl = 0;  // nuclear zero-point energy
  double gap = 0;      // E0_nucl - E0
  bool degenerate = false;  // c = 0: raw values only
  /// Closed-form series coefficients (meaningful at m2 = m3 = 1).
  Rational c1_series;
  std::optional<Rational> c2_series;
};

/// General3 params with m2 = m3 finite, a, b > 0.
BOReport bo_energies(const Params& p);

/// Least-squares fit gap(m1) = c1 m1 + c2 m1^2 over the grid (>= 6 points in (0, 0.1]).
SeriesFit bo_series_fit(const Params& p, const std::vector<double>& m1_grid);

struct ScanRow {
  double x = 0, y = 0;
};

/// gap as a function of mu = m2 m3/(m2+m3) with m2 = m3, geometric over [mu_lo, mu_hi].
std::vector<ScanRow> bo_mu_scan(const Params& p, double mu_lo, double mu_hi, int points);
std::vector<ScanRow> bo_m1_scan(const Params& p, const std::vector<double>& m1_grid);

struct CurveRow {
  Rational rho23, E0;
};

/// Molecular ground-state energy as a function of the fixed rho23.
std::vector<CurveRow> potential_curve(const Params& p, const std::vector<Rational>& rho23);

/// "lo:hi:step" (rationals or decimals), inclusive of hi when it lands on the grid.
std::vector<Rational> parse_range(const std::string& spec);

/// Header row then rows with 15 significant digits.
std::string to_csv(const std::vector<CurveRow>& rows);
std::string to_csv(const std::vector<ScanRow>& rows, const std::string& xname, const std::string& yname);
std::string format_double(double x);

json to_json(const BOReport& r);
json to_json(const SeriesFit& f);
json to_json(const std::vector<CurveRow>& rows);
json to_json(const std::vector<ScanRow>& rows, const std::string& xname, const std::string& yname);

}  // namespace fewbody
