#include <Eigen/Dense>
#include <cmath>

#include "fewbody/errors.hpp"
#include "fewbody/numerics.hpp"

namespace fewbody {

namespace {

Rational from_double(double x) { return Rational(mpq_class(x)); }

void check_bo_params(const Params& p) {
  if (p.kind != Case::General3) throw DomainError("bo: General3 params required");
  for (const auto& m : p.m)
    if (m.infinite) throw DomainError("bo: finite masses required");
  if (p.m[1].value != p.m[2].value) throw DomainError("bo: m2 = m3 required");
  if (p.a.sign() < 0 || p.b.sign() < 0 || p.c.sign() < 0) throw DomainError("bo: spring constants must be >= 0");
}

}  // namespace

BOReport bo_energies(const Params& p) {
  check_bo_params(p);
  validate(p);
  const Rational &a = p.a, &b = p.b, &c = p.c, &w = p.omega;
  const Rational m = p.m[0].value;
  const Rational mu = reduced_masses(p).mu23;
  const Rational nu23 = nu_coefficients(p).nu23;
  const Rational wd = w * Rational(p.d);

  BOReport r;
  r.E0 = wd * (a + b + c);
  const Rational X = (a * b * m + nu23) / mu;
  if (X.sign() < 0) throw DomainError("bo: negative nuclear frequency");
  const double root = std::sqrt(X.to_double());
  r.E0_nucl = (wd * (a + b)).to_double() + wd.to_double() * root;
  if (c.is_zero()) {
    r.degenerate = true;
    r.gap = wd.to_double() * root;
  } else {
    // sqrt(X) - c = (X - c^2)/(sqrt(X) + c), with X - c^2 formed exactly.
    r.gap = wd.to_double() * (X - c * c).to_double() / (root + c.to_double());
  }
  r.c1_series = wd * (a + b) / Rational(2);
  if (!c.is_zero())
    r.c2_series = -wd * (a * a - Rational(14) * a * b + Rational(4) * a * c + b * b + Rational(4) * b * c) /
                  (Rational(8) * c);
  return r;
}

std::vector<ScanRow> bo_m1_scan(const Params& p, const std::vector<double>& m1_grid) {
  std::vector<ScanRow> rows;
  for (double m1 : m1_grid) {
    Params q = p;
    q.m[0] = Mass{from_double(m1), false};
    rows.push_back({m1, bo_energies(q).gap});
  }
  return rows;
}

SeriesFit bo_series_fit(const Params& p, const std::vector<double>& m1_grid) {
  if (m1_grid.size() < 6) throw DomainError("bo_series_fit: at least 6 grid points required");
  double mmax = 0;
  for (double m : m1_grid) {
    if (!(m > 0) || m > 0.1) throw DomainError("bo_series_fit: grid must lie in (0, 0.1]");
    mmax = std::max(mmax, m);
  }
  const auto rows = bo_m1_scan(p, m1_grid);
  const int n = static_cast<int>(rows.size());
  // Fit in x = m1/mmax to keep the columns comparable.
  Eigen::MatrixXd A(n, 2);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    const double x = rows[i].x / mmax;
    A(i, 0) = x;
    A(i, 1) = x * x;
    y[i] = rows[i].y;
  }
  const auto qr = A.colPivHouseholderQr();
  if (qr.rank() < 2) throw DomainError("bo_series_fit: ill-conditioned grid");
  const Eigen::Vector2d coef = qr.solve(y);
  const Eigen::Matrix2d ata = A.transpose() * A;
  const double cond = ata.norm() * ata.inverse().norm();
  if (!(cond < 1e12)) throw DomainError("bo_series_fit: ill-conditioned grid");
  const double rss = (A * coef - y).squaredNorm();
  const Eigen::Matrix2d cov = ata.inverse() * (n > 2 ? rss / (n - 2) : 0.0);

  SeriesFit f;
  f.points = n;
  f.c1 = coef[0] / mmax;
  f.c2 = coef[1] / (mmax * mmax);
  f.c1_err = std::sqrt(cov(0, 0)) / mmax;
  f.c2_err = std::sqrt(cov(1, 1)) / (mmax * mmax);
  return f;
}

std::vector<ScanRow> bo_mu_scan(const Params& p, double mu_lo, double mu_hi, int points) {
  if (!(mu_lo > 0) || !(mu_hi > mu_lo) || points < 2) throw DomainError("bo_mu_scan: bad scan range");
  std::vector<ScanRow> rows;
  for (int i = 0; i < points; ++i) {
    const double mu = mu_lo * std::pow(mu_hi / mu_lo, static_cast<double>(i) / (points - 1));
    Params q = p;
    q.m[1] = q.m[2] = Mass{from_double(2 * mu), false};
    rows.push_back({mu, bo_energies(q).gap});
  }
  return rows;
}

}  // namespace fewbody
