#include <gtest/gtest.h>

#include <cmath>

#include "fewbody/errors.hpp"
#include "fewbody/numerics.hpp"
#include "fewbody/spectra.hpp"

using namespace fewbody;

namespace {

Params two_body(Case kind, int N = 0) {
  Params p;
  p.kind = kind;
  p.m[0] = p.m[1] = Mass{Rational(1), false};
  p.m[2] = Mass::inf();
  p.omega = Rational(1);
  p.d = 3;
  if (kind == Case::TwoBodyQES) {
    p.A = Rational(1);
    p.N = N;
  }
  return p;
}

Params bo_params(const Rational& m1) {
  Params p;
  p.kind = Case::General3;
  p.m[0] = Mass{m1, false};
  p.m[1] = p.m[2] = Mass{Rational(1), false};
  p.d = 3;
  return p;
}

Params molecular(int d) {
  Params p;
  p.kind = Case::Molecular3;
  p.m[0] = Mass{Rational(1), false};
  p.m[1] = p.m[2] = Mass::inf();
  p.c = Rational(0);
  p.d = d;
  return p;
}

std::vector<double> qes_energies(const Params& p) {
  std::vector<double> e;
  for (const auto& ev : qes_2body_block(p).physical)
    for (int k = 0; k < ev.multiplicity; ++k) e.push_back(ev.approx());
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

TEST(Grid, Invariants) {
  const auto g = make_grid(10.0, 201);
  EXPECT_DOUBLE_EQ(g.spacing(), 0.05);
  EXPECT_DOUBLE_EQ(g.refined().spacing(), 0.025);
  EXPECT_THROW(make_grid(10.0, 100), DomainError);
  EXPECT_THROW(make_grid(0.0, 400), DomainError);
}

TEST(Radial, ExactGroundState) {
  const auto p = two_body(Case::TwoBodyES);
  const auto prob = radial_problem(p);
  EXPECT_DOUBLE_EQ(prob.mu, 0.5);
  const auto e = fd_radial_eigen(prob, default_grid(p), 3);
  // Levels d + 4n at omega = 1.
  for (int n = 0; n < 3; ++n) EXPECT_NEAR(e[n], 3.0 + 4.0 * n, 1e-6 * (3.0 + 4.0 * n));
}

TEST(Radial, OtherDimensions) {
  for (int d : {1, 2, 4}) {
    auto p = two_body(Case::TwoBodyES);
    p.d = d;
    const auto e = fd_radial_eigen(radial_problem(p), default_grid(p), 1);
    EXPECT_NEAR(e[0], d, 1e-6 * d) << "d=" << d;
  }
}

TEST(Radial, QesAgreesWithAlgebraicBlock) {
  for (int N : {0, 1, 2}) {
    const auto p = two_body(Case::TwoBodyQES, N);
    const auto alg = qes_energies(p);
    ASSERT_EQ(static_cast<int>(alg.size()), N + 1);
    const auto fd = fd_radial_eigen(radial_problem(p), default_grid(p), N + 1);
    for (int i = 0; i <= N; ++i) EXPECT_NEAR(fd[i], alg[i], 1e-6 * std::abs(alg[i])) << "N=" << N << " i=" << i;
  }
  const auto fd0 = fd_radial_eigen(radial_problem(two_body(Case::TwoBodyQES, 0)), default_grid(two_body(Case::TwoBodyQES, 0)), 1);
  EXPECT_NEAR(fd0[0], 3.0, 3e-6);
}

TEST(Radial, SecondOrderConvergence) {
  const auto p = two_body(Case::TwoBodyES);
  const auto g = default_grid(p, 500);
  const auto rep = fd_convergence(radial_problem(p), g, 3.0, 0, 3);
  ASSERT_EQ(rep.ratio.size(), 2u);
  for (double r : rep.ratio) EXPECT_NEAR(r, 4.0, 0.5);
}

TEST(Radial, Errors) {
  RadialProblem bad{{0.0, -1.0}, 3, 0.5};
  EXPECT_THROW(fd_radial_eigen_raw(bad, make_grid(5, 400), 1), DomainError);
  RadialProblem ok{{0.0, 1.0}, 3, 0.5};
  EXPECT_THROW(fd_radial_eigen_raw(ok, make_grid(5, 400), 100), DomainError);
}

TEST(BO, GapFormula) {
  const auto r = bo_energies(bo_params(Rational(1, 100)));
  EXPECT_EQ(r.E0, Rational(9));
  EXPECT_NEAR(r.gap, 1.5 * (0.02 + 0.0001), 2e-5);
  EXPECT_NEAR(r.E0_nucl - 9.0, r.gap, 1e-12);
  EXPECT_EQ(r.c1_series, Rational(3));
  ASSERT_TRUE(r.c2_series.has_value());
  EXPECT_EQ(*r.c2_series, Rational(3, 2));
}

TEST(BO, SeriesCoefficientEqualSprings) {
  for (long a : {1, 2, 3})
    for (long c : {1, 2, 5}) {
      auto p = bo_params(Rational(1, 100));
      p.a = p.b = Rational(a);
      p.c = Rational(c);
      const Rational A(a), C(c), wd(3);
      EXPECT_EQ(*bo_energies(p).c2_series,
                -wd * (Rational(2) * A * A - Rational(14) * A * A + Rational(8) * A * C) / (Rational(8) * C));
    }
}

TEST(BO, SeriesFit) {
  std::vector<double> grid;
  for (int k = 1; k <= 10; ++k) grid.push_back(1e-5 * k);
  const auto f = bo_series_fit(bo_params(Rational(1)), grid);
  EXPECT_NEAR(f.c1, 3.0, 3e-4);
  EXPECT_NEAR(f.c2, 1.5, 1.5e-3);

  auto zero = bo_params(Rational(1));
  zero.a = zero.b = Rational(0);
  EXPECT_NEAR(bo_series_fit(zero, grid).c1, 0.0, 1e-12);
  EXPECT_THROW(bo_series_fit(bo_params(Rational(1)), {1e-5, 2e-5}), DomainError);
  EXPECT_THROW(bo_series_fit(bo_params(Rational(1)), {0.1, 0.2, 0.3, 0.4, 0.5, 0.6}), DomainError);
}

TEST(BO, GapDecreasesWithMu) {
  for (const Rational m1 : {Rational(1), Rational(1, 10), Rational(1, 100)}) {
    const auto rows = bo_mu_scan(bo_params(m1), 0.5, 500.0, 31);
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) EXPECT_GT(std::abs(rows[i].y), std::abs(rows[i + 1].y));
    EXPECT_LT(rows.back().y, rows.front().y / 100);
  }
}

TEST(BO, Preconditions) {
  auto p = bo_params(Rational(1));
  p.m[2] = Mass{Rational(2), false};
  EXPECT_THROW(bo_energies(p), DomainError);
  auto q = bo_params(Rational(1));
  q.c = Rational(0);
  const auto r = bo_energies(q);
  EXPECT_TRUE(r.degenerate);
  EXPECT_FALSE(r.c2_series.has_value());
}

TEST(Curve, FigureParameters) {
  for (int d : {2, 3, 4}) {
    const auto rows = potential_curve(molecular(d), parse_range("0:4:1/2"));
    ASSERT_EQ(rows.size(), 9u);
    for (const auto& r : rows) EXPECT_EQ(r.E0, Rational(2 * d) + Rational(2) * r.rho23);
    for (std::size_t i = 0; i + 2 < rows.size(); ++i)
      EXPECT_EQ(rows[i + 2].E0 - Rational(2) * rows[i + 1].E0 + rows[i].E0, Rational(0));
  }
  const auto d3 = potential_curve(molecular(3), {Rational(0), Rational(1), Rational(2)});
  EXPECT_EQ(d3[0].E0, Rational(6));
  EXPECT_EQ(d3[1].E0, Rational(8));
  EXPECT_EQ(d3[2].E0, Rational(10));
  EXPECT_EQ(potential_curve(molecular(2), {Rational(1)})[0].E0, Rational(6));
}

TEST(Curve, MinimumIsDecoupledEnergy) {
  auto p = molecular(3);
  p.a = Rational(2);
  p.b = Rational(3, 2);
  p.omega = Rational(1, 3);
  const auto rows = potential_curve(p, parse_range("0:3:1"));
  EXPECT_EQ(rows[0].E0, p.omega * Rational(3) * (p.a + p.b));
  for (const auto& r : rows) EXPECT_GE(r.E0, rows[0].E0);
}

TEST(Output, CsvAndRange) {
  EXPECT_EQ(parse_range("0:1:0.25").size(), 5u);
  EXPECT_EQ(parse_range("3").size(), 1u);
  EXPECT_THROW(parse_range("0:1:0"), std::invalid_argument);
  const auto csv = to_csv(potential_curve(molecular(3), parse_range("0:1:1")));
  EXPECT_EQ(csv, "rho23,E0\n0,6\n1,8\n");
  EXPECT_EQ(format_double(1.0 / 3.0), "0.333333333333333");
}
