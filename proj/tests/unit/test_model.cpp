#include <gtest/gtest.h>

#include <cmath>

#include "fewbody/errors.hpp"
#include "fewbody/identity.hpp"
#include "fewbody/model.hpp"
#include "random_params.hpp"

using namespace fewbody;
using fewbody::testing::random_params;

namespace {

Params make(Case kind) {
  Params p;
  p.kind = kind;
  if (kind == Case::Atomic3) p.m[0] = Mass::inf();
  if (kind == Case::Molecular3) {
    p.m[1] = p.m[2] = Mass::inf();
    p.c = Rational(0);
  }
  if (kind == Case::OneDim3) p.d = 1;
  return p;
}

DiffOp gauged(const Params& p) {
  const auto gs = ground_state(p);
  DiffOp shifted = build_hamiltonian(p) - DiffOp::multiply(gs.energy, case_nderiv(p.kind));
  return gauge_conjugate(shifted, gs.wavefunction, Rational(0));
}

class EveryCase : public ::testing::TestWithParam<Case> {};

}  // namespace

TEST_P(EveryCase, GaugeConsistency) {
  RationalSampler rs(101 + static_cast<int>(GetParam()));
  for (int draw = 0; draw < 10; ++draw) {
    const Params p = random_params(GetParam(), rs, 1 + draw % 5);
    EXPECT_EQ(gauged(p), build_h_algebraic(p)) << case_name(p.kind) << " draw " << draw;
  }
}

TEST_P(EveryCase, GroundStateAnnihilation) {
  RationalSampler rs(202 + static_cast<int>(GetParam()));
  for (int draw = 0; draw < 10; ++draw) {
    Params p = random_params(GetParam(), rs, 2 + draw % 4);
    p.N = 0;  // the QES ground state sits at level zero
    const auto gs = ground_state(p);
    EXPECT_EQ(gs.wavefunction.prefactor(), MultiPoly(gs.wavefunction.vars(), Rational(1)));
    EXPECT_EQ(build_hamiltonian(p).apply(gs.wavefunction), gs.energy * gs.wavefunction);
  }
}

TEST_P(EveryCase, LieFormMatchesAlgebraic) {
  RationalSampler rs(303 + static_cast<int>(GetParam()));
  for (int draw = 0; draw < 5; ++draw) {
    const Params p = random_params(GetParam(), rs, 3);
    if (p.kind == Case::Primitive3QES) {
      EXPECT_THROW(lie_form(p), DomainError);
    } else {
      EXPECT_EQ(lie_form(p), build_h_algebraic(p)) << case_name(p.kind);
    }
  }
}

TEST_P(EveryCase, AlgebraicOperatorKillsConstants) {
  RationalSampler rs(404);
  Params p = random_params(GetParam(), rs);
  p.N = 0;
  const auto vars = case_variables(p.kind);
  EXPECT_TRUE(build_h_algebraic(p).apply(MultiPoly(vars, Rational(1))).is_zero());
  EXPECT_TRUE(build_radial_laplacian(p).apply(MultiPoly(vars, Rational(1))).is_zero());
}

TEST_P(EveryCase, JsonRoundTrip) {
  RationalSampler rs(505);
  const Params p = random_params(GetParam(), rs);
  const Params q = params_from_json(to_json(p));
  EXPECT_EQ(to_json(q).dump(), to_json(p).dump());
  EXPECT_EQ(build_h_algebraic(q), build_h_algebraic(p));
}

INSTANTIATE_TEST_SUITE_P(Model, EveryCase, ::testing::ValuesIn(all_cases()),
                         [](const auto& info) { return case_name(info.param); });

TEST(Params, Validation) {
  Params p = make(Case::Atomic3);
  p.m[0] = Mass{Rational(3), false};
  EXPECT_THROW(validate(p), DomainError);
  Params q = make(Case::Molecular3);
  q.c = Rational(1);
  EXPECT_THROW(validate(q), DomainError);
  Params r = make(Case::General3);
  r.m[2] = Mass::inf();
  EXPECT_THROW(build_radial_laplacian(r), DomainError);
  r = make(Case::General3);
  r.omega = Rational(0);
  EXPECT_THROW(validate(r), DomainError);
}

TEST(Params, JsonParsing) {
  const auto p = params_from_json(json::parse(
      R"({"case":"atomic3","m":["inf","2","2"],"springs":["1","1/2","3"],"omega":"2","d":4})"));
  EXPECT_EQ(p.kind, Case::Atomic3);
  EXPECT_TRUE(p.m[0].infinite);
  EXPECT_EQ(p.m[1].value, Rational(2));
  EXPECT_EQ(p.b, Rational(1, 2));
  EXPECT_EQ(p.d, 4);
  EXPECT_THROW(params_from_json(json::parse(R"({"case":"nonsense"})")), std::invalid_argument);
  EXPECT_THROW(params_from_json(json::parse(R"({"case":"general3","m":["1","inf","1"]})")), DomainError);
}

TEST(ReducedMasses, Examples) {
  Params p = make(Case::General3);
  auto mu = reduced_masses(p);
  EXPECT_EQ(mu.mu12, Rational(1, 2));
  EXPECT_EQ(mu.mu23, Rational(1, 2));
  p.m[1] = Mass{Rational(2), false};
  EXPECT_EQ(reduced_masses(p).mu12, Rational(2, 3));
  Params t = make(Case::TwoBodyES);
  t.m[1] = Mass::inf();
  EXPECT_EQ(reduced_masses(t).mu12, Rational(1));
  Params m = make(Case::Molecular3);
  m.m[1] = Mass::inf();
  m.kind = Case::General3;
  m.m[2] = Mass::inf();
  EXPECT_THROW(reduced_masses(m), DomainError);
}

TEST(NuCoefficients, Examples) {
  Params p = make(Case::General3);
  p.a = p.b = p.c = Rational(3);
  auto nu = nu_coefficients(p);
  EXPECT_EQ(nu.nu12, Rational(27, 4));
  EXPECT_EQ(nu.nu13, Rational(27, 4));
  EXPECT_EQ(nu.nu23, Rational(27, 4));
  p.a = p.b = Rational(1);
  p.c = Rational(2);
  nu = nu_coefficients(p);
  EXPECT_EQ(nu.nu12, Rational(3, 4));
  EXPECT_EQ(nu.nu13, Rational(3, 4));
  EXPECT_EQ(nu.nu23, Rational(11, 4));
  EXPECT_EQ(nu_coefficients(make(Case::Molecular3)).nu23, Rational(0));
}

TEST(NuCoefficients, ReproducePotentialCoefficients) {
  RationalSampler rs(606);
  for (int draw = 0; draw < 50; ++draw) {
    Params p = random_params(Case::General3, rs);
    const auto nu = nu_coefficients(p);
    const MultiPoly V = build_potential(p);
    const Rational w2 = Rational(2) * p.omega * p.omega;
    EXPECT_EQ(V.coeff(Monomial{1, 0, 0}), w2 * nu.nu12);
    EXPECT_EQ(V.coeff(Monomial{0, 1, 0}), w2 * nu.nu13);
    EXPECT_EQ(V.coeff(Monomial{0, 0, 1}), w2 * nu.nu23);
    // Equal masses: the dedicated transcription agrees with the general formula.
    p.kind = Case::EqualMass3;
    p.m[1] = p.m[2] = p.m[0];
    Params g = p;
    g.kind = Case::General3;
    EXPECT_EQ(build_potential(p), build_potential(g));
  }
}

TEST(NuCoefficients, AtomicLimitMatchesTranscription) {
  RationalSampler rs(607);
  for (int draw = 0; draw < 10; ++draw) {
    const Params p = random_params(Case::Atomic3, rs);
    const auto nu = nu_coefficients(p);
    const auto vars = case_variables(p.kind);
    const MultiPoly limit = (MultiPoly::var(vars, 0) * nu.nu12 + MultiPoly::var(vars, 1) * nu.nu13 +
                             MultiPoly::var(vars, 2) * nu.nu23) *
                            (Rational(2) * p.omega * p.omega);
    EXPECT_EQ(build_potential(p), limit);
  }
}

TEST(RadialLaplacian, Examples) {
  const auto lap = build_radial_laplacian(make(Case::General3));
  const auto vars = case_variables(Case::General3);
  EXPECT_EQ(lap.coeff({2, 0, 0}), MultiPoly::var(vars, 0) * Rational(4));
  Params m = make(Case::Molecular3);
  m.m[0] = Mass{Rational(3), false};
  const auto mol = build_radial_laplacian(m);
  EXPECT_EQ(mol.nderiv(), 2);
  EXPECT_EQ(mol.coeff({1, 1, 0}),
            (MultiPoly::var(vars, 0) + MultiPoly::var(vars, 1) - MultiPoly::var(vars, 2)) * Rational(2, 3));
}

TEST(Potential, Examples) {
  const auto vars = case_variables(Case::Isotropic3);
  const auto sum = MultiPoly::var(vars, 0) + MultiPoly::var(vars, 1) + MultiPoly::var(vars, 2);
  EXPECT_EQ(build_potential(make(Case::Isotropic3)), sum * Rational(3, 2));
  EXPECT_EQ(build_potential(make(Case::Molecular3)),
            (MultiPoly::var(vars, 0) + MultiPoly::var(vars, 1)) * Rational(4));
  const auto rho = MultiPoly::var(case_variables(Case::TwoBodyES), 0);
  EXPECT_EQ(build_potential(make(Case::TwoBodyES)), rho);
}

TEST(GroundState, Examples) {
  EXPECT_EQ(ground_state(make(Case::Isotropic3)).energy.constant_term(), Rational(9));
  Params q = make(Case::TwoBodyQES);
  q.A = Rational(5, 3);
  q.d = 4;
  q.omega = Rational(2, 7);
  q.N = 2;
  EXPECT_EQ(ground_state(q).energy.constant_term(), Rational(8, 7));
  const auto mol = ground_state(make(Case::Molecular3)).energy;
  EXPECT_EQ(mol.substitute(2, Rational(0)).constant_term(), Rational(6));
  EXPECT_EQ(mol.coeff(Monomial{0, 0, 1}), Rational(2));
}

TEST(AlgebraicOperator, Examples) {
  Params es = make(Case::TwoBodyES);
  es.d = 5;
  const auto vars = case_variables(Case::TwoBodyES);
  const auto rho = MultiPoly::var(vars, 0);
  DiffOp expect(vars);
  expect.add_term(Monomial{2}, rho * Rational(-4));
  expect.add_term(Monomial{1}, rho * Rational(4) - Rational(10));
  EXPECT_EQ(build_h_algebraic(es), expect);

  Params em = make(Case::EqualMass3);
  em.c = Rational(2);
  const auto r = case_variables(Case::EqualMass3);
  const MultiPoly img = build_h_algebraic(em).apply(MultiPoly::var(r, 2));
  EXPECT_EQ(img - img.substitute(2, Rational(0)), MultiPoly::var(r, 2) * Rational(10));
  EXPECT_TRUE(img.substitute(2, Rational(0)).is_constant());
}

TEST(AlgebraicOperator, TwoBodyQesAtHalfReducedMass) {
  Params p = make(Case::TwoBodyQES);
  p.A = Rational(3);
  p.N = 2;
  p.omega = Rational(5, 2);
  p.d = 3;
  const auto vars = case_variables(p.kind);
  const auto rho = MultiPoly::var(vars, 0);
  DiffOp expect(vars);
  expect.add_term(Monomial{2}, rho * Rational(-4));
  expect.add_term(Monomial{1}, (rho.pow(2) * (Rational(2) * p.A) + rho * (Rational(2) * p.omega) - Rational(3)) *
                                   Rational(2));
  expect.add_term(Monomial{0}, rho * (Rational(-4 * p.N) * p.A));
  EXPECT_EQ(build_h_algebraic(p), expect);
}

TEST(LieForm, Generators) {
  const auto vars = case_variables(Case::General3);
  EXPECT_EQ(gen::Jminus(vars, 0).apply(MultiPoly::var(vars, 0)), MultiPoly(vars, Rational(1)));
  // sl(2) form with A = 0 reduces to the exactly solvable operator.
  Params es = make(Case::TwoBodyES);
  es.N = 4;
  EXPECT_EQ(lie_form(es), build_h_algebraic(es));
}

TEST(DegenerationChain, GeneralToEqualMassToIsotropic) {
  RationalSampler rs(707);
  for (int draw = 0; draw < 5; ++draw) {
    Params g = random_params(Case::General3, rs, 2 + draw % 3);
    g.m[1] = g.m[2] = g.m[0];
    Params e = g;
    e.kind = Case::EqualMass3;
    EXPECT_EQ(build_h_algebraic(g), build_h_algebraic(e));
    EXPECT_EQ(build_radial_laplacian(g), build_radial_laplacian(e));
    EXPECT_EQ(lie_form(g), lie_form(e));
    g.b = g.c = g.a;
    e.b = e.c = e.a;
    Params i = e;
    i.kind = Case::Isotropic3;
    EXPECT_EQ(build_h_algebraic(e), build_h_algebraic(i));
    EXPECT_EQ(build_potential(e), build_potential(i));
    EXPECT_EQ(ground_state(e).wavefunction, ground_state(i).wavefunction);
    EXPECT_EQ(ground_state(e).energy, ground_state(i).energy);
  }
}

TEST(Cometric, Entries) {
  const auto g = cometric(make(Case::General3));
  const auto vars = case_variables(Case::General3);
  EXPECT_EQ(g.matrix[0][0], MultiPoly::var(vars, 0) * Rational(4));
  EXPECT_EQ(g.convention, "full");
  const auto at = cometric(make(Case::Atomic3));
  EXPECT_TRUE(at.matrix[0][1].is_zero());
  EXPECT_EQ(at.matrix[2][2], MultiPoly::var(vars, 2) * Rational(4));
  Params m = make(Case::Molecular3);
  m.m[0] = Mass{Rational(2), false};
  const auto mol = cometric(m);
  ASSERT_EQ(mol.matrix.size(), 2u);
  const auto r12 = MultiPoly::var(vars, 0), r13 = MultiPoly::var(vars, 1), r23 = MultiPoly::var(vars, 2);
  const MultiPoly printed =
      ((r12 + r13) * r23 * Rational(2) - (r12 - r13).pow(2) - r23.pow(2)) * Rational(1, 16);
  EXPECT_EQ(mol.determinant, printed);
  EXPECT_EQ(mol.convention, "half");
  EXPECT_THROW(cometric(make(Case::TwoBodyES)), DomainError);
}

TEST(Cometric, DeterminantFactorization) {
  RationalSampler rs(808);
  for (Case kind : {Case::General3, Case::EqualMass3, Case::Atomic3, Case::Molecular3, Case::OneDim3}) {
    for (int draw = 0; draw < 3; ++draw) {
      const auto g = cometric(random_params(kind, rs));
      for (std::size_t i = 0; i < g.matrix.size(); ++i)
        for (std::size_t j = 0; j < g.matrix.size(); ++j) EXPECT_EQ(g.matrix[i][j], g.matrix[j][i]);
      EXPECT_TRUE(identity_test(g.determinant, g.factored, 900 + draw, 50)) << case_name(kind);
      EXPECT_EQ(g.determinant, g.factored);
    }
  }
}

TEST(EffectivePotential, Examples) {
  Params two = make(Case::TwoBodyES);
  EXPECT_TRUE(effective_potential(two).is_zero());
  two.d = 2;
  EXPECT_FALSE(effective_potential(two).is_zero());
  Params g = make(Case::General3);
  g.d = 2;
  const auto vars = case_variables(Case::General3);
  const MultiPoly L = MultiPoly::var(vars, 0) + MultiPoly::var(vars, 1) + MultiPoly::var(vars, 2);
  EXPECT_EQ(effective_potential(g), RationalFn(MultiPoly(vars, Rational(9, 8)), L));
  g.d = 4;
  EXPECT_EQ(effective_potential(g), RationalFn(MultiPoly(vars, Rational(9, 8)), L));
  Params m = make(Case::Molecular3);
  m.d = 4;
  EXPECT_TRUE(effective_potential(m).is_zero());
  m.d = 2;
  EXPECT_TRUE(effective_potential(m).is_zero());
}

TEST(EffectivePotential, MatchesGaugeComputation) {
  RationalSampler rs(909);
  for (Case kind : {Case::General3, Case::Atomic3, Case::Molecular3, Case::TwoBodyES, Case::OneDim3}) {
    for (int d = 1; d <= 5; ++d) {
      const Params p = random_params(kind, rs, d);
      EXPECT_EQ(effective_potential(p), effective_potential_from_gauge(p)) << case_name(kind) << " d=" << d;
    }
  }
}

TEST(GaugeFactor, Exponents) {
  Params p = make(Case::General3);
  for (auto [d, e] : {std::pair{2, Rational(0)}, {3, Rational(-1, 4)}, {4, Rational(-1, 2)}}) {
    p.d = d;
    const auto gamma = gauge_factor_gamma(p);
    ASSERT_EQ(gamma.size(), 2u);
    EXPECT_EQ(gamma[0].exponent, e);
    EXPECT_EQ(gamma[0].base, area_square(case_variables(Case::General3)));
    EXPECT_EQ(gamma[1].exponent, Rational(-1, 4));
  }
}

TEST(PrimitiveQes, ResidualIsConstant) {
  Params p = make(Case::Primitive3QES);
  p.A3 = {Rational(1), Rational(1), Rational(1)};
  const auto q = build_qes_primitive(p);
  EXPECT_EQ(q.residual_energy, Rational(9));
  EXPECT_EQ(q.potential.coeff(Monomial{3, 0, 0}), Rational(16));
  RationalSampler rs(1001);
  for (int draw = 0; draw < 10; ++draw) {
    const auto r = build_qes_primitive(random_params(Case::Primitive3QES, rs, 1 + draw % 5));
    EXPECT_TRUE(r.shift_from_harmonic.is_zero());
  }
}

TEST(PrimitiveQes, NoAnharmonicity) {
  Params p = make(Case::Primitive3QES);
  p.m = {Mass{Rational(2), false}, Mass{Rational(3), false}, Mass{Rational(5), false}};
  const auto q = build_qes_primitive(p);
  EXPECT_TRUE(q.potential.is_zero());
  EXPECT_TRUE(q.shift_from_harmonic.is_zero());
  Params g = p;
  g.kind = Case::General3;
  EXPECT_EQ(build_h_algebraic(p), build_h_algebraic(g));
}

TEST(Jacobi, Examples) {
  const auto two = jacobi_coordinates({1, 1}, {{0.0}, {1.0}});
  ASSERT_EQ(two.size(), 1u);
  EXPECT_NEAR(two[0][0], 1 / std::sqrt(2.0), 1e-15);
  const auto same = jacobi_coordinates({1, 2, 3}, {{1.0, 2.0}, {1.0, 2.0}, {1.0, 2.0}});
  for (const auto& r : same)
    for (double x : r) EXPECT_NEAR(x, 0.0, 1e-15);
  EXPECT_NEAR(jacobi_reduced_mass({1, 1, 1}), std::sqrt(1.0 / 3.0), 1e-15);
  EXPECT_THROW(jacobi_coordinates({1, -1}, {{0.0}, {1.0}}), DomainError);
}

TEST(Jacobi, KineticEnergyIsDiagonal) {
  // Sum_i m_i v_i^2 = M V_cm^2 + sum_j (dr_j/dt)^2 for unit time step displacements.
  const std::vector<double> m{1.5, 0.7, 2.2};
  const std::vector<Vec> v{{0.3, -1.0}, {1.1, 0.4}, {-0.6, 0.9}};
  const auto rj = jacobi_coordinates(m, v);
  double lhs = 0, cm[2] = {0, 0}, M = 0;
  for (int i = 0; i < 3; ++i) {
    M += m[i];
    for (int k = 0; k < 2; ++k) {
      lhs += m[i] * v[i][k] * v[i][k];
      cm[k] += m[i] * v[i][k];
    }
  }
  double rhs = (cm[0] * cm[0] + cm[1] * cm[1]) / M;
  for (const auto& r : rj) rhs += r[0] * r[0] + r[1] * r[1];
  EXPECT_NEAR(lhs, rhs, 1e-12);
}
