#include <gtest/gtest.h>

#include "fewbody/diffop.hpp"
#include "fewbody/errors.hpp"
#include "fewbody/gaussfn.hpp"
#include "fewbody/identity.hpp"
#include "fewbody/multipoly.hpp"
#include "fewbody/phasepoly.hpp"
#include "fewbody/rationalfn.hpp"
#include "fewbody/serialize.hpp"

using namespace fewbody;

namespace {

const std::vector<std::string> R3{"rho12", "rho13", "rho23"};
const std::vector<std::string> R1{"rho"};

MultiPoly v(int i) { return MultiPoly::var(R3, i); }
MultiPoly c3(const Rational& c) { return MultiPoly(R3, c); }

MultiPoly random_poly(RationalSampler& rs, const std::vector<std::string>& vars, int maxdeg,
                      int nterms) {
  MultiPoly p(vars);
  const int n = static_cast<int>(vars.size());
  for (int t = 0; t < nterms; ++t) {
    Monomial m(n);
    int left = static_cast<int>(rs.next_int(0, maxdeg));
    for (int i = 0; i < n && left > 0; ++i) {
      const int e = static_cast<int>(rs.next_int(0, left));
      m.set(i, e);
      left -= e;
    }
    Rational c = rs.next();
    if (rs.next_int(0, 1)) c = -c;
    p.add_term(m, c);
  }
  return p;
}

DiffOp random_op(RationalSampler& rs, const std::vector<std::string>& vars, int maxorder,
                 int maxdeg) {
  DiffOp op(vars);
  const int n = static_cast<int>(vars.size());
  for (int t = 0; t < 4; ++t) {
    Monomial a(n);
    int left = static_cast<int>(rs.next_int(0, maxorder));
    for (int i = 0; i < n && left > 0; ++i) {
      const int e = static_cast<int>(rs.next_int(0, left));
      a.set(i, e);
      left -= e;
    }
    op.add_term(a, random_poly(rs, vars, maxdeg, 2));
  }
  return op;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(0, 7).str(), "0/1");
  EXPECT_EQ(Rational::parse("-0.125"), Rational(-1, 8));
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
}

TEST(MultiPoly, GradedLexOrder) {
  MultiPoly p = v(2) * v(2) + v(0) * v(1) + v(1) + c3(1) + v(0);
  std::vector<std::vector<int>> order;
  for (const auto& [m, c] : p.terms()) order.push_back(m.to_vector());
  std::vector<std::vector<int>> expect{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 2}};
  EXPECT_EQ(order, expect);
}

TEST(MultiPoly, RingAxiomsOnRandomTriples) {
  RationalSampler rs(11);
  for (int t = 0; t < 100; ++t) {
    MultiPoly a = random_poly(rs, R3, 3, 4), b = random_poly(rs, R3, 3, 4),
              c = random_poly(rs, R3, 3, 4);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(MultiPoly, NoZeroCoefficientsStored) {
  MultiPoly p = v(0) - v(0);
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(p.terms().empty());
}

TEST(MultiPoly, VariableMismatchThrows) {
  EXPECT_THROW(v(0) + MultiPoly::var(R1, 0), VariableMismatch);
}

TEST(MultiPoly, ExactDivision) {
  MultiPoly a = v(0) + v(1) * Rational(2), b = v(2) * v(2) - c3(3);
  EXPECT_EQ((a * b).divide_exact(b), a);
  EXPECT_THROW((a * b + c3(1)).divide_exact(b), DomainError);
}

TEST(MultiPoly, ComposeAndRebase) {
  MultiPoly p = v(0) * v(1);
  MultiPoly q = p.compose({v(1) + v(2), v(0), v(2)});
  EXPECT_EQ(q, (v(1) + v(2)) * v(0));
  std::vector<std::string> big{"rho12", "rho13", "rho23", "p1"};
  EXPECT_EQ(p.rebase(big).rebase(R3), p);
}

TEST(ApplyDiffop, PowerRule) {
  auto d = DiffOp::partial(R3, 0);
  EXPECT_EQ(d.apply(v(0) * v(0)), v(0) * Rational(2));
}

TEST(ApplyDiffop, ConstantAnnihilated) {
  DiffOp op = v(0) * DiffOp::partial(R3, 0, 2);
  EXPECT_TRUE(op.apply(c3(1)).is_zero());
}

TEST(ApplyDiffop, ChainRuleOnGaussian) {
  const Rational omega(3, 5);
  GaussFn g = GaussFn::exp(v(0) * (-omega / Rational(2)));
  GaussFn r = DiffOp::partial(R3, 0).apply(g);
  EXPECT_EQ(r.exponent(), g.exponent());
  EXPECT_EQ(r.prefactor(), c3(-omega / Rational(2)));
}

TEST(ApplyDiffop, QuotientRule) {
  RationalFn f(c3(1), v(0));
  RationalFn r = DiffOp::partial(R3, 0).apply(f);
  EXPECT_EQ(r, RationalFn(c3(-1), v(0) * v(0)));
}

TEST(ApplyDiffop, VariableMismatch) {
  EXPECT_THROW(DiffOp::partial(R3, 0).apply(MultiPoly::var(R1, 0)), VariableMismatch);
}

TEST(ApplyDiffop, LeibnizRule) {
  RationalSampler rs(5);
  for (int t = 0; t < 50; ++t) {
    MultiPoly f = random_poly(rs, R3, 3, 3), g = random_poly(rs, R3, 3, 3);
    const int i = static_cast<int>(rs.next_int(0, 2));
    auto d = DiffOp::partial(R3, i);
    ASSERT_EQ(d.apply(f * g), d.apply(f) * g + f * d.apply(g));
  }
}

TEST(Compose, ProductRule) {
  auto r = R1;
  MultiPoly rho = MultiPoly::var(r, 0);
  auto d = DiffOp::partial(r, 0);
  DiffOp op = compose(d, rho * d);
  EXPECT_EQ(op, rho * DiffOp::partial(r, 0, 2) + d);
  EXPECT_EQ(op.apply(rho), MultiPoly(r, Rational(1)));
  EXPECT_EQ(op.apply(rho * rho), rho * Rational(4));
}

TEST(Compose, Sl2Products) {
  // J0(N) = rho d - N, J- = d in one variable.
  auto r = R1;
  const Rational N(5);
  MultiPoly rho = MultiPoly::var(r, 0);
  auto d = DiffOp::partial(r, 0);
  DiffOp J0 = rho * d - DiffOp::multiply(MultiPoly(r, N));
  DiffOp Jm = d;
  DiffOp d2 = DiffOp::partial(r, 0, 2);
  EXPECT_EQ(compose(J0, Jm), rho * d2 - N * d);
  EXPECT_EQ(compose(Jm, J0), rho * d2 + (Rational(1) - N) * d);
}

TEST(Compose, IdentityLaw) {
  RationalSampler rs(3);
  DiffOp a = random_op(rs, R3, 2, 2);
  EXPECT_EQ(compose(a, DiffOp::identity(R3)), a);
  EXPECT_EQ(compose(DiffOp::identity(R3), a), a);
}

TEST(Compose, AgreesWithSequentialApplication) {
  RationalSampler rs(17);
  for (int t = 0; t < 20; ++t) {
    DiffOp a = random_op(rs, R3, 2, 2), b = random_op(rs, R3, 2, 2);
    MultiPoly f = random_poly(rs, R3, 4, 4);
    ASSERT_EQ(compose(a, b).apply(f), a.apply(b.apply(f)));
  }
}

TEST(Compose, Associative) {
  RationalSampler rs(23);
  for (int t = 0; t < 10; ++t) {
    DiffOp a = random_op(rs, R3, 2, 1), b = random_op(rs, R3, 2, 1), c = random_op(rs, R3, 2, 1);
    ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  }
}

TEST(Commutator, Antisymmetry) {
  RationalSampler rs(4);
  DiffOp a = random_op(rs, R3, 2, 2);
  EXPECT_TRUE(commutator(a, a).is_zero());
  EXPECT_TRUE(commutator(a, a).terms().empty());
}

TEST(Commutator, Heisenberg) {
  auto r = R1;
  auto d = DiffOp::partial(r, 0);
  DiffOp rd = MultiPoly::var(r, 0) * d;
  EXPECT_EQ(commutator(d, rd), d);
}

TEST(Commutator, PointwiseAgreement) {
  RationalSampler rs(29);
  DiffOp a = random_op(rs, R3, 2, 2), b = random_op(rs, R3, 2, 2);
  DiffOp c = commutator(a, b);
  for (int t = 0; t < 20; ++t) {
    MultiPoly f = random_poly(rs, R3, 4, 4);
    ASSERT_EQ(c.apply(f), a.apply(b.apply(f)) - b.apply(a.apply(f)));
  }
}

TEST(Poisson, CanonicalPair) {
  PhasePoly like({"rho12", "rho13", "rho23"}, {"p1", "p2", "p3"});
  auto r = poisson_bracket(PhasePoly::coord(like, 0), PhasePoly::momentum(like, 0));
  EXPECT_EQ(r, PhasePoly::constant(like, Rational(1)));
}

TEST(Poisson, AntisymmetryAndJacobi) {
  PhasePoly like({"rho12", "rho13", "rho23"}, {"p1", "p2", "p3"});
  const auto& pv = like.poly().vars();
  RationalSampler rs(31);
  for (int t = 0; t < 50; ++t) {
    PhasePoly f(3, random_poly(rs, pv, 2, 3)), g(3, random_poly(rs, pv, 2, 3)),
        h(3, random_poly(rs, pv, 2, 3));
    ASSERT_TRUE((poisson_bracket(f, g) + poisson_bracket(g, f)).is_zero());
    PhasePoly jac = poisson_bracket(f, poisson_bracket(g, h)) +
                    poisson_bracket(g, poisson_bracket(h, f)) +
                    poisson_bracket(h, poisson_bracket(f, g));
    ASSERT_TRUE(jac.is_zero());
  }
}

TEST(Gauge, IdentityGauge) {
  RationalSampler rs(8);
  DiffOp op = random_op(rs, R3, 2, 2);
  EXPECT_EQ(gauge_conjugate(op, GaussFn::exp(MultiPoly(R3)), Rational(0)), op);
}

TEST(Gauge, RejectsNonUnitPrefactor) {
  DiffOp op = DiffOp::partial(R3, 0);
  EXPECT_THROW(gauge_conjugate(op, GaussFn(v(0), MultiPoly(R3)), Rational(0)), DomainError);
}

TEST(Gauge, RoundTrip) {
  RationalSampler rs(41);
  for (int t = 0; t < 20; ++t) {
    DiffOp op = random_op(rs, R3, 2, 2);
    MultiPoly q = random_poly(rs, R3, 2, 3);
    GaussFn g = GaussFn::exp(q);
    DiffOp there = gauge_conjugate(op, g, Rational(0));
    ASSERT_EQ(gauge_conjugate(there, g.inverse_gauge(), Rational(0)), op);
  }
}

TEST(Gauge, MatchesConjugationOnGaussians) {
  // g^{-1} (op - s) (g f) = h f for polynomial f.
  RationalSampler rs(43);
  DiffOp op = random_op(rs, R3, 2, 1);
  GaussFn g = GaussFn::exp(random_poly(rs, R3, 2, 3));
  const Rational s(7, 3);
  DiffOp h = gauge_conjugate(op, g, s);
  MultiPoly f = random_poly(rs, R3, 3, 3);
  GaussFn lhs = op.apply(f * g) - s * f * g;
  EXPECT_EQ(lhs.prefactor(), h.apply(f));
}

TEST(GaussFn, ExponentDegreeCap) {
  EXPECT_THROW(GaussFn::exp(v(0) * v(0) * v(0)), DomainError);
  GaussFn a = GaussFn::exp(v(0)), b = GaussFn::exp(v(1) * v(2));
  EXPECT_EQ((a * b).exponent(), v(0) + v(1) * v(2));
}

TEST(IdentityTest, Examples) {
  auto pts = sample_points(3, 25, 1);
  EXPECT_TRUE(identity_test((v(0) + v(1)).pow(2), v(0) * v(0) + Rational(2) * v(0) * v(1) + v(1) * v(1), pts));
  EXPECT_FALSE(identity_test(v(0), v(1), pts));
  EXPECT_THROW(identity_test(v(0), v(0), std::vector<Point>(pts.begin(), pts.begin() + 10)),
               std::invalid_argument);
}

TEST(IdentityTest, DeterministicGivenSeed) {
  EXPECT_EQ(sample_points(3, 30, 99), sample_points(3, 30, 99));
  EXPECT_NE(sample_points(3, 30, 99), sample_points(3, 30, 100));
}

TEST(IdentityTest, RationalFunctionsAvoidPoles) {
  RationalFn f(v(0) * v(0) - v(1) * v(1), v(0) - v(1));
  RationalFn g(v(0) + v(1));
  EXPECT_TRUE(identity_test(f, g, 5));
}

TEST(IdentityTest, SamplerGivesUpOnIdenticallyVanishingDenominator) {
  EXPECT_THROW(sample_points(3, 25, 1, {MultiPoly(R3)}), SamplingError);
}

TEST(Serialize, RoundTrip) {
  RationalSampler rs(2);
  MultiPoly p = random_poly(rs, R3, 3, 5);
  EXPECT_EQ(multipoly_from_json(to_json(p)), p);
  DiffOp op = random_op(rs, R3, 2, 2);
  EXPECT_EQ(diffop_from_json(to_json(op)), op);
  auto j = to_json(v(0) * Rational(1, 2));
  EXPECT_EQ(j["terms"][0]["coeff"], "1/2");
  EXPECT_FALSE(j["terms"][0].contains("derivs"));
}
