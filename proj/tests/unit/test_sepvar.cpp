#include <gtest/gtest.h>

#include "fewbody/errors.hpp"
#include "fewbody/identity.hpp"
#include "fewbody/sepvar.hpp"

using namespace fewbody;

namespace {

const std::vector<std::string> R3{"rho12", "rho13", "rho23"};
const Masses kUnit{Rational(1), Rational(1), Rational(1)};

MultiPoly rv(int i) { return MultiPoly::var(R3, i); }
MultiPoly wv(int i) { return MultiPoly::var(w_variables(), i); }

Rational draw(RationalSampler& rs) { return Rational(rs.next_int(1, 9), rs.next_int(1, 5)); }

}  // namespace

TEST(WMap, Components) {
  const auto w = build_wmap(kUnit);
  EXPECT_EQ(w.w1, rv(2));
  EXPECT_EQ(w.w2, rv(0) * Rational(2) + rv(1) * Rational(2) - rv(2));
  RationalSampler rs(3);
  for (int t = 0; t < 10; ++t) {
    const Masses m{draw(rs), draw(rs), draw(rs)};
    const auto wm = build_wmap(m);
    EXPECT_EQ(wm.w1, rv(2));
    // w3 (m2+m3) sigma^2 = w1 w2, with sigma in its expanded form.
    const MultiPoly sig = (rv(2) - rv(1) + rv(0)) * m[1] - (rv(2) + rv(1) - rv(0)) * m[2];
    EXPECT_EQ(sig, wm.sigma);
    EXPECT_EQ(wm.w3.num() * (sig * sig * (m[1] + m[2])), wm.w1 * wm.w2 * wm.w3.den());
  }
}

TEST(WMap, SingularPointThrows) {
  const auto w = build_wmap(kUnit);
  // sigma = 2(rho12 - rho13) at unit masses.
  EXPECT_THROW(evaluate(w, {Rational(2), Rational(2), Rational(3)}), DomainError);
  const auto v = evaluate(w, {Rational(2), Rational(1), Rational(3)});
  EXPECT_EQ(v[0], Rational(3));
  EXPECT_EQ(v[1], Rational(3));
  EXPECT_EQ(v[2], Rational(9, 8));
}

TEST(Pushforward, LowOrderFunctions) {
  for (int d : {2, 3, 4}) {
    const Masses m{Rational(2), Rational(3), Rational(5)};
    const auto op = opham_operator(m, d);
    EXPECT_TRUE(op.apply(MultiPoly(w_variables(), Rational(1))).is_zero());
    const RationalFn r = op.apply(wv(0));
    ASSERT_TRUE(r.is_polynomial());
    EXPECT_EQ(r.as_polynomial(), MultiPoly(w_variables(), Rational(d) * Rational(8) / Rational(15)));
  }
}

TEST(Pushforward, UnitMassesD3) {
  const auto rep = verify_pushforward(kUnit, 3, 11, 50);
  EXPECT_TRUE(rep.ok);
  EXPECT_GE(rep.functions, 10);
  EXPECT_EQ(rep.points, 50);
}

TEST(Pushforward, RandomMassesAllD) {
  RationalSampler rs(2024);
  for (int t = 0; t < 5; ++t) {
    const Masses m{draw(rs), draw(rs), draw(rs)};
    for (int d : {2, 3, 4}) {
      const auto rep = verify_pushforward(m, d, 100 + t, 50);
      EXPECT_TRUE(rep.ok) << "masses " << m[0] << "," << m[1] << "," << m[2] << " d=" << d;
    }
  }
}

TEST(Pushforward, DetectsWrongOperator) {
  // Same operator with d off by one must be caught.
  const auto w = build_wmap(kUnit);
  const auto wrong = opham_operator(kUnit, 4);
  Params p;
  for (int i = 0; i < 3; ++i) p.m[i] = Mass{Rational(1), false};
  p.d = 3;
  const auto lap = build_radial_laplacian(p);
  const auto pt = std::vector<Rational>{Rational(2), Rational(1), Rational(3)};
  const auto wp = evaluate(w, pt);
  const RationalFn f = RationalFn(wv(0) * wv(2));
  const Rational lhs = lap.apply(f.compose({RationalFn(w.w1), RationalFn(w.w2), w.w3})).eval(pt);
  EXPECT_NE(lhs, wrong.apply(f).eval({wp[0], wp[1], wp[2]}));
}

TEST(Template, ClosedFormCoefficients) {
  const auto s = match_separated_template(opham_operator(kUnit, 3));
  EXPECT_EQ(s.A, Rational(2));
  EXPECT_EQ(s.B, Rational(6));
  EXPECT_EQ(s.d, Rational(3));
  const auto s4 = match_separated_template(opham_operator(kUnit, 4));
  EXPECT_EQ(s4.w3_first, wv(2) * wv(2) * Rational(24));
  EXPECT_EQ(s4.w3_second, wv(2) * wv(2) * (wv(2) * Rational(16) - Rational(2)));

  RationalSampler rs(5);
  for (int t = 0; t < 5; ++t) {
    const Masses m{draw(rs), draw(rs), draw(rs)};
    const auto got = match_separated_template(opham_operator(m, 2 + t % 3));
    const Rational s23 = m[1] + m[2];
    EXPECT_EQ(got.A, s23 / (m[1] * m[2]));
    EXPECT_EQ(got.B, s23 * (m[0] + m[1] + m[2]) / m[0]);
  }
}

TEST(Template, RejectsOtherOperators) {
  RatDiffOp mixed = opham_operator(kUnit, 3);
  mixed.add_term(Monomial{1, 1, 0}, RationalFn(wv(2)));
  EXPECT_THROW(match_separated_template(mixed), TemplateMismatch);

  RatDiffOp coupled(w_variables());
  coupled.add_term(Monomial::unit(3, 0, 2), RationalFn(wv(0) * wv(1)));
  EXPECT_THROW(match_separated_template(coupled), TemplateMismatch);

  RatDiffOp w3_leak = opham_operator(kUnit, 3);
  w3_leak.add_term(Monomial::unit(3, 2), RationalFn(wv(0)));
  EXPECT_THROW(match_separated_template(w3_leak), TemplateMismatch);
}

TEST(Potential, W3IndependenceCriterion) {
  const auto eq = potential_in_w(kUnit, {Rational(3), Rational(3), Rational(1)}, Rational(1));
  EXPECT_TRUE(eq.w3_independent);
  EXPECT_TRUE(eq.reproduces_potential);

  for (long m3 : {1, 3, 5}) {
    const Masses m{Rational(1), Rational(2), Rational(m3)};
    const auto wp = potential_in_w(m, {Rational(1), Rational(1), Rational(2)}, Rational(1));
    EXPECT_FALSE(wp.w3_independent);
    EXPECT_TRUE(wp.reproduces_potential);
    EXPECT_NE(wp.branch_sign, 0);
  }

  RationalSampler rs(17);
  for (int t = 0; t < 20; ++t) {
    const Masses m{draw(rs), draw(rs), draw(rs)};
    NuCoefficients nu{draw(rs), draw(rs), draw(rs)};
    if (t % 2 == 0) nu.nu12 = m[1] * nu.nu13 / m[2];
    const auto wp = potential_in_w(m, nu, draw(rs));
    EXPECT_EQ(wp.w3_independent, m[1] * nu.nu13 == m[2] * nu.nu12);
    EXPECT_TRUE(wp.reproduces_potential);
  }
}

TEST(OneVariable, Examples) {
  const std::vector<std::string> v{"w"};
  const MultiPoly w = MultiPoly::var(v, 0);
  const auto h0 = one_variable_operator(Rational(0), 3);
  EXPECT_EQ(h0.apply(w), RationalFn(MultiPoly(v, Rational(3))));
  const auto h1 = one_variable_operator(Rational(1), 3);
  EXPECT_EQ(h1.apply(MultiPoly(v, Rational(1))), RationalFn(MultiPoly(v, Rational(1)), w));
}

TEST(Json, Shapes) {
  const auto j = to_json(match_separated_template(opham_operator(kUnit, 3)));
  EXPECT_EQ(j["A"], "2/1");
  EXPECT_EQ(j["B"], "6/1");
  const auto p = to_json(potential_in_w(kUnit, {Rational(1), Rational(2), Rational(1)}, Rational(1)));
  EXPECT_EQ(p["w3_independent"], false);
  EXPECT_EQ(p["sqrt_sign"], "+-");
}
