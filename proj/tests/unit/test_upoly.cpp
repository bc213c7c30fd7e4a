#include <gtest/gtest.h>

#include <cmath>

#include "fewbody/upoly.hpp"

using namespace fewbody;

namespace {

UPoly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UPoly(v);
}

RMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  RMatrix m;
  for (auto r : rows) {
    m.emplace_back();
    for (long x : r) m.back().emplace_back(x);
  }
  return m;
}

}  // namespace

TEST(UPoly, ArithmeticAndDivision) {
  const UPoly a = P({-1, 0, 1});  // x^2 - 1
  const UPoly b = P({1, 1});
  UPoly q, r;
  UPoly::divmod(a, b, q, r);
  EXPECT_EQ(q, P({-1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(a.derivative(), P({0, 2}));
  EXPECT_EQ(gcd(a, P({1, 2, 1})), P({1, 1}));
  EXPECT_EQ(a.eval(Rational(3)), Rational(8));
}

TEST(UPoly, SquarefreeDecomposition) {
  // (x-1)^2 (x+2)^3 x
  const UPoly p = P({-1, 1}) * P({-1, 1}) * P({2, 1}) * P({2, 1}) * P({2, 1}) * P({0, 1});
  const auto f = squarefree_decomposition(p);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].first, P({0, 1}));
  EXPECT_EQ(f[0].second, 1);
  EXPECT_EQ(f[1].first, P({-1, 1}));
  EXPECT_EQ(f[1].second, 2);
  EXPECT_EQ(f[2].first, P({2, 1}));
  EXPECT_EQ(f[2].second, 3);
}

TEST(UPoly, SimplestRational) {
  EXPECT_EQ(simplest_rational(Rational(1, 3), Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(simplest_rational(Rational(31, 100), Rational(34, 100)), Rational(1, 3));
  EXPECT_EQ(simplest_rational(Rational(-34, 100), Rational(-31, 100)), Rational(-1, 3));
  EXPECT_EQ(simplest_rational(Rational(-1), Rational(5)), Rational(0));
  EXPECT_EQ(simplest_rational(Rational(7, 2), Rational(7, 2)), Rational(7, 2));
}

TEST(UPoly, RealRootsRationalAndIrrational) {
  // (3x - 2)(x^2 - 7)
  const auto roots = real_roots(P({-2, 3}) * P({-7, 0, 1}));
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_FALSE(roots[0].exact);
  EXPECT_TRUE(roots[1].exact);
  EXPECT_EQ(roots[1].value, Rational(2, 3));
  EXPECT_FALSE(roots[2].exact);
  EXPECT_NEAR(roots[2].value.to_double(), std::sqrt(7.0), 1e-15);
  EXPECT_LE((roots[2].hi - roots[2].lo).to_double(), std::ldexp(1.0, -64));
  EXPECT_LT(roots[2].lo * roots[2].lo, Rational(7));
  EXPECT_GT(roots[2].hi * roots[2].hi, Rational(7));
}

TEST(UPoly, NoRealRoots) { EXPECT_TRUE(real_roots(P({1, 0, 1})).empty()); }

TEST(UPoly, CharacteristicPolynomial) {
  EXPECT_EQ(characteristic_polynomial(M({{0, -6}, {-4, 4}})), P({-24, -4, 1}));
  // Needs a pivot swap during the Hessenberg reduction.
  const RMatrix a = M({{1, 2, 0}, {0, 3, 0}, {4, 5, 6}});
  EXPECT_EQ(characteristic_polynomial(a), P({-1, 1}) * P({-3, 1}) * P({-6, 1}));
  const RMatrix b = M({{2, 1, 0, 3}, {1, 0, 1, 1}, {0, 4, 1, 2}, {5, 1, 1, 0}});
  const UPoly cb = characteristic_polynomial(b);
  EXPECT_EQ(cb.degree(), 4);
  EXPECT_EQ(cb[3], Rational(-3));
  EXPECT_EQ(cb, P({58, 17, -21, -3, 1}));
}

TEST(UPoly, RankAndNullSpace) {
  const RMatrix a = M({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank(a), 2);
  const auto ns = null_space(a);
  ASSERT_EQ(ns.size(), 1u);
  for (const auto& row : a) {
    Rational s(0);
    for (int j = 0; j < 3; ++j) s += row[j] * ns[0][j];
    EXPECT_TRUE(s.is_zero());
  }
}
