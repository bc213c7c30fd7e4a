#pragma once

#include <vector>

#include "fewbody/rational.hpp"

namespace fewbody {

/// Dense univariate polynomial over Q, coefficients from degree 0 upward.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({Rational(0), Rational(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational operator[](int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const Rational& s) const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly derivative() const;
  UPoly monic() const;
  Rational eval(const Rational& x) const;
  double eval_double(double x) const;

  /// Quotient and remainder; divisor must be nonzero.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);

 private:
  void trim();
  std::vector<Rational> c_;
};

UPoly gcd(UPoly a, UPoly b);  // monic, gcd(0,0) = 0

/// Squarefree decomposition: p = c * prod f_k^k, returned as (f_k, k) pairs with monic f_k.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);

/// A real root of a squarefree polynomial: either exact, or an isolating interval.
struct RealRoot {
  bool exact = false;
  Rational value;   // exact value, or interval midpoint
  Rational lo, hi;  // lo == hi == value when exact
};

/// Certified real roots of a squarefree polynomial in increasing order; rational
/// roots are detected exactly, the rest refined to width <= 2^-bits.
std::vector<RealRoot> real_roots(const UPoly& squarefree, int bits = 64);

/// Number of distinct real roots in (lo, hi] by Sturm's theorem.
int sturm_count(const std::vector<UPoly>& chain, const Rational& lo, const Rational& hi);
std::vector<UPoly> sturm_chain(const UPoly& p);

/// Simplest rational (smallest denominator) in the closed interval [lo, hi].
Rational simplest_rational(const Rational& lo, const Rational& hi);

using RMatrix = std::vector<std::vector<Rational>>;

/// det(x I - A) by exact Hessenberg reduction.
UPoly characteristic_polynomial(const RMatrix& a);

/// Exact rank by Gaussian elimination over Q.
int rank(RMatrix a);

/// Basis of the right null space of A (columns returned as vectors).
std::vector<std::vector<Rational>> null_space(RMatrix a);

}  // namespace fewbody
