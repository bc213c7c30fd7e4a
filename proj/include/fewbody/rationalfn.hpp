#pragma once

#include "fewbody/multipoly.hpp"

namespace fewbody {

/// Quotient num/den of polynomials over a shared variable list. No gcd
/// cancellation is attempted beyond the scalar content; equality is decided
/// by cross-multiplication.
class RationalFn {
 public:
  RationalFn() = default;
  explicit RationalFn(MultiPoly num);
  RationalFn(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const std::vector<std::string>& vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator is a nonzero constant.
  bool is_polynomial() const { return den_.is_constant(); }
  MultiPoly as_polynomial() const;

  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn operator-() const { return RationalFn(-num_, den_); }
  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const Rational& c) {
    return RationalFn(a.num_ * c, a.den_);
  }
  friend bool operator==(const RationalFn& a, const RationalFn& b);

  RationalFn diff(int var) const;
  RationalFn diff(const Monomial& alpha) const;

  /// Throws DomainError at a zero of the denominator.
  Rational eval(const std::vector<Rational>& point) const;

  RationalFn compose(const std::vector<RationalFn>& images) const;

  std::string to_string() const;

 private:
  void normalize();
  MultiPoly num_;
  MultiPoly den_;
};

/// Evaluates a polynomial at rational-function arguments.
RationalFn compose_poly(const MultiPoly& p, const std::vector<RationalFn>& images);

}  // namespace fewbody
