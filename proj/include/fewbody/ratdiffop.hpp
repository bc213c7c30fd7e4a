#pragma once

#include <map>

#include "fewbody/rationalfn.hpp"

namespace fewbody {

/// Differential operator with rational-function coefficients, normal order.
/// Used where coefficients are genuinely non-polynomial (w-coordinates).
class RatDiffOp {
 public:
  using Terms = std::map<Monomial, RationalFn, GradedLex>;

  explicit RatDiffOp(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& alpha, const RationalFn& c);
  RationalFn coeff(const Monomial& alpha) const;

  RatDiffOp& operator+=(const RatDiffOp& o);
  friend RatDiffOp operator+(RatDiffOp a, const RatDiffOp& b) { return a += b; }
  /// Left multiplication by a function.
  friend RatDiffOp operator*(const RationalFn& f, const RatDiffOp& a);

  RationalFn apply(const RationalFn& f) const;
  RationalFn apply(const MultiPoly& f) const { return apply(RationalFn(f)); }

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  Terms terms_;
};

}  // namespace fewbody
