#pragma once

#include "fewbody/multipoly.hpp"

namespace fewbody {

/// prefactor * exp(exponent) with a polynomial exponent of total degree <= 2.
class GaussFn {
 public:
  GaussFn(MultiPoly prefactor, MultiPoly exponent);
  /// exp(exponent) with unit prefactor.
  static GaussFn exp(MultiPoly exponent);

  const MultiPoly& prefactor() const { return prefactor_; }
  const MultiPoly& exponent() const { return exponent_; }
  const std::vector<std::string>& vars() const { return prefactor_.vars(); }
  bool is_zero() const { return prefactor_.is_zero(); }

  GaussFn diff(int var) const;
  GaussFn diff(const Monomial& alpha) const;

  /// Same exponent required.
  GaussFn& operator+=(const GaussFn& o);
  GaussFn operator-(const GaussFn& o) const;
  friend GaussFn operator+(GaussFn a, const GaussFn& b) { return a += b; }
  friend GaussFn operator*(const GaussFn& a, const GaussFn& b);
  friend GaussFn operator*(const MultiPoly& p, const GaussFn& g) {
    return GaussFn(p * g.prefactor_, g.exponent_);
  }
  friend bool operator==(const GaussFn& a, const GaussFn& b);

  GaussFn inverse_gauge() const;  // exp(-exponent); requires unit prefactor

  double eval_double(const std::vector<double>& point) const;

 private:
  MultiPoly prefactor_;
  MultiPoly exponent_;
};

}  // namespace fewbody
