#include "fewbody/gaussfn.hpp"

#include <cmath>

namespace fewbody {

GaussFn::GaussFn(MultiPoly prefactor, MultiPoly exponent)
    : prefactor_(std::move(prefactor)), exponent_(std::move(exponent)) {
  require_same_vars(prefactor_.vars(), exponent_.vars(), "GaussFn");
  if (exponent_.total_degree() > 2) throw DomainError("GaussFn: exponent degree exceeds 2");
}

GaussFn GaussFn::exp(MultiPoly exponent) {
  MultiPoly one(exponent.vars(), Rational(1));
  return GaussFn(std::move(one), std::move(exponent));
}

GaussFn GaussFn::diff(int var) const {
  return GaussFn(prefactor_.diff(var) + prefactor_ * exponent_.diff(var), exponent_);
}

GaussFn GaussFn::diff(const Monomial& alpha) const {
  GaussFn r = *this;
  for (int i = 0; i < alpha.size(); ++i)
    for (int k = 0; k < alpha[i] && !r.is_zero(); ++k) r = r.diff(i);
  return r;
}

GaussFn& GaussFn::operator+=(const GaussFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (!(exponent_ == o.exponent_)) throw DomainError("GaussFn +: exponents differ");
  prefactor_ += o.prefactor_;
  return *this;
}

GaussFn GaussFn::operator-(const GaussFn& o) const {
  GaussFn neg(-o.prefactor_, o.exponent_);
  GaussFn r = *this;
  return r += neg;
}

GaussFn operator*(const GaussFn& a, const GaussFn& b) {
  return GaussFn(a.prefactor_ * b.prefactor_, a.exponent_ + b.exponent_);
}

bool operator==(const GaussFn& a, const GaussFn& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero() && a.vars() == b.vars();
  return a.prefactor_ == b.prefactor_ && a.exponent_ == b.exponent_;
}

GaussFn GaussFn::inverse_gauge() const {
  if (!(prefactor_ == MultiPoly(vars(), Rational(1))))
    throw DomainError("GaussFn::inverse_gauge: prefactor is not 1");
  return GaussFn::exp(-exponent_);
}

double GaussFn::eval_double(const std::vector<double>& point) const {
  return prefactor_.eval_double(point) * std::exp(exponent_.eval_double(point));
}

}  // namespace fewbody
