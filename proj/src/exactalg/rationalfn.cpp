#include "fewbody/rationalfn.hpp"

#include <optional>

#include "fewbody/errors.hpp"

namespace fewbody {

RationalFn::RationalFn(MultiPoly num) : num_(std::move(num)), den_(num_.vars(), Rational(1)) {}

RationalFn::RationalFn(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  require_same_vars(num_.vars(), den_.vars(), "RationalFn");
  if (den_.is_zero()) throw DomainError("RationalFn: zero denominator");
  normalize();
}

void RationalFn::normalize() {
  // Make the denominator's leading coefficient 1; cancel a constant denominator.
  const Rational lc = den_.terms().rbegin()->second;
  if (lc != Rational(1)) {
    const Rational inv = Rational(1) / lc;
    num_ *= inv;
    den_ *= inv;
  }
  if (num_.is_zero()) den_ = MultiPoly(num_.vars(), Rational(1));
}

MultiPoly RationalFn::as_polynomial() const {
  if (!is_polynomial()) throw DomainError("RationalFn: not a polynomial");
  return num_ * (Rational(1) / den_.constant_term());
}

namespace {

/// a / b when b divides a (up to a constant) and b is not constant.
std::optional<MultiPoly> quotient(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_constant() || a.total_degree() < b.total_degree()) return std::nullopt;
  try {
    return a.divide_exact(b);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else if (auto q = quotient(o.den_, den_)) {
    num_ = num_ * *q + o.num_;
    den_ = o.den_;
  } else if (auto q2 = quotient(den_, o.den_)) {
    num_ += o.num_ * *q2;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  if (a.den_ == b.num_ && !b.num_.is_zero()) return RationalFn(a.num_, b.den_);
  if (b.den_ == a.num_ && !a.num_.is_zero()) return RationalFn(b.num_, a.den_);
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) throw DomainError("RationalFn: division by zero");
  return a * RationalFn(b.den_, b.num_);
}

bool operator==(const RationalFn& a, const RationalFn& b) {
  if (a.vars() != b.vars()) return false;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFn RationalFn::diff(int var) const {
  if (den_.is_constant()) return RationalFn(num_.diff(var), den_);
  return RationalFn(num_.diff(var) * den_ - num_ * den_.diff(var), den_ * den_);
}

RationalFn RationalFn::diff(const Monomial& alpha) const {
  RationalFn r = *this;
  for (int i = 0; i < alpha.size(); ++i)
    for (int k = 0; k < alpha[i]; ++k) r = r.diff(i);
  return r;
}

Rational RationalFn::eval(const std::vector<Rational>& point) const {
  const Rational d = den_.eval(point);
  if (d.is_zero()) throw DomainError("RationalFn::eval: denominator vanishes");
  return num_.eval(point) / d;
}

RationalFn compose_poly(const MultiPoly& p, const std::vector<RationalFn>& images) {
  if (static_cast<int>(images.size()) != p.nvars())
    throw VariableMismatch("compose_poly: wrong number of images");
  const auto& target = images.front().vars();
  RationalFn r(MultiPoly{target});
  for (const auto& [m, c] : p.terms()) {
    RationalFn t(MultiPoly(target, c));
    for (int i = 0; i < p.nvars(); ++i)
      for (int k = 0; k < m[i]; ++k) t = t * images[i];
    r += t;
  }
  return r;
}

RationalFn RationalFn::compose(const std::vector<RationalFn>& images) const {
  return compose_poly(num_, images) / compose_poly(den_, images);
}

std::string RationalFn::to_string() const {
  if (den_.is_constant()) return as_polynomial().to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace fewbody
