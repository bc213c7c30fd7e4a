#include "fewbody/ratdiffop.hpp"

#include <sstream>

namespace fewbody {

void RatDiffOp::add_term(const Monomial& alpha, const RationalFn& c) {
  if (c.is_zero()) return;
  require_same_vars(vars_, c.vars(), "RatDiffOp::add_term");
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RationalFn RatDiffOp::coeff(const Monomial& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? RationalFn(MultiPoly(vars_)) : it->second;
}

RatDiffOp& RatDiffOp::operator+=(const RatDiffOp& o) {
  require_same_vars(vars_, o.vars_, "RatDiffOp +");
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

RatDiffOp operator*(const RationalFn& f, const RatDiffOp& a) {
  RatDiffOp r(a.vars_);
  for (const auto& [al, c] : a.terms_) r.add_term(al, f * c);
  return r;
}

RationalFn RatDiffOp::apply(const RationalFn& f) const {
  require_same_vars(vars_, f.vars(), "RatDiffOp::apply");
  RationalFn r(MultiPoly{vars_});
  for (const auto& [a, c] : terms_) {
    RationalFn df = f.diff(a);
    if (!df.is_zero()) r += c * df;
  }
  return r;
}

std::string RatDiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '[' << c.to_string() << ']';
    for (int i = 0; i < nvars(); ++i) {
      if (!a[i]) continue;
      os << "*d_" << vars_[i];
      if (a[i] > 1) os << '^' << a[i];
    }
  }
  return os.str();
}

}  // namespace fewbody
