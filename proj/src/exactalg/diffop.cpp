#include "fewbody/diffop.hpp"

#include <functional>
#include <sstream>

namespace fewbody {

Rational multi_binomial(const Monomial& alpha, const Monomial& gamma) {
  std::int64_t r = 1;
  for (int i = 0; i < alpha.size(); ++i) r *= binomial(alpha[i], gamma[i]);
  return Rational(static_cast<long>(r));
}

DiffOp::DiffOp(std::vector<std::string> vars, int nderiv)
    : vars_(std::move(vars)), nderiv_(nderiv < 0 ? static_cast<int>(vars_.size()) : nderiv) {
  if (nderiv_ > nvars()) throw std::invalid_argument("DiffOp: nderiv exceeds variable count");
}

DiffOp DiffOp::identity(const std::vector<std::string>& vars, int nderiv) {
  DiffOp op(vars, nderiv);
  op.add_term(Monomial(op.nvars()), MultiPoly(vars, Rational(1)));
  return op;
}

DiffOp DiffOp::partial(const std::vector<std::string>& vars, int var, int times, int nderiv) {
  DiffOp op(vars, nderiv);
  if (var >= op.nderiv_) throw std::invalid_argument("DiffOp::partial: parameter variable");
  op.add_term(Monomial::unit(op.nvars(), var, times), MultiPoly(vars, Rational(1)));
  return op;
}

DiffOp DiffOp::multiply(const MultiPoly& p, int nderiv) {
  DiffOp op(p.vars(), nderiv);
  op.add_term(Monomial(op.nvars()), p);
  return op;
}

int DiffOp::order() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

MultiPoly DiffOp::coeff(const Monomial& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? MultiPoly(vars_) : it->second;
}

MultiPoly DiffOp::coeff(std::initializer_list<int> alpha) const {
  Monomial m(nvars());
  int i = 0;
  for (int e : alpha) m.set(i++, e);
  return coeff(m);
}

void DiffOp::add_term(const Monomial& alpha, const MultiPoly& c) {
  if (c.is_zero()) return;
  check_compatible(c.vars(), "DiffOp::add_term");
  if (alpha.size() != nvars()) throw VariableMismatch("DiffOp: derivative index length mismatch");
  for (int i = nderiv_; i < nvars(); ++i)
    if (alpha[i]) throw std::invalid_argument("DiffOp: derivative in a parameter variable");
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DiffOp::check_compatible(const std::vector<std::string>& v, const char* where) const {
  require_same_vars(vars_, v, where);
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  check_compatible(o.vars_, "DiffOp +");
  if (nderiv_ != o.nderiv_) throw VariableMismatch("DiffOp +: differentiable variables differ");
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) { return *this += -o; }

DiffOp DiffOp::operator-() const {
  DiffOp r = *this;
  for (auto& [a, c] : r.terms_) c = -c;
  return r;
}

DiffOp operator*(const Rational& c, const DiffOp& a) {
  DiffOp r(a.vars_, a.nderiv_);
  for (const auto& [al, co] : a.terms_) r.add_term(al, co * c);
  return r;
}

DiffOp operator*(const MultiPoly& p, const DiffOp& a) {
  DiffOp r(a.vars_, a.nderiv_);
  for (const auto& [al, co] : a.terms_) r.add_term(al, p * co);
  return r;
}

bool operator==(const DiffOp& a, const DiffOp& b) {
  return a.vars_ == b.vars_ && a.nderiv_ == b.nderiv_ && a.terms_ == b.terms_;
}

MultiPoly DiffOp::apply(const MultiPoly& f) const {
  check_compatible(f.vars(), "DiffOp::apply");
  MultiPoly r(vars_);
  for (const auto& [a, c] : terms_) {
    MultiPoly df = f.diff(a);
    if (!df.is_zero()) r += c * df;
  }
  return r;
}

GaussFn DiffOp::apply(const GaussFn& f) const {
  check_compatible(f.vars(), "DiffOp::apply");
  std::map<Monomial, GaussFn, GradedLex> cache;
  cache.emplace(Monomial(nvars()), f);
  std::function<const GaussFn&(const Monomial&)> deriv = [&](const Monomial& a) -> const GaussFn& {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    for (int i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      Monomial step = a;
      step.set(i, a[i] - 1);
      GaussFn g = deriv(step).diff(i);
      return cache.emplace(a, std::move(g)).first->second;
    }
    return cache.at(a);
  };
  GaussFn r(MultiPoly(vars_), f.exponent());
  for (const auto& [a, c] : terms_) r += c * deriv(a);
  return r;
}

RationalFn DiffOp::apply(const RationalFn& f) const {
  check_compatible(f.vars(), "DiffOp::apply");
  std::map<Monomial, RationalFn, GradedLex> cache;
  cache.emplace(Monomial(nvars()), f);
  std::function<const RationalFn&(const Monomial&)> deriv = [&](const Monomial& a) -> const RationalFn& {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    for (int i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      Monomial step = a;
      step.set(i, a[i] - 1);
      RationalFn g = deriv(step).diff(i);
      return cache.emplace(a, std::move(g)).first->second;
    }
    return cache.at(a);
  };
  RationalFn r(MultiPoly{vars_});
  for (const auto& [a, c] : terms_) r += RationalFn(c) * deriv(a);
  return r;
}

DiffOp DiffOp::substitute(int var, const Rational& value) const {
  DiffOp r(vars_, nderiv_);
  for (const auto& [a, c] : terms_) r.add_term(a, c.substitute(var, value));
  return r;
}

DiffOp DiffOp::homogeneous_part(int k) const {
  DiffOp r(vars_, nderiv_);
  for (const auto& [a, c] : terms_)
    if (a.degree() == k) r.add_term(a, c);
  return r;
}

std::string DiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ')';
    for (int i = 0; i < nvars(); ++i) {
      if (!a[i]) continue;
      os << "*d_" << vars_[i];
      if (a[i] > 1) os << '^' << a[i];
    }
  }
  return os.str();
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  require_same_vars(a.vars(), b.vars(), "compose");
  if (a.nderiv() != b.nderiv()) throw VariableMismatch("compose: differentiable variables differ");
  DiffOp r(a.vars(), a.nderiv());
  for (const auto& [alpha, ca] : a.terms()) {
    for_each_submultiindex(alpha, [&](const Monomial& gamma) {
      const Rational binom = multi_binomial(alpha, gamma);
      const Monomial rest = alpha / gamma;
      for (const auto& [beta, cb] : b.terms()) {
        MultiPoly dcb = cb.diff(gamma);
        if (dcb.is_zero()) continue;
        r.add_term(rest * beta, (ca * dcb) * binom);
      }
    });
  }
  return r;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return compose(a, b) - compose(b, a); }

DiffOp gauge_conjugate(const DiffOp& op, const GaussFn& g, const Rational& shift) {
  require_same_vars(op.vars(), g.vars(), "gauge_conjugate");
  if (!(g.prefactor() == MultiPoly(g.vars(), Rational(1))))
    throw DomainError("gauge_conjugate: gauge factor must have unit prefactor");
  for (int i = op.nderiv(); i < op.nvars(); ++i)
    if (g.exponent().degree_in(i) > 0)
      throw DomainError("gauge_conjugate: exponent depends on a parameter variable");
  // P_gamma = exp(-q) d^gamma exp(q), a polynomial.
  std::map<Monomial, MultiPoly, GradedLex> pref;
  auto prefactor = [&](const Monomial& gamma) -> const MultiPoly& {
    auto it = pref.find(gamma);
    if (it != pref.end()) return it->second;
    return pref.emplace(gamma, g.diff(gamma).prefactor()).first->second;
  };
  DiffOp shifted = op;
  if (!shift.is_zero())
    shifted -= DiffOp::multiply(MultiPoly(op.vars(), shift), op.nderiv());
  DiffOp r(op.vars(), op.nderiv());
  for (const auto& [alpha, c] : shifted.terms()) {
    for_each_submultiindex(alpha, [&](const Monomial& gamma) {
      r.add_term(alpha / gamma, (c * prefactor(gamma)) * multi_binomial(alpha, gamma));
    });
  }
  return r;
}

}  // namespace fewbody
