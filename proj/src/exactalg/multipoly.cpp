#include "fewbody/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace fewbody {

Monomial::Monomial(std::initializer_list<int> exps) : n_(static_cast<int>(exps.size())) {
  if (n_ > kMaxVars) throw std::invalid_argument("Monomial: too many variables");
  int i = 0;
  for (int e : exps) e_[i++] = static_cast<std::uint16_t>(e);
}

Monomial Monomial::unit(int nvars, int var, int power) {
  Monomial m(nvars);
  m.set(var, power);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int i = 0; i < n_; ++i) d += e_[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < n_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(n_);
  for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] + o.e_[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(n_);
  for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
  return r;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (int i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

void require_same_vars(const std::vector<std::string>& a, const std::vector<std::string>& b,
                       const char* where) {
  if (a != b) {
    std::string msg = std::string(where) + ": variable lists differ (";
    for (const auto& s : a) msg += s + " ";
    msg += "vs ";
    for (const auto& s : b) msg += s + " ";
    throw VariableMismatch(msg + ")");
  }
}

void MultiPoly::check_vars() const {
  if (vars_.size() > static_cast<size_t>(kMaxVars))
    throw std::invalid_argument("MultiPoly: too many variables");
}

MultiPoly::MultiPoly(std::vector<std::string> vars, const Rational& c) : vars_(std::move(vars)) {
  check_vars();
  if (!c.is_zero()) terms_.emplace(Monomial(nvars()), c);
}

MultiPoly MultiPoly::var(const std::vector<std::string>& vars, int i) {
  return monomial(vars, Monomial::unit(static_cast<int>(vars.size()), i));
}

MultiPoly MultiPoly::var(const std::vector<std::string>& vars, const std::string& name) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw VariableMismatch("MultiPoly: unknown variable " + name);
  return var(vars, static_cast<int>(it - vars.begin()));
}

MultiPoly MultiPoly::monomial(const std::vector<std::string>& vars, const Monomial& m,
                              const Rational& c) {
  MultiPoly p(vars);
  p.add_term(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational MultiPoly::constant_term() const { return coeff(Monomial(nvars())); }

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

int MultiPoly::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  if (m.size() != nvars()) throw VariableMismatch("MultiPoly: exponent length mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_vars(vars_, o.vars_, "MultiPoly +");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_vars(vars_, o.vars_, "MultiPoly -");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_vars(a.vars_, b.vars_, "MultiPoly *");
  MultiPoly r(a.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::operator+(const Rational& c) const {
  MultiPoly r = *this;
  r.add_term(Monomial(nvars()), c);
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw DomainError("MultiPoly::pow: negative exponent");
  MultiPoly result(vars_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::diff(int var, int times) const {
  MultiPoly r(vars_);
  for (const auto& [m, c] : terms_) {
    const int e = m[var];
    if (e < times) continue;
    Rational f = c;
    for (int k = 0; k < times; ++k) f *= Rational(e - k);
    Monomial mm = m;
    mm.set(var, e - times);
    r.add_term(mm, f);
  }
  return r;
}

MultiPoly MultiPoly::diff(const Monomial& alpha) const {
  MultiPoly r = *this;
  for (int i = 0; i < alpha.size() && !r.is_zero(); ++i)
    if (alpha[i] > 0) r = r.diff(i, alpha[i]);
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars())
    throw VariableMismatch("MultiPoly::eval: point dimension mismatch");
  // Cache powers per variable.
  std::vector<std::vector<Rational>> pw(nvars());
  for (int i = 0; i < nvars(); ++i) {
    const int dmax = std::max(0, degree_in(i));
    pw[i].reserve(dmax + 1);
    pw[i].push_back(Rational(1));
    for (int k = 1; k <= dmax; ++k) pw[i].push_back(pw[i].back() * point[i]);
  }
  Rational s;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars(); ++i)
      if (m[i]) t *= pw[i][m[i]];
    s += t;
  }
  return s;
}

double MultiPoly::eval_double(const std::vector<double>& point) const {
  double s = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.to_double();
    for (int i = 0; i < nvars(); ++i)
      for (int k = 0; k < m[i]; ++k) t *= point[i];
    s += t;
  }
  return s;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars())
    throw VariableMismatch("MultiPoly::compose: wrong number of images");
  if (images.empty()) return *this;
  const auto& target = images.front().vars();
  for (const auto& im : images) require_same_vars(target, im.vars(), "MultiPoly::compose");
  std::vector<std::vector<MultiPoly>> pw(nvars());
  for (int i = 0; i < nvars(); ++i) {
    pw[i].push_back(MultiPoly(target, Rational(1)));
    for (int k = 1; k <= std::max(0, degree_in(i)); ++k) pw[i].push_back(pw[i].back() * images[i]);
  }
  MultiPoly r(target);
  for (const auto& [m, c] : terms_) {
    MultiPoly t(target, c);
    for (int i = 0; i < nvars(); ++i)
      if (m[i]) t = t * pw[i][m[i]];
    r += t;
  }
  return r;
}

MultiPoly MultiPoly::substitute(int var, const Rational& value) const {
  MultiPoly r(vars_);
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mm.set(var, 0);
    r.add_term(mm, c * value.pow(m[var]));
  }
  return r;
}

MultiPoly MultiPoly::rebase(const std::vector<std::string>& target) const {
  std::vector<int> map(nvars(), -1);
  for (int i = 0; i < nvars(); ++i) {
    auto it = std::find(target.begin(), target.end(), vars_[i]);
    if (it != target.end()) map[i] = static_cast<int>(it - target.begin());
  }
  MultiPoly r(target);
  for (const auto& [m, c] : terms_) {
    Monomial mm(static_cast<int>(target.size()));
    for (int i = 0; i < nvars(); ++i) {
      if (m[i] == 0) continue;
      if (map[i] < 0) throw VariableMismatch("MultiPoly::rebase: variable " + vars_[i] + " missing");
      mm.set(map[i], mm[map[i]] + m[i]);
    }
    r.add_term(mm, c);
  }
  return r;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& d) const {
  require_same_vars(vars_, d.vars_, "MultiPoly::divide_exact");
  if (d.is_zero()) throw DomainError("MultiPoly::divide_exact: division by zero");
  const auto& [lm, lc] = *d.terms_.rbegin();
  MultiPoly q(vars_), rem = *this;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.rbegin();
    if (!lm.divides(rm)) throw DomainError("MultiPoly::divide_exact: not divisible");
    MultiPoly t = monomial(vars_, rm / lm, rc / lc);
    q += t;
    rem -= t * d;
  }
  return q;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (!first) {
      os << (a.sign() < 0 ? " - " : " + ");
      a = a.abs();
    } else if (a.sign() < 0) {
      os << '-';
      a = a.abs();
    }
    first = false;
    const bool unit = a == Rational(1);
    if (!unit || m.degree() == 0) os << a;
    bool star = !unit || m.degree() == 0;
    for (int i = 0; i < nvars(); ++i) {
      if (!m[i]) continue;
      if (star) os << '*';
      os << vars_[i];
      if (m[i] > 1) os << '^' << m[i];
      star = true;
    }
  }
  return os.str();
}

}  // namespace fewbody
