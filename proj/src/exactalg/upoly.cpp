#include "fewbody/upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace fewbody {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)[static_cast<int>(i)] + o[static_cast<int>(i)];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + o * Rational(-1); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const Rational& s) const {
  std::vector<Rational> r = c_;
  for (auto& v : r) v *= s;
  return UPoly(std::move(r));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return *this * (Rational(1) / leading());
}

Rational UPoly::eval(const Rational& x) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

double UPoly::eval_double(double x) const {
  double r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->to_double();
  return r;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw std::domain_error("UPoly::divmod: division by zero polynomial");
  std::vector<Rational> rem = a.c_;
  const int db = b.degree();
  std::vector<Rational> quo(std::max(0, a.degree() - db + 1));
  const Rational inv = Rational(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k].is_zero()) continue;
    const Rational f = rem[k] * inv;
    quo[k - db] = f;
    for (int i = 0; i <= db; ++i) rem[k - db + i] -= f * b.c_[i];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    UPoly::divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
  // Yun's algorithm (characteristic zero).
  std::vector<std::pair<UPoly, int>> out;
  if (p.degree() < 1) return out;
  const UPoly f = p.monic();
  const UPoly fp = f.derivative();
  UPoly a = gcd(f, fp);
  UPoly q, r;
  UPoly::divmod(f, a, q, r);
  UPoly b = q;
  UPoly::divmod(fp, a, q, r);
  UPoly c = q;
  UPoly d = c - b.derivative();
  int k = 1;
  while (b.degree() >= 1) {
    UPoly g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, k);
    UPoly::divmod(b, g, q, r);
    b = q;
    UPoly::divmod(d, g, q, r);
    d = q - b.derivative();
    ++k;
  }
  return out;
}

std::vector<UPoly> sturm_chain(const UPoly& p) {
  std::vector<UPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    UPoly q, r;
    UPoly::divmod(chain[chain.size() - 2], chain.back(), q, r);
    if (r.is_zero()) break;
    chain.push_back(r * Rational(-1));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

namespace {

int sign_changes(const std::vector<UPoly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& f : chain) {
    const int s = f.eval(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational floor_of(const Rational& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return Rational(f);
}

}  // namespace

int sturm_count(const std::vector<UPoly>& chain, const Rational& lo, const Rational& hi) {
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

Rational simplest_rational(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw std::invalid_argument("simplest_rational: empty interval");
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_rational(-hi, -lo);
  const Rational fl = floor_of(lo);
  if (fl == lo) return lo;
  if (fl + Rational(1) <= hi) return fl + Rational(1);
  return fl + Rational(1) / simplest_rational(Rational(1) / (hi - fl), Rational(1) / (lo - fl));
}

std::vector<RealRoot> real_roots(const UPoly& p, int bits) {
  std::vector<RealRoot> roots;
  if (p.degree() < 1) return roots;
  const auto chain = sturm_chain(p);
  Rational bound(0);
  for (int i = 0; i < p.degree(); ++i) bound = std::max(bound, (p[i] / p.leading()).abs());
  bound = bound + Rational(1);
  Rational width(1);
  for (int i = 0; i < bits; ++i) width = width / Rational(2);

  struct Job {
    Rational lo, hi;
    int count;
  };
  std::vector<Job> stack{{-bound, bound, sturm_count(chain, -bound, bound)}};
  std::vector<Job> isolated;
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    if (j.count == 0) continue;
    if (j.count == 1) {
      isolated.push_back(j);
      continue;
    }
    const Rational mid = (j.lo + j.hi) / Rational(2);
    const int left = sturm_count(chain, j.lo, mid);
    stack.push_back({mid, j.hi, j.count - left});
    stack.push_back({j.lo, mid, left});
  }
  for (auto& j : isolated) {
    // Root lies in (lo, hi].
    RealRoot r;
    int checkpoint = 4;
    Rational span = j.hi - j.lo;
    while (true) {
      if (p.eval(j.hi).is_zero()) {
        r.exact = true;
        r.value = r.lo = r.hi = j.hi;
        break;
      }
      if (span <= width) {
        r.lo = j.lo;
        r.hi = j.hi;
        r.value = (j.lo + j.hi) / Rational(2);
        break;
      }
      if (--checkpoint == 0) {
        checkpoint = 8;
        const Rational s = simplest_rational(j.lo, j.hi);
        if (s != j.lo && p.eval(s).is_zero()) {
          r.exact = true;
          r.value = r.lo = r.hi = s;
          break;
        }
      }
      const Rational mid = (j.lo + j.hi) / Rational(2);
      if (sturm_count(chain, j.lo, mid) == 1)
        j.hi = mid;
      else
        j.lo = mid;
      span = j.hi - j.lo;
    }
    roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end(), [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
  return roots;
}

UPoly characteristic_polynomial(const RMatrix& a0) {
  const int n = static_cast<int>(a0.size());
  RMatrix h = a0;
  for (const auto& row : h)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("characteristic_polynomial: square matrix required");
  // Similarity reduction to upper Hessenberg form.
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (!h[i][j].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (int r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    const Rational inv = Rational(1) / h[j + 1][j];
    for (int k = j + 2; k < n; ++k) {
      if (h[k][j].is_zero()) continue;
      const Rational f = h[k][j] * inv;
      for (int c = 0; c < n; ++c) h[k][c] -= f * h[j + 1][c];
      for (int r = 0; r < n; ++r) h[r][j + 1] += f * h[r][k];
    }
  }
  std::vector<UPoly> p(n + 1);
  p[0] = UPoly::constant(Rational(1));
  for (int k = 1; k <= n; ++k) {
    p[k] = (UPoly::x() - UPoly::constant(h[k - 1][k - 1])) * p[k - 1];
    Rational prod(1);
    for (int i = k - 1; i >= 1; --i) {
      prod *= h[i][i - 1];
      if (prod.is_zero()) break;
      p[k] = p[k] - p[i - 1] * (h[i - 1][k - 1] * prod);
    }
  }
  return p[n];
}

namespace {

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RMatrix& a) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return pivots;
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (int k = c; k < cols; ++k) a[r][k] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (int k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(RMatrix a) { return static_cast<int>(rref(a).size()); }

std::vector<std::vector<Rational>> null_space(RMatrix a) {
  std::vector<std::vector<Rational>> basis;
  if (a.empty()) return basis;
  const int cols = static_cast<int>(a[0].size());
  const auto pivots = rref(a);
  std::vector<int> pivot_row(cols, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<int>(r);
  for (int free = 0; free < cols; ++free) {
    if (pivot_row[free] >= 0) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = Rational(1);
    for (int c = 0; c < cols; ++c)
      if (pivot_row[c] >= 0) v[c] = -a[pivot_row[c]][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace fewbody
