#include "fewbody/phasepoly.hpp"

namespace fewbody {

namespace {

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

PhasePoly::PhasePoly(std::vector<std::string> coords, std::vector<std::string> momenta)
    : ncoords_(static_cast<int>(coords.size())), poly_(concat(std::move(coords), momenta)) {
  if (static_cast<int>(momenta.size()) != ncoords_)
    throw VariableMismatch("PhasePoly: each coordinate needs one momentum");
}

PhasePoly::PhasePoly(int ncoords, MultiPoly poly) : ncoords_(ncoords), poly_(std::move(poly)) {
  if (poly_.nvars() != 2 * ncoords_) throw VariableMismatch("PhasePoly: odd variable count");
}

PhasePoly PhasePoly::coord(const PhasePoly& like, int i) {
  return PhasePoly(like.ncoords_, MultiPoly::var(like.poly_.vars(), i));
}

PhasePoly PhasePoly::momentum(const PhasePoly& like, int i) {
  return PhasePoly(like.ncoords_, MultiPoly::var(like.poly_.vars(), like.ncoords_ + i));
}

PhasePoly PhasePoly::constant(const PhasePoly& like, const Rational& c) {
  return PhasePoly(like.ncoords_, MultiPoly(like.poly_.vars(), c));
}

PhasePoly PhasePoly::lift(const PhasePoly& like, const MultiPoly& coords_only) {
  return PhasePoly(like.ncoords_, coords_only.rebase(like.poly_.vars()));
}

std::vector<std::string> PhasePoly::coord_names() const {
  return {poly_.vars().begin(), poly_.vars().begin() + ncoords_};
}

PhasePoly& PhasePoly::operator+=(const PhasePoly& o) {
  poly_ += o.poly_;
  return *this;
}

PhasePoly& PhasePoly::operator-=(const PhasePoly& o) {
  poly_ -= o.poly_;
  return *this;
}

PhasePoly operator*(const PhasePoly& a, const PhasePoly& b) {
  return PhasePoly(a.ncoords_, a.poly_ * b.poly_);
}

PhasePoly PhasePoly::momentum_degree_part(int k) const {
  MultiPoly r(poly_.vars());
  for (const auto& [m, c] : poly_.terms()) {
    int deg = 0;
    for (int i = ncoords_; i < 2 * ncoords_; ++i) deg += m[i];
    if (deg == k) r.add_term(m, c);
  }
  return PhasePoly(ncoords_, r);
}

PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g) {
  require_same_vars(f.poly().vars(), g.poly().vars(), "poisson_bracket");
  const int n = f.ncoords();
  MultiPoly r(f.poly().vars());
  for (int i = 0; i < n; ++i) {
    r += f.poly().diff(i) * g.poly().diff(n + i);
    r -= f.poly().diff(n + i) * g.poly().diff(i);
  }
  return PhasePoly(n, r);
}

PhasePoly principal_symbol(const DiffOp& op, const PhasePoly& like, int sign2) {
  const int n = like.ncoords();
  if (op.nderiv() != n) throw VariableMismatch("principal_symbol: derivative count mismatch");
  const int k = op.order();
  const auto& pv = like.poly().vars();
  MultiPoly r(pv);
  if (k < 0) return PhasePoly(n, r);
  if (k % 2 != 0 && sign2 < 0) throw DomainError("principal_symbol: odd order under d -> i p");
  Rational s = (sign2 < 0 && (k / 2) % 2 == 1) ? Rational(-1) : Rational(1);
  for (const auto& [alpha, c] : op.terms()) {
    if (alpha.degree() != k) continue;
    MultiPoly cl = c.rebase(pv);
    Monomial pm(2 * n);
    for (int i = 0; i < n; ++i) pm.set(n + i, alpha[i]);
    r += cl * MultiPoly::monomial(pv, pm, s);
  }
  return PhasePoly(n, r);
}

}  // namespace fewbody
