#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "fewbody/errors.hpp"
#include "fewbody/spectra.hpp"

namespace fewbody {

namespace {

using Block = std::pair<int, int>;

RMatrix sub_matrix(const RMatrix& m, int b, int e) {
  RMatrix s(e - b, std::vector<Rational>(e - b));
  for (int i = b; i < e; ++i)
    for (int j = b; j < e; ++j) s[i - b][j - b] = m[i][j];
  return s;
}

RMatrix minus_lambda(RMatrix a, const Rational& l) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i][i] -= l;
  return a;
}

RMatrix mat_mul(const RMatrix& a, const RMatrix& b) {
  const std::size_t n = a.size();
  RMatrix c(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

/// Non-real roots of f in conjugate pairs, from the companion matrix.
std::vector<std::complex<double>> complex_roots(const UPoly& f, int count) {
  const int n = f.degree();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  const UPoly g = f.monic();
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -g[i].to_double();
  Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
  std::vector<std::complex<double>> all(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(all.begin(), all.end(),
            [](auto a, auto b) { return std::abs(a.imag()) > std::abs(b.imag()); });
  all.resize(count);
  std::sort(all.begin(), all.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return all;
}

std::vector<Eigenvalue> block_eigenvalues(const RMatrix& b, int degree) {
  std::vector<Eigenvalue> out;
  const UPoly chi = characteristic_polynomial(b);
  for (const auto& [f, k] : squarefree_decomposition(chi)) {
    const auto roots = real_roots(f);
    for (const auto& r : roots) {
      Eigenvalue e;
      e.kind = r.exact ? Eigenvalue::Kind::Exact : Eigenvalue::Kind::Interval;
      e.value = r.value;
      e.lo = r.lo;
      e.hi = r.hi;
      e.re = r.value.to_double();
      e.factor = r.exact ? UPoly({-r.value, Rational(1)}) : f;
      e.multiplicity = k;
      e.degrees = {degree};
      out.push_back(std::move(e));
    }
    const int ncomplex = f.degree() - static_cast<int>(roots.size());
    if (ncomplex > 0)
      for (const auto& z : complex_roots(f, ncomplex)) {
        Eigenvalue e;
        e.kind = Eigenvalue::Kind::Complex;
        e.re = z.real();
        e.im = z.imag();
        e.factor = f;
        e.multiplicity = k;
        e.degrees = {degree};
        out.push_back(std::move(e));
      }
  }
  return out;
}

bool same_root(const Eigenvalue& a, const Eigenvalue& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Eigenvalue::Kind::Exact:
      return a.value == b.value;
    case Eigenvalue::Kind::Interval:
      return a.factor == b.factor && a.lo < b.hi && b.lo < a.hi;
    case Eigenvalue::Kind::Complex:
      return a.factor == b.factor && std::abs(a.re - b.re) + std::abs(a.im - b.im) < 1e-9;
  }
  return false;
}

MultiPoly to_poly(const MonomialBasis& basis, const std::vector<Rational>& v) {
  MultiPoly p(basis.vars);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) p.add_term(basis.monomials[i], v[i]);
  return p;
}

/// Scales so the last nonzero coordinate is 1.
std::vector<Rational> normalized(std::vector<Rational> v) {
  for (auto it = v.rbegin(); it != v.rend(); ++it)
    if (!it->is_zero()) {
      const Rational s = Rational(1) / *it;
      for (auto& x : v) x *= s;
      break;
    }
  return v;
}

SpectrumReport analyze(const OpMatrix& m, const std::vector<Block>& blocks, const std::vector<int>& block_degree) {
  SpectrumReport r;
  r.basis = m.basis;
  r.N = m.basis.N;
  r.matrix = m.entries;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const auto [b, e] = blocks[bi];
    if (b == e) continue;
    for (auto& ev : block_eigenvalues(sub_matrix(m.entries, b, e), block_degree[bi])) {
      auto it = std::find_if(r.gauged.begin(), r.gauged.end(), [&](const Eigenvalue& x) { return same_root(x, ev); });
      if (it == r.gauged.end()) {
        r.gauged.push_back(std::move(ev));
      } else {
        it->multiplicity += ev.multiplicity;
        it->degrees.push_back(ev.degrees[0]);
      }
    }
  }
  std::stable_sort(r.gauged.begin(), r.gauged.end(),
                   [](const Eigenvalue& a, const Eigenvalue& b) { return a.approx() < b.approx(); });

  for (auto& ev : r.gauged) {
    if (ev.kind != Eigenvalue::Kind::Exact) continue;
    // Generalized eigenvectors live in the span of the blocks up to the highest one
    // containing the eigenvalue.
    int top = 0;
    for (int d : ev.degrees)
      for (std::size_t bi = 0; bi < blocks.size(); ++bi)
        if (block_degree[bi] == d) top = std::max(top, blocks[bi].second);
    const RMatrix a = minus_lambda(sub_matrix(m.entries, 0, top), ev.value);
    const auto ns = null_space(a);
    ev.geometric = static_cast<int>(ns.size());
    if (ev.defective()) {
      RMatrix power = a;
      for (int k = 1; k <= ev.multiplicity; ++k) {
        ev.jordan_nullities.push_back(top - rank(power));
        if (k < ev.multiplicity) power = mat_mul(power, a);
      }
      continue;
    }
    for (const auto& v : ns) {
      std::vector<Rational> full(m.entries.size(), Rational(0));
      std::copy(v.begin(), v.end(), full.begin());
      r.eigenfunctions.push_back({ev.value, to_poly(m.basis, normalized(full))});
    }
  }
  return r;
}

Rational case_energy(const Params& p) {
  const MultiPoly e = ground_state(p).energy;
  if (p.kind == Case::Molecular3) return e.eval({Rational(0), Rational(0), p.rho23});
  return e.constant_term();
}

void add_physical(SpectrumReport& r, const Rational& e0) {
  r.E0 = e0;
  r.physical.clear();
  for (const auto& g : r.gauged) r.physical.push_back(g.shifted(e0));
}

}  // namespace

double Eigenvalue::approx() const { return kind == Kind::Complex ? re : value.to_double(); }

Eigenvalue Eigenvalue::shifted(const Rational& s) const {
  Eigenvalue e = *this;
  e.value += s;
  e.lo += s;
  e.hi += s;
  e.re += s.to_double();
  // factor(x - s) by Horner.
  UPoly g;
  const UPoly x_minus_s({-s, Rational(1)});
  for (auto it = factor.coeffs().rbegin(); it != factor.coeffs().rend(); ++it) g = g * x_minus_s + UPoly::constant(*it);
  e.factor = g;
  return e;
}

int SpectrumReport::total_multiplicity() const {
  int n = 0;
  for (const auto& e : gauged) n += e.multiplicity;
  return n;
}

std::vector<Rational> SpectrumReport::exact_multiset() const {
  std::vector<Rational> out;
  for (const auto& e : gauged)
    if (e.kind == Eigenvalue::Kind::Exact) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

SpectrumReport eigenvalues_graded(const OpMatrix& m) {
  const auto& basis = m.basis;
  const int n = static_cast<int>(basis.size());
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (!m.entries[i][j].is_zero() && basis.monomials[i].degree() > basis.monomials[j].degree())
        throw DomainError("eigenvalues_graded: matrix raises the degree at column " +
                          MultiPoly::monomial(basis.vars, basis.monomials[j]).to_string());
  std::vector<Block> blocks;
  std::vector<int> degrees;
  for (int s = 0; s <= basis.N; ++s) {
    blocks.push_back(basis.degree_range(s));
    degrees.push_back(s);
  }
  return analyze(m, blocks, degrees);
}

SpectrumReport eigenvalues_single_block(const OpMatrix& m) {
  return analyze(m, {{0, static_cast<int>(m.basis.size())}}, {m.basis.N});
}

DiffOp spectral_operator(const Params& p) {
  DiffOp op = build_h_algebraic(p);
  if (p.kind == Case::Molecular3) op = op.substitute(2, p.rho23);
  return op;
}

SpectrumReport compute_spectrum(const Params& p, int N) {
  validate(p);
  if (p.kind == Case::TwoBodyQES) {
    if (N != p.N) throw DomainError("compute_spectrum: the QES invariant space has degree N = " + std::to_string(p.N));
    return qes_2body_block(p);
  }
  const DiffOp op = spectral_operator(p);
  const auto basis = enumerate_basis(case_variables(p.kind), case_nderiv(p.kind), N);
  SpectrumReport r = eigenvalues_graded(assemble_matrix(op, basis));
  r.params = p;
  add_physical(r, case_energy(p));
  return r;
}

SpectrumReport qes_2body_block(const Params& p) {
  if (p.kind != Case::TwoBodyQES) throw DomainError("qes_2body_block: requires TwoBodyQES params");
  validate(p);
  const auto basis = enumerate_basis(case_variables(p.kind), 1, p.N);
  SpectrumReport r = eigenvalues_single_block(assemble_matrix(build_h_algebraic(p), basis));
  r.params = p;
  add_physical(r, case_energy(p));
  return r;
}

UPoly laguerre(int n, const Rational& alpha) {
  UPoly prev = UPoly::constant(Rational(1));
  if (n == 0) return prev;
  UPoly cur({Rational(1) + alpha, Rational(-1)});
  for (int k = 1; k < n; ++k) {
    const UPoly next = (UPoly({Rational(2 * k + 1) + alpha, Rational(-1)}) * cur - prev * (Rational(k) + alpha)) *
                       (Rational(1) / Rational(k + 1));
    prev = std::move(cur);
    cur = next;
  }
  return cur;
}

LaguerreCheck laguerre_verify(const Params& p, int nmax) {
  if (p.kind != Case::TwoBodyES) throw DomainError("laguerre_verify: requires TwoBodyES params");
  validate(p);
  if (nmax < 0) throw std::invalid_argument("laguerre_verify: nmax must be non-negative");
  const DiffOp h = build_h_algebraic(p);
  const auto basis = enumerate_basis(case_variables(p.kind), 1, nmax);
  const OpMatrix m = assemble_matrix(h, basis);
  const Rational alpha = Rational(p.d, 2) - Rational(1);
  const Rational scale = Rational(2) * reduced_masses(p).mu12 * p.omega;
  const MultiPoly rho = MultiPoly::var(basis.vars, 0);
  LaguerreCheck out;
  auto fail = [&](int n, std::string why) {
    out.ok = false;
    out.first_failing_n = n;
    out.reason = std::move(why);
    return out;
  };
  for (int n = 0; n <= nmax; ++n) {
    const Rational eps = Rational(4 * n) * p.omega;
    const auto ns = null_space(minus_lambda(sub_matrix(m.entries, 0, n + 1), eps));
    if (ns.size() != 1) return fail(n, "eigenspace of 4 omega n is not one-dimensional");
    const MultiPoly phi = to_poly(basis, normalized(ns[0]));
    if (!(h.apply(phi) == phi * eps)) return fail(n, "h phi != 4 omega n phi");
    MultiPoly lag(basis.vars);
    const UPoly L = laguerre(n, alpha);
    for (int i = 0; i <= L.degree(); ++i) lag += (rho * scale).pow(i) * L[i];
    const Monomial top = Monomial::unit(1, 0, n);
    if (!(phi * lag.coeff(top) == lag * phi.coeff(top))) return fail(n, "phi not proportional to the Laguerre polynomial");
    out.eigenfunctions.push_back(phi);
  }
  return out;
}

json to_json(const Eigenvalue& e) {
  json j;
  switch (e.kind) {
    case Eigenvalue::Kind::Exact:
      j["value"] = to_json(e.value);
      break;
    case Eigenvalue::Kind::Interval: {
      j["interval"] = json::array({to_json(e.lo), to_json(e.hi)});
      j["approx"] = e.re;
      json f = json::array();
      for (const auto& c : e.factor.coeffs()) f.push_back(to_json(c));
      j["root_of"] = f;
      break;
    }
    case Eigenvalue::Kind::Complex:
      j["complex"] = json::array({e.re, e.im});
      break;
  }
  j["multiplicity"] = e.multiplicity;
  if (e.geometric >= 0) j["geometric_multiplicity"] = e.geometric;
  j["degrees"] = e.degrees;
  if (!e.jordan_nullities.empty()) j["jordan_nullities"] = e.jordan_nullities;
  return j;
}

json to_json(const SpectrumReport& r) {
  json j;
  if (r.params) {
    j["case"] = case_name(r.params->kind);
    j["params"] = to_json(*r.params);
  }
  j["N"] = r.N;
  j["variables"] = r.basis.vars;
  json basis = json::array();
  for (const auto& m : r.basis.monomials) basis.push_back(m.to_vector());
  j["basis"] = basis;
  j["E0"] = to_json(r.E0);
  json g = json::array(), ph = json::array(), ef = json::array();
  for (const auto& e : r.gauged) g.push_back(to_json(e));
  for (const auto& e : r.physical) ph.push_back(to_json(e));
  for (const auto& f : r.eigenfunctions) {
    json coeffs = json::array();
    for (const auto& m : r.basis.monomials) coeffs.push_back(to_json(f.phi.coeff(m)));
    ef.push_back({{"eigenvalue", to_json(f.eigenvalue)}, {"coeffs", coeffs}});
  }
  j["gauged"] = g;
  j["physical"] = ph;
  j["eigenfunctions"] = ef;
  return j;
}

}  // namespace fewbody
