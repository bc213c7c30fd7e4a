#include <cmath>

#include "common.hpp"
#include "fewbody/errors.hpp"

namespace fewbody {

using detail::Ctx;

namespace {

bool general_family(Case c) {
  return c == Case::General3 || c == Case::EqualMass3 || c == Case::Isotropic3 ||
         c == Case::Primitive3QES;
}

MultiPoly det(const std::vector<std::vector<MultiPoly>>& g) {
  if (g.size() == 2) return g[0][0] * g[1][1] - g[0][1] * g[1][0];
  return g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
         g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
         g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
}

/// Mass-weighted linear form m1 m2 r12 + m1 m3 r13 + m2 m3 r23.
MultiPoly mass_linear_form(const Params& p) {
  const Ctx c(p.kind);
  const auto M = detail::finite_masses(p);
  return c.x(0) * (M.m1 * M.m2) + c.x(1) * (M.m1 * M.m3) + c.x(2) * (M.m2 * M.m3);
}

/// Operator whose second-order coefficients define the co-metric.
DiffOp metric_operator(const Params& p) {
  DiffOp lap = build_radial_laplacian(p);
  if (p.kind == Case::Molecular3) return Rational(1, 2) * lap;
  return lap;
}

RationalFn log_derivative(const std::vector<PowerFactor>& gamma, int i, const std::vector<std::string>& vars) {
  RationalFn l{MultiPoly(vars)};
  for (const auto& f : gamma) {
    if (f.exponent.is_zero()) continue;
    l += RationalFn(f.base.diff(i) * f.exponent, f.base);
  }
  return l;
}

}  // namespace

MultiPoly area_square(const std::vector<std::string>& vars) {
  const auto r12 = MultiPoly::var(vars, 0), r13 = MultiPoly::var(vars, 1),
             r23 = MultiPoly::var(vars, 2);
  return (r12 * r13 + r12 * r23 + r13 * r23) * Rational(2) - r12 * r12 - r13 * r13 - r23 * r23;
}

Cometric cometric(const Params& p) {
  validate(p);
  if (p.kind == Case::TwoBodyES || p.kind == Case::TwoBodyQES)
    throw DomainError("cometric: two-body cases have no multi-dimensional co-metric");
  const Ctx c(p.kind);
  const DiffOp op = metric_operator(p);
  const int n = c.nd;
  const int nv = static_cast<int>(c.vars.size());
  Cometric g;
  g.matrix.assign(n, std::vector<MultiPoly>(n, c.k(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      MultiPoly v = op.coeff(Monomial::unit(nv, i) * Monomial::unit(nv, j));
      if (i != j) v = v * Rational(1, 2);
      g.matrix[i][j] = g.matrix[j][i] = v;
    }
  g.determinant = det(g.matrix);
  g.convention = p.kind == Case::Molecular3 ? "half" : "full";
  switch (p.kind) {
    case Case::Atomic3: {
      const Rational m = p.case_mass();
      g.factored = (c.x(0) + c.x(1)) * area_square(c.vars) * (Rational(2) / (m * m * m));
      break;
    }
    case Case::Molecular3: {
      const Rational m = p.case_mass();
      g.factored = area_square(c.vars) * (Rational(1) / (Rational(4) * m * m));
      break;
    }
    case Case::OneDim3: {
      const auto M = detail::finite_masses(p);
      g.factored = c.k((M.m1 + M.m2 + M.m3) / (Rational(4) * M.m1 * M.m2 * M.m3));
      break;
    }
    default: {
      const auto M = detail::finite_masses(p);
      const Rational total = M.m1 + M.m2 + M.m3;
      const Rational prod2 = (M.m1 * M.m2 * M.m3) * (M.m1 * M.m2 * M.m3);
      g.factored = mass_linear_form(p) * area_square(c.vars) * (Rational(2) * total / prod2);
      break;
    }
  }
  return g;
}

std::vector<PowerFactor> gauge_factor_gamma(const Params& p) {
  validate(p);
  const Ctx c(p.kind);
  const Rational e_area(2 - p.d, 4);
  if (general_family(p.kind)) return {{area_square(c.vars), e_area}, {mass_linear_form(p), Rational(-1, 4)}};
  switch (p.kind) {
    case Case::Atomic3:
      return {{area_square(c.vars), e_area}, {c.x(0) + c.x(1), Rational(-1, 4)}};
    case Case::Molecular3:
      return {{area_square(c.vars), e_area}};
    case Case::TwoBodyES:
    case Case::TwoBodyQES:
      return {{c.x(0), Rational(1 - p.d, 4)}};
    case Case::OneDim3:
      return {};
    default:
      break;
  }
  throw DomainError("gauge_factor_gamma: unsupported case");
}

RationalFn effective_potential(const Params& p) {
  validate(p);
  const Ctx c(p.kind);
  const Rational dd = Rational((p.d - 2) * (p.d - 4));
  if (general_family(p.kind)) {
    const auto M = detail::finite_masses(p);
    const MultiPoly L = mass_linear_form(p);
    return RationalFn(c.k(Rational(3, 8) * (M.m1 + M.m2 + M.m3)), L) +
           RationalFn(L * (dd / Rational(2)), area_square(c.vars) * (M.m1 * M.m2 * M.m3));
  }
  switch (p.kind) {
    case Case::Atomic3: {
      const Rational m = p.case_mass();
      const MultiPoly s = c.x(0) + c.x(1);
      return RationalFn(c.k(Rational(3, 8)), s * m) +
             RationalFn(s * (dd / Rational(2)), area_square(c.vars) * m);
    }
    case Case::Molecular3: {
      const Rational m = p.case_mass();
      return RationalFn(c.x(2) * dd, area_square(c.vars) * (Rational(4) * m));
    }
    case Case::TwoBodyES:
    case Case::TwoBodyQES: {
      const Rational mu = reduced_masses(p).mu12;
      return RationalFn(c.k(Rational((p.d - 1) * (p.d - 3))), c.x(0) * (Rational(8) * mu));
    }
    case Case::OneDim3:
      return RationalFn(c.k(0));
    default:
      break;
  }
  throw DomainError("effective_potential: unsupported case");
}

RationalFn effective_potential_from_gauge(const Params& p) {
  const Ctx c(p.kind);
  const auto gamma = gauge_factor_gamma(p);
  const DiffOp op = metric_operator(p);
  const int nv = static_cast<int>(c.vars.size());
  std::vector<RationalFn> l;
  for (int i = 0; i < c.nd; ++i) l.push_back(log_derivative(gamma, i, c.vars));
  RationalFn total(c.k(0));
  for (const auto& [alpha, coef] : op.terms()) {
    std::vector<int> idx;
    for (int i = 0; i < nv; ++i)
      for (int k = 0; k < alpha[i]; ++k) idx.push_back(i);
    RationalFn term(c.k(0));
    if (idx.size() == 1) {
      term = l[idx[0]];
    } else if (idx.size() == 2) {
      term = l[idx[0]].diff(idx[1]) + l[idx[0]] * l[idx[1]];
    } else if (!idx.empty()) {
      throw DomainError("effective_potential_from_gauge: operator order above 2");
    } else {
      continue;
    }
    total += RationalFn(coef) * term;
  }
  return -total;
}

PrimitiveQES build_qes_primitive(const Params& p) {
  if (p.kind != Case::Primitive3QES) throw DomainError("build_qes_primitive: requires Primitive3QES params");
  validate(p);
  Params harmonic = p;
  harmonic.kind = Case::General3;
  PrimitiveQES r{build_potential(p) - build_potential(harmonic), ground_state(p).wavefunction, Rational(0),
                 Rational(0)};
  const GaussFn hpsi = build_hamiltonian(p).apply(r.ground);
  if (!(hpsi.exponent() == r.ground.exponent()) || !hpsi.prefactor().is_constant())
    throw TranscriptionError("primitive QES: (H Psi)/Psi is not constant: " + hpsi.prefactor().to_string());
  r.residual_energy = hpsi.prefactor().constant_term();
  r.shift_from_harmonic = r.residual_energy - p.omega * Rational(p.d) * (p.a + p.b + p.c);
  return r;
}

std::vector<Vec> jacobi_coordinates(const std::vector<double>& masses, const std::vector<Vec>& positions) {
  const std::size_t n = masses.size();
  if (n < 2) throw std::invalid_argument("jacobi_coordinates: need at least two bodies");
  if (positions.size() != n) throw std::invalid_argument("jacobi_coordinates: one position per mass");
  for (double m : masses)
    if (!(m > 0) || !std::isfinite(m)) throw DomainError("jacobi_coordinates: masses must be positive and finite");
  const std::size_t dim = positions[0].size();
  for (const auto& r : positions)
    if (r.size() != dim) throw std::invalid_argument("jacobi_coordinates: inconsistent dimension");
  std::vector<Vec> out;
  double Mj = 0;
  Vec weighted(dim, 0.0);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    Mj += masses[j];
    for (std::size_t k = 0; k < dim; ++k) weighted[k] += masses[j] * positions[j][k];
    const double next = masses[j + 1];
    const double scale = std::sqrt(next * Mj / (Mj + next));
    Vec r(dim);
    for (std::size_t k = 0; k < dim; ++k) r[k] = scale * (positions[j + 1][k] - weighted[k] / Mj);
    out.push_back(std::move(r));
  }
  return out;
}

double jacobi_reduced_mass(const std::vector<double>& masses) {
  if (masses.size() < 2) throw std::invalid_argument("jacobi_reduced_mass: need at least two bodies");
  double prod = 1, total = 0;
  for (double m : masses) {
    if (!(m > 0)) throw DomainError("jacobi_reduced_mass: masses must be positive");
    prod *= m;
    total += m;
  }
  return std::pow(prod / total, 1.0 / static_cast<double>(masses.size() - 1));
}

}  // namespace fewbody
