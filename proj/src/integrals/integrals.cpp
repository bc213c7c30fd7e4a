#include "fewbody/integrals.hpp"

#include <stdexcept>

#include "fewbody/errors.hpp"

namespace fewbody {

namespace {

const std::vector<std::string>& rho_vars() {
  static const std::vector<std::string> v = case_variables(Case::General3);
  return v;
}

MultiPoly r(int i) { return MultiPoly::var(rho_vars(), i); }
MultiPoly k(const Rational& c) { return MultiPoly(rho_vars(), c); }

/// Builds classical and quantum forms side by side from coefficient lists.
struct Pair {
  PhasePoly cl = phase_space();
  DiffOp q{rho_vars(), 3};

  /// c p_i p_j (i == j gives p_i^2) and c d_i d_j.
  Pair& second(int i, int j, const MultiPoly& c) {
    cl += PhasePoly::lift(cl, c) * PhasePoly::momentum(cl, i) * PhasePoly::momentum(cl, j);
    q.add_term(Monomial::unit(3, i) * Monomial::unit(3, j), c);
    return *this;
  }
  /// c p_i and c d_i.
  Pair& first(int i, const MultiPoly& c) {
    cl += PhasePoly::lift(cl, c) * PhasePoly::momentum(cl, i);
    q.add_term(Monomial::unit(3, i), c);
    return *this;
  }
  /// Quantum-only lower-order correction c d_i.
  Pair& quantum_first(int i, const MultiPoly& c) {
    q.add_term(Monomial::unit(3, i), c);
    return *this;
  }
};

/// (m_a p_i - m_b p_j)^2 times T, with the quantum (d-1) first-order part supplied.
Pair f_integral(const Rational& ma, int i, const Rational& mb, int j) {
  const MultiPoly T = -area_square(rho_vars());
  Pair f;
  f.second(i, i, T * (ma * ma)).second(j, j, T * (mb * mb)).second(i, j, T * (Rational(-2) * ma * mb));
  return f;
}

DiffOp scalar(const MultiPoly& c) { return DiffOp::multiply(c, 3); }

}  // namespace

PhasePoly phase_space() { return PhasePoly(rho_vars(), {"p1", "p2", "p3"}); }

IntegralInputs integral_inputs(const Params& p) {
  validate(p);
  if (p.kind != Case::General3 && p.kind != Case::EqualMass3 && p.kind != Case::Isotropic3)
    throw DomainError("integral_inputs: needs finite masses (General3, EqualMass3 or Isotropic3)");
  IntegralInputs in;
  for (int i = 0; i < 3; ++i) in.m[i] = p.m[i].value;
  in.d = p.d;
  in.omega = p.omega;
  in.nu = nu_coefficients(p);
  return in;
}

IntegralSet build_integral_set(const IntegralInputs& in) {
  const auto& [m1, m2, m3] = in.m;
  for (const auto& m : in.m)
    if (m.sign() <= 0) throw DomainError("build_integral_set: masses must be positive");
  const Rational d(in.d);
  const Rational M = m1 + m2 + m3;
  const auto r12 = r(0), r13 = r(1), r23 = r(2);
  IntegralSet s{in, phase_space(), phase_space(), phase_space(), phase_space(), phase_space(), phase_space(),
                phase_space(), phase_space(), phase_space(), {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};

  Params lp;
  lp.kind = Case::General3;
  for (int i = 0; i < 3; ++i) lp.m[i] = Mass{in.m[i], false};
  lp.d = in.d;
  const DiffOp lap = build_radial_laplacian(lp);
  s.S1q = Rational(-1, 2) * lap;
  {
    const Rational mu12 = m1 * m2 / (m1 + m2), mu13 = m1 * m3 / (m1 + m3), mu23 = m2 * m3 / (m2 + m3);
    Pair p;
    p.second(0, 0, r12 * (Rational(1) / mu12))
        .second(1, 1, r13 * (Rational(1) / mu13))
        .second(2, 2, r23 * (Rational(1) / mu23))
        .second(0, 1, (r12 + r13 - r23) * (Rational(1) / m1))
        .second(0, 2, (r12 + r23 - r13) * (Rational(1) / m2))
        .second(1, 2, (r23 + r13 - r12) * (Rational(1) / m3));
    s.S1 = p.cl;
  }
  {
    Pair p;
    p.first(0, (r13 * (m1 + m2) - r23 * (m1 + m2) + r12 * (m1 - m2)) * m3)
        .first(1, (r23 * (m1 + m3) - r12 * (m1 + m3) + r13 * (m3 - m1)) * m2)
        .first(2, (r12 * (m2 + m3) - r13 * (m2 + m3) + r23 * (m2 - m3)) * m1);
    s.L0 = p.cl;
    s.L0q = p.q;
  }
  {
    Pair p;
    p.second(1, 1, r13)
        .second(0, 0, -r12)
        .second(1, 2, r23 + r13 - r12)
        .second(0, 2, r13 - r12 - r23)
        .quantum_first(1, k(d / Rational(2)))
        .quantum_first(0, k(-d / Rational(2)));
    s.S2 = p.cl;
    s.S2q = p.q;
  }
  {
    Pair p;
    p.second(1, 1, -r13)
        .second(0, 0, -r12)
        .second(0, 1, r23 - r13 - r12)
        .quantum_first(1, k(-d / Rational(2)))
        .quantum_first(0, k(-d / Rational(2)));
    s.S3 = p.cl;
    s.S3q = p.q;
  }
  const Rational dm1 = d - Rational(1);
  {
    Pair f = f_integral(m2, 1, m3, 0);
    f.quantum_first(0, ((r12 - r13 - r23) * (m3 * m3) + (r12 - r13 + r23) * (m3 * m2)) * dm1)
        .quantum_first(1, ((r13 - r12 - r23) * (m2 * m2) + (r13 + r23 - r12) * (m3 * m2)) * dm1);
    s.F1 = f.cl;
    s.F1q = f.q;
  }
  {
    Pair f = f_integral(m1, 2, m3, 0);
    f.quantum_first(0, ((r12 - r13 - r23) * (m3 * m3) + (r12 - r23 + r13) * (m1 * m3)) * dm1)
        .quantum_first(2, ((r23 - r12 - r13) * (m1 * m1) + (r13 + r23 - r12) * (m1 * m3)) * dm1);
    s.F2 = f.cl;
    s.F2q = f.q;
  }
  {
    Pair f = f_integral(m1, 2, m2, 1);
    f.quantum_first(1, ((r13 - r12 - r23) * (m2 * m2) + (r12 - r23 + r13) * (m1 * m2)) * dm1)
        .quantum_first(2, ((r23 - r12 - r13) * (m1 * m1) + (r23 + r12 - r13) * (m1 * m2)) * dm1);
    s.F3 = f.cl;
    s.F3q = f.q;
  }
  s.L0sq = s.L0 * s.L0;
  s.K = (m1 * m1 + m1 * (m2 + m3) - m2 * m3) * s.F1 + (m2 * m2 + m2 * (m1 + m3) - m1 * m3) * s.F2 +
        (m3 * m3 + m3 * (m1 + m2) - m1 * m2) * s.F3;

  if (in.nu) {
    const auto& nu = *in.nu;
    const Rational w2 = in.omega * in.omega;
    const MultiPoly V = (r12 * nu.nu12 + r13 * nu.nu13 + r23 * nu.nu23) * (Rational(2) * w2);
    s.H = Rational(2) * s.S1 + PhasePoly::lift(s.S1, V);
    s.Hq = Rational(2) * s.S1q + scalar(V);
    const MultiPoly u2 = (r13 * (m3 * (m2 * m2 + m1 * m3 + m2 * m3)) - r12 * (m2 * (m3 * m3 + m1 * m2 + m2 * m3)) -
                          r23 * (m2 * m3 * (m2 - m3))) *
                         (w2 * nu.nu13 / (m3 * M));
    const MultiPoly u3 = (r23 * (m2 * m3) - r12 * (m2 * (m2 + m3)) - r13 * (m3 * (m2 + m3))) *
                         (w2 * m1 * nu.nu13 / (m3 * M));
    s.S2t = s.S2 + PhasePoly::lift(s.S2, u2);
    s.S3t = s.S3 + PhasePoly::lift(s.S3, u3);
    // S1q = -Delta/2 pairs d with i p, so the zeroth-order prolongation flips sign.
    s.S2tq = s.S2q - scalar(u2);
    s.S3tq = s.S3q - scalar(u3);
  }
  return s;
}

const PhasePoly& IntegralSet::classical(const std::string& name) const {
  if (name == "S1") return S1;
  if (name == "S2") return S2;
  if (name == "S3") return S3;
  if (name == "F1") return F1;
  if (name == "F2") return F2;
  if (name == "F3") return F3;
  if (name == "L0") return L0;
  if (name == "L0sq") return L0sq;
  if (name == "K") return K;
  if (name == "H" && H) return *H;
  if (name == "S2t" && S2t) return *S2t;
  if (name == "S3t" && S3t) return *S3t;
  throw std::out_of_range("IntegralSet: no classical member " + name);
}

const DiffOp& IntegralSet::quantum(const std::string& name) const {
  if (name == "S1q") return S1q;
  if (name == "S2q") return S2q;
  if (name == "S3q") return S3q;
  if (name == "F1q") return F1q;
  if (name == "F2q") return F2q;
  if (name == "F3q") return F3q;
  if (name == "L0q") return L0q;
  if (name == "Hq" && Hq) return *Hq;
  if (name == "S2tq" && S2tq) return *S2tq;
  if (name == "S3tq" && S3tq) return *S3tq;
  throw std::out_of_range("IntegralSet: no quantum member " + name);
}

PhasePoly conservation_check_classical(const PhasePoly& H, const PhasePoly& I) { return poisson_bracket(H, I); }

DiffOp conservation_check_quantum(const DiffOp& H, const DiffOp& I) { return commutator(H, I); }

std::string to_string(Superintegrability s) {
  switch (s) {
    case Superintegrability::None:
      return "none";
    case Superintegrability::Minimal:
      return "minimal";
    case Superintegrability::Maximal:
      return "maximal";
  }
  return "?";
}

SuperintegrabilityVerdict classify_superintegrability(const Masses& m, const NuCoefficients& nu, int d,
                                                      const Rational& omega) {
  const auto& [m1, m2, m3] = m;
  SuperintegrabilityVerdict v;
  v.relations = {m2 * nu.nu13 == m3 * nu.nu12, m1 * nu.nu23 == m2 * nu.nu13, m3 * nu.nu12 == m1 * nu.nu23};
  const char* text[3] = {"m2*nu13 = m3*nu12", "m1*nu23 = m2*nu13", "m3*nu12 = m1*nu23"};
  int holds = 0;
  for (int i = 0; i < 3; ++i)
    if (v.relations[i]) {
      v.witnessed.emplace_back(text[i]);
      ++holds;
    }
  if (v.relations[0] && v.relations[1]) {
    if (!v.relations[2]) throw TranscriptionError("classify_superintegrability: two relations hold but not the third");
    v.kind = Superintegrability::Maximal;
  } else if (holds == 1) {
    v.kind = Superintegrability::Minimal;
  }
  const IntegralSet s = build_integral_set({m, d, omega, nu});
  for (const std::string name : {"L0", "S2t", "S3t", "F1", "F2", "F3"})
    if (conservation_check_classical(*s.H, s.classical(name)).is_zero()) v.surviving.push_back(name);
  for (const std::string name : {"L0q", "S2tq", "S3tq", "F1q", "F2q", "F3q"})
    if (conservation_check_quantum(*s.Hq, s.quantum(name)).is_zero()) v.surviving_quantum.push_back(name);
  return v;
}

bool TripletCheck::in_involution() const {
  for (const auto& b : brackets)
    if (!b.is_zero()) return false;
  return true;
}

std::vector<TripletCheck> involution_triplets(const IntegralSet& set) {
  std::vector<TripletCheck> out;
  auto add = [&](std::string name, std::array<std::string, 3> members) {
    const auto& a = set.classical(members[0]);
    const auto& b = set.classical(members[1]);
    const auto& c = set.classical(members[2]);
    out.push_back({std::move(name), members, {poisson_bracket(a, b), poisson_bracket(a, c), poisson_bracket(b, c)}});
  };
  add("S1-S2-S3", {"S1", "S2", "S3"});
  add("S1-F1-S3", {"S1", "F1", "S3"});
  add("S1-L0sq-K", {"S1", "L0sq", "K"});
  return out;
}

const std::vector<Perm>& s3_elements() {
  static const std::vector<Perm> all{{1, 2, 3}, {2, 1, 3}, {3, 2, 1}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}};
  return all;
}

namespace {

int pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == 1 && j == 2) return 0;
  if (i == 1 && j == 3) return 1;
  if (i == 2 && j == 3) return 2;
  throw std::invalid_argument("pair_index: bad particle pair");
}

/// Image of each rho index under the relabeling.
std::array<int, 3> rho_image(const Perm& s) {
  Perm check = s;
  std::sort(check.begin(), check.end());
  if (check != Perm{1, 2, 3}) throw std::invalid_argument("permutation_action: not a permutation of 1,2,3");
  return {pair_index(s[0], s[1]), pair_index(s[0], s[2]), pair_index(s[1], s[2])};
}

MultiPoly relabel(const MultiPoly& p, const std::array<int, 3>& img, int ncoords) {
  std::vector<MultiPoly> images;
  for (int i = 0; i < p.nvars(); ++i) {
    const int block = i / ncoords, local = i % ncoords;
    images.push_back(MultiPoly::var(p.vars(), block * ncoords + img[local]));
  }
  return p.compose(images);
}

}  // namespace

PhasePoly permutation_action(const Perm& sigma, const PhasePoly& f) {
  if (f.ncoords() != 3) throw VariableMismatch("permutation_action: expects the three-rho phase space");
  return PhasePoly(3, relabel(f.poly(), rho_image(sigma), 3));
}

DiffOp permutation_action(const Perm& sigma, const DiffOp& op) {
  if (op.nvars() != 3 || op.nderiv() != 3) throw VariableMismatch("permutation_action: expects rho12, rho13, rho23");
  const auto img = rho_image(sigma);
  DiffOp out(op.vars(), 3);
  for (const auto& [alpha, c] : op.terms()) {
    Monomial beta(3);
    for (int i = 0; i < 3; ++i) beta.set(img[i], alpha[i]);
    out.add_term(beta, relabel(c, img, 3));
  }
  return out;
}

Masses permutation_action(const Perm& sigma, const Masses& m) {
  rho_image(sigma);
  Masses out;
  for (int i = 0; i < 3; ++i) out[sigma[i] - 1] = m[i];
  return out;
}

json residual_json(const PhasePoly& r) {
  return {{"zero", r.is_zero()}, {"terms", to_json(r.poly())["terms"]}};
}

json residual_json(const DiffOp& r) { return {{"zero", r.is_zero()}, {"terms", to_json(r)["terms"]}}; }

json to_json(const SuperintegrabilityVerdict& v) {
  return {{"verdict", to_string(v.kind)},
          {"relations", v.relations},
          {"witnessed", v.witnessed},
          {"surviving", v.surviving},
          {"surviving_quantum", v.surviving_quantum}};
}

}  // namespace fewbody
