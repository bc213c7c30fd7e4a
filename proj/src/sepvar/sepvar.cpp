#include "fewbody/sepvar.hpp"

#include <cmath>
#include <optional>

#include "fewbody/errors.hpp"
#include "fewbody/identity.hpp"
#include "fewbody/serialize.hpp"

namespace fewbody {

namespace {

const std::vector<std::string>& rho_vars() {
  static const std::vector<std::string> v{"rho12", "rho13", "rho23"};
  return v;
}

MultiPoly r(int i) { return MultiPoly::var(rho_vars(), i); }
MultiPoly wvar(int i) { return MultiPoly::var(w_variables(), i); }
MultiPoly wconst(const Rational& c) { return MultiPoly(w_variables(), c); }
RationalFn wfn(const MultiPoly& p) { return RationalFn(p); }

Monomial d1(int i) { return Monomial::unit(3, i); }
Monomial d2(int i) { return Monomial::unit(3, i, 2); }

const char* kDerivNames[3] = {"d/dw1", "d/dw2", "d/dw3"};

/// num/den as a polynomial when the division is exact.
std::optional<MultiPoly> reduce(const RationalFn& f) {
  if (f.is_polynomial()) return f.as_polynomial();
  try {
    return f.num().divide_exact(f.den());
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

const std::vector<std::string>& w_variables() {
  static const std::vector<std::string> v{"w1", "w2", "w3"};
  return v;
}

WMap build_wmap(const Masses& m) {
  const Rational &m2 = m[1], &m3 = m[2];
  const Rational s = m2 + m3;
  WMap w;
  w.m = m;
  w.w1 = r(2);
  w.w2 = r(1) * (s * m3) + r(0) * (s * m2) - r(2) * (m2 * m3);
  w.sigma = (r(2) - r(1) + r(0)) * m2 - (r(2) + r(1) - r(0)) * m3;
  w.w3 = RationalFn(w.w1 * w.w2, w.sigma * w.sigma * s);
  return w;
}

std::array<Rational, 3> evaluate(const WMap& w, const std::vector<Rational>& rho) {
  if (rho.size() != 3) throw VariableMismatch("evaluate: expects (rho12, rho13, rho23)");
  if (w.sigma.eval(rho).is_zero()) throw DomainError("w3 is singular: sigma vanishes at this point");
  return {w.w1.eval(rho), w.w2.eval(rho), w.w3.eval(rho)};
}

SeparatedForm separated_closed_form(const Masses& m, int d) {
  const Rational &m1 = m[0], &m2 = m[1], &m3 = m[2];
  const Rational s = m2 + m3;
  SeparatedForm f;
  f.A = s / (m2 * m3);
  f.B = s * (m1 + m2 + m3) / m1;
  f.d = Rational(d);
  const MultiPoly w3 = wvar(2);
  f.w3_second = w3 * w3 * (w3 * (Rational(8) * s) - Rational(2));
  f.w3_first = w3 * (w3 * (Rational(12) * s) + Rational(d - 4));
  f.weight = RationalFn(wconst(f.A)) / wfn(wvar(0)) + RationalFn(wconst(f.B)) / wfn(wvar(1));
  return f;
}

RatDiffOp opham_operator(const Masses& m, int d) {
  const auto f = separated_closed_form(m, d);
  RatDiffOp op(w_variables());
  op.add_term(d2(0), wfn(wvar(0) * (Rational(2) * f.A)));
  op.add_term(d1(0), wfn(wconst(f.A * Rational(d))));
  op.add_term(d2(1), wfn(wvar(1) * (Rational(2) * f.B)));
  op.add_term(d1(1), wfn(wconst(f.B * Rational(d))));
  op.add_term(d2(2), f.weight * wfn(f.w3_second));
  op.add_term(d1(2), f.weight * wfn(f.w3_first));
  return op;
}

std::vector<MultiPoly> pushforward_battery() {
  std::vector<MultiPoly> fs{wconst(Rational(1))};
  for (int i = 0; i < 3; ++i) fs.push_back(wvar(i));
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) fs.push_back(wvar(i) * wvar(j));
  fs.push_back(wvar(0) * wvar(1) + wvar(2) * wvar(2));
  return fs;
}

PushforwardReport verify_pushforward(const Masses& m, int d, std::uint64_t seed, int npoints) {
  Params p;
  p.kind = Case::General3;
  for (int i = 0; i < 3; ++i) p.m[i] = Mass{m[i], false};
  p.d = d;
  const DiffOp lap = build_radial_laplacian(p);
  const WMap w = build_wmap(m);
  const RatDiffOp op = opham_operator(m, d);
  const std::vector<RationalFn> images{RationalFn(w.w1), RationalFn(w.w2), w.w3};
  const auto points = sample_points(3, npoints, seed, {w.sigma, w.w1, w.w2});

  PushforwardReport rep;
  const auto battery = pushforward_battery();
  rep.functions = static_cast<int>(battery.size());
  rep.points = npoints;
  for (const auto& f : battery) {
    const RationalFn lhs = lap.apply(RationalFn(f).compose(images));
    const RationalFn rhs = op.apply(f);
    for (const auto& pt : points) {
      const auto wp = evaluate(w, pt);
      const Rational diff = lhs.eval(pt) - rhs.eval({wp[0], wp[1], wp[2]});
      if (!diff.is_zero()) {
        rep.ok = false;
        rep.mismatches.push_back({f.to_string(), pt, diff});
      }
    }
  }
  return rep;
}

SeparatedForm match_separated_template(const RatDiffOp& op) {
  if (op.vars() != w_variables()) throw VariableMismatch("match_separated_template: expects w1, w2, w3");
  for (const auto& [alpha, c] : op.terms()) {
    bool allowed = false;
    for (int i = 0; i < 3; ++i) allowed = allowed || alpha == d1(i) || alpha == d2(i);
    if (!allowed) {
      std::string name;
      for (int i = 0; i < 3; ++i)
        if (alpha[i] > 0) name += std::string(kDerivNames[i]) + (alpha[i] > 1 ? "^" + std::to_string(alpha[i]) : "");
      if (name.empty()) name = "1";
      throw TemplateMismatch("(" + c.to_string() + ") " + name);
    }
  }
  auto constant = [&](const RationalFn& f, const char* what) {
    const auto p = reduce(f);
    if (!p || !p->is_constant()) throw TemplateMismatch(std::string(what) + " = " + f.to_string() + " is not constant");
    return p->constant_term();
  };
  SeparatedForm s;
  s.A = constant(op.coeff(d2(0)) / wfn(wvar(0) * Rational(2)), "coefficient of d/dw1^2 over 2 w1");
  s.B = constant(op.coeff(d2(1)) / wfn(wvar(1) * Rational(2)), "coefficient of d/dw2^2 over 2 w2");
  if (s.A.is_zero() || s.B.is_zero()) throw TemplateMismatch("vanishing w1 or w2 part");
  s.d = constant(op.coeff(d1(0)), "coefficient of d/dw1") / s.A;
  const Rational dB = constant(op.coeff(d1(1)), "coefficient of d/dw2");
  if (dB != s.d * s.B) throw TemplateMismatch("coefficient of d/dw2 = " + dB.str() + " differs from d B");
  s.weight = RationalFn(wconst(s.A)) / wfn(wvar(0)) + RationalFn(wconst(s.B)) / wfn(wvar(1));
  auto w3_only = [&](const Monomial& alpha, const char* what) {
    const auto q = reduce(op.coeff(alpha) / s.weight);
    if (!q) throw TemplateMismatch(std::string(what) + " = " + op.coeff(alpha).to_string() + " is not weight * P(w3)");
    const MultiPoly& p = *q;
    if (p.degree_in(0) > 0 || p.degree_in(1) > 0)
      throw TemplateMismatch(std::string(what) + " over the weight = " + p.to_string() + " depends on w1 or w2");
    return p;
  };
  s.w3_second = w3_only(d2(2), "coefficient of d/dw3^2");
  s.w3_first = w3_only(d1(2), "coefficient of d/dw3");
  return s;
}

double WPotential::sqrt_coefficient() const {
  return sqrt_numerator.to_double() / std::pow(m23.to_double(), 2.5);
}

WPotential potential_in_w(const Masses& m, const NuCoefficients& nu, const Rational& omega) {
  const Rational &m2 = m[1], &m3 = m[2];
  const Rational s = m2 + m3;
  WPotential wp;
  wp.prefactor = Rational(2) * omega * omega;
  wp.m23 = s;
  wp.c_w1 = (m3 * m3 * nu.nu12 + m2 * m2 * nu.nu13 + s * s * nu.nu23) / (s * s);
  wp.c_w2 = (nu.nu12 + nu.nu13) / (s * s);
  wp.sqrt_numerator = m3 * nu.nu12 - m2 * nu.nu13;
  wp.w3_independent = wp.sqrt_numerator.is_zero();

  const MultiPoly V = (r(0) * nu.nu12 + r(1) * nu.nu13 + r(2) * nu.nu23) * wp.prefactor;
  const WMap w = build_wmap(m);
  const MultiPoly smooth = (w.w1 * wp.c_w1 + w.w2 * wp.c_w2) * wp.prefactor;
  const MultiPoly root = w.sigma * (wp.prefactor * wp.sqrt_numerator / (s * s));
  if (wp.w3_independent) {
    wp.reproduces_potential = smooth == V;
  } else {
    for (int sign : {1, -1}) {
      if (smooth + root * Rational(sign) == V) {
        wp.branch_sign = sign;
        wp.reproduces_potential = true;
        break;
      }
    }
  }
  return wp;
}

RatDiffOp one_variable_operator(const Rational& lambda, int d) {
  const std::vector<std::string> vars{"w"};
  const MultiPoly w = MultiPoly::var(vars, 0);
  RatDiffOp op(vars);
  op.add_term(Monomial::unit(1, 0, 2), RationalFn(w * Rational(2)));
  op.add_term(Monomial::unit(1, 0), RationalFn(MultiPoly(vars, Rational(d))));
  if (!lambda.is_zero()) op.add_term(Monomial(1), RationalFn(MultiPoly(vars, lambda), w));
  return op;
}

json to_json(const PushforwardReport& r) {
  json j;
  j["ok"] = r.ok;
  j["functions"] = r.functions;
  j["points"] = r.points;
  j["mismatches"] = json::array();
  for (const auto& mm : r.mismatches) {
    json rho = json::array();
    for (const auto& v : mm.rho) rho.push_back(to_json(v));
    j["mismatches"].push_back({{"function", mm.function}, {"rho", rho}, {"residual", to_json(mm.residual)}});
  }
  return j;
}

json to_json(const SeparatedForm& s) {
  json j;
  j["A"] = to_json(s.A);
  j["B"] = to_json(s.B);
  j["d"] = to_json(s.d);
  j["w3_second_order"] = s.w3_second.to_string();
  j["w3_first_order"] = s.w3_first.to_string();
  j["weight"] = s.weight.to_string();
  return j;
}

json to_json(const WPotential& p) {
  json j;
  j["prefactor"] = to_json(p.prefactor);
  j["c_w1"] = to_json(p.c_w1);
  j["c_w2"] = to_json(p.c_w2);
  j["sqrt_numerator"] = to_json(p.sqrt_numerator);
  j["sqrt_coefficient"] = p.sqrt_coefficient();
  j["sqrt_sign"] = "+-";
  j["w3_independent"] = p.w3_independent;
  j["branch_sign_for_sigma"] = p.branch_sign;
  j["reproduces_potential"] = p.reproduces_potential;
  return j;
}

}  // namespace fewbody
