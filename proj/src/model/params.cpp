#include <algorithm>

#include "fewbody/errors.hpp"
#include "fewbody/model.hpp"

namespace fewbody {

namespace {

struct CaseEntry {
  Case kind;
  const char* name;
};

constexpr CaseEntry kCases[] = {
    {Case::General3, "general3"},         {Case::EqualMass3, "equalmass3"},
    {Case::Isotropic3, "isotropic3"},     {Case::Atomic3, "atomic3"},
    {Case::Molecular3, "molecular3"},     {Case::OneDim3, "onedim3"},
    {Case::TwoBodyES, "twobody_es"},      {Case::TwoBodyQES, "twobody_qes"},
    {Case::Primitive3QES, "primitive3qes"},
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  s.erase(std::remove(s.begin(), s.end(), '-'), s.end());
  return s;
}

void require_finite(const Params& p, int i) {
  if (p.m[i].infinite)
    throw DomainError(case_name(p.kind) + ": mass m" + std::to_string(i + 1) + " must be finite");
}

Mass mass_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = lower(j.get<std::string>());
    if (s == "inf" || s == "infinity") return Mass::inf();
  }
  return Mass{rational_from_json(j), false};
}

}  // namespace

std::string case_name(Case c) {
  for (const auto& e : kCases)
    if (e.kind == c) return e.name;
  return "unknown";
}

Case parse_case(const std::string& name) {
  auto s = lower(name);
  s.erase(std::remove(s.begin(), s.end(), '_'), s.end());
  for (const auto& e : kCases) {
    std::string n = e.name;
    n.erase(std::remove(n.begin(), n.end(), '_'), n.end());
    if (s == n) return e.kind;
  }
  throw std::invalid_argument("unknown case: " + name);
}

const std::vector<Case>& all_cases() {
  static const std::vector<Case> v = [] {
    std::vector<Case> r;
    for (const auto& e : kCases) r.push_back(e.kind);
    return r;
  }();
  return v;
}

Rational Params::case_mass() const {
  switch (kind) {
    case Case::Atomic3:
      return m[1].value;
    default:
      return m[0].value;
  }
}

void validate(const Params& p) {
  const auto name = case_name(p.kind);
  if (p.omega.sign() <= 0) throw DomainError(name + ": omega must be positive");
  if (p.d < 1) throw DomainError(name + ": d must be a positive integer");
  for (const auto& s : {p.a, p.b, p.c})
    if (s.sign() < 0) throw DomainError(name + ": spring constants must be nonnegative");
  for (const auto& mi : p.m)
    if (!mi.infinite && mi.value.sign() <= 0) throw DomainError(name + ": masses must be positive");
  if (p.N < 0) throw DomainError(name + ": N must be nonnegative");
  switch (p.kind) {
    case Case::General3:
    case Case::OneDim3:
    case Case::Primitive3QES:
      for (int i = 0; i < 3; ++i) require_finite(p, i);
      break;
    case Case::EqualMass3:
    case Case::Isotropic3:
      for (int i = 0; i < 3; ++i) require_finite(p, i);
      if (p.m[0].value != p.m[1].value || p.m[0].value != p.m[2].value)
        throw DomainError(name + ": masses must be equal");
      if (p.kind == Case::Isotropic3 && (p.a != p.b || p.a != p.c))
        throw DomainError(name + ": requires a = b = c");
      break;
    case Case::Atomic3:
      if (!p.m[0].infinite) throw DomainError(name + ": requires m1 = inf");
      require_finite(p, 1);
      require_finite(p, 2);
      if (p.m[1].value != p.m[2].value) throw DomainError(name + ": requires m2 = m3");
      break;
    case Case::Molecular3:
      require_finite(p, 0);
      if (!p.m[1].infinite || !p.m[2].infinite) throw DomainError(name + ": requires m2 = m3 = inf");
      if (!p.c.is_zero()) throw DomainError(name + ": requires c = 0");
      break;
    case Case::TwoBodyES:
    case Case::TwoBodyQES:
      require_finite(p, 0);
      if (p.A.sign() < 0) throw DomainError(name + ": A must be nonnegative");
      break;
  }
  for (const auto& a : p.A3)
    if (a.sign() < 0) throw DomainError(name + ": anharmonic couplings must be nonnegative");
}

Params params_from_json(const json& j) {
  Params p;
  if (!j.is_object()) throw std::invalid_argument("params must be a JSON object");
  p.kind = parse_case(j.value("case", std::string("general3")));
  switch (p.kind) {
    case Case::Atomic3:
      p.m = {Mass::inf(), Mass{}, Mass{}};
      break;
    case Case::Molecular3:
      p.m = {Mass{}, Mass::inf(), Mass::inf()};
      p.c = Rational(0);
      break;
    default:
      break;
  }
  if (j.contains("m")) {
    const auto& jm = j.at("m");
    if (!jm.is_array()) {
      const Mass one = mass_from_json(jm);
      if (p.kind == Case::Atomic3)
        p.m[1] = p.m[2] = one;
      else if (p.kind == Case::Molecular3)
        p.m[0] = one;
      else
        p.m = {one, one, one};
    } else {
      if (jm.empty() || jm.size() > 3) throw std::invalid_argument("m must list 1 to 3 masses");
      if (jm.size() == 1) {
        const Mass one = mass_from_json(jm[0]);
        if (p.kind == Case::Atomic3)
          p.m[1] = p.m[2] = one;
        else if (p.kind == Case::Molecular3)
          p.m[0] = one;
        else
          p.m = {one, one, one};
      } else {
        for (std::size_t i = 0; i < jm.size(); ++i) p.m[i] = mass_from_json(jm[i]);
      }
    }
  }
  if (j.contains("springs")) {
    const auto& s = j.at("springs");
    if (!s.is_array() || s.empty() || s.size() > 3)
      throw std::invalid_argument("springs must list 1 to 3 values");
    p.a = rational_from_json(s[0]);
    p.b = s.size() > 1 ? rational_from_json(s[1]) : p.a;
    p.c = s.size() > 2 ? rational_from_json(s[2]) : (p.kind == Case::Molecular3 ? Rational(0) : p.a);
  }
  if (j.contains("omega")) p.omega = rational_from_json(j.at("omega"));
  if (j.contains("d")) p.d = j.at("d").get<int>();
  if (p.kind == Case::OneDim3) p.d = 1;
  if (j.contains("A")) {
    const auto& a = j.at("A");
    if (a.is_array()) {
      if (a.size() == 3) {
        for (int i = 0; i < 3; ++i) p.A3[i] = rational_from_json(a[i]);
      } else if (a.size() == 1) {
        p.A = rational_from_json(a[0]);
      } else {
        throw std::invalid_argument("A must be a scalar or list of 1 or 3 values");
      }
    } else {
      p.A = rational_from_json(a);
    }
  }
  if (j.contains("N")) p.N = j.at("N").get<int>();
  if (j.contains("rho23")) p.rho23 = rational_from_json(j.at("rho23"));
  validate(p);
  return p;
}

json to_json(const Params& p) {
  json m = json::array();
  for (const auto& mi : p.m) m.push_back(mi.infinite ? json("inf") : to_json(mi.value));
  json j = {{"case", case_name(p.kind)},
            {"m", m},
            {"springs", {p.a.str(), p.b.str(), p.c.str()}},
            {"omega", p.omega.str()},
            {"d", p.d}};
  if (p.kind == Case::Primitive3QES) j["A"] = {p.A3[0].str(), p.A3[1].str(), p.A3[2].str()};
  if (p.kind == Case::TwoBodyQES) j["A"] = p.A.str();
  if (p.kind == Case::TwoBodyQES) j["N"] = p.N;
  if (p.kind == Case::Molecular3) j["rho23"] = p.rho23.str();
  return j;
}

std::vector<std::string> case_variables(Case c) {
  switch (c) {
    case Case::OneDim3:
      return {"x12", "x13"};
    case Case::TwoBodyES:
    case Case::TwoBodyQES:
      return {"rho"};
    default:
      return {"rho12", "rho13", "rho23"};
  }
}

int case_nderiv(Case c) {
  switch (c) {
    case Case::OneDim3:
    case Case::Molecular3:
      return 2;
    case Case::TwoBodyES:
    case Case::TwoBodyQES:
      return 1;
    default:
      return 3;
  }
}

ReducedMasses reduced_masses(const Params& p) {
  auto mu = [&](int i, int j) {
    const auto& a = p.m[i];
    const auto& b = p.m[j];
    if (a.infinite && b.infinite)
      throw DomainError("reduced mass undefined: m" + std::to_string(i + 1) + " and m" +
                        std::to_string(j + 1) + " both infinite");
    if (a.infinite) return b.value;
    if (b.infinite) return a.value;
    return a.value * b.value / (a.value + b.value);
  };
  if (p.kind == Case::TwoBodyES || p.kind == Case::TwoBodyQES) {
    const Rational m12 = mu(0, 1);
    return {m12, m12, m12};
  }
  if (p.kind == Case::Molecular3) {
    const Rational m12 = mu(0, 1), m13 = mu(0, 2);
    return {m12, m13, Rational(0)};
  }
  return {mu(0, 1), mu(0, 2), mu(1, 2)};
}

NuCoefficients nu_coefficients(const Params& p) {
  if (p.kind == Case::Molecular3) {
    // Reference point fixed so that the rho23 term is absorbed into E0.
    const Rational m = p.m[0].value;
    return {m * p.a * (p.a + p.b), m * p.b * (p.a + p.b), Rational(0)};
  }
  const auto [mu12, mu13, mu23] = reduced_masses(p);
  auto inv = [&](int i) { return p.m[i].infinite ? Rational(0) : Rational(1) / p.m[i].value; };
  const Rational& a = p.a;
  const Rational& b = p.b;
  const Rational& c = p.c;
  const Rational t1 = a * b * mu12 * mu13 * inv(0);
  const Rational t2 = a * c * mu12 * mu23 * inv(1);
  const Rational t3 = b * c * mu13 * mu23 * inv(2);
  return {a * a * mu12 + t1 + t2 - t3, b * b * mu13 + t1 + t3 - t2, c * c * mu23 + t2 + t3 - t1};
}

}  // namespace fewbody
