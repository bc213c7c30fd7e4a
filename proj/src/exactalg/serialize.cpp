#include "fewbody/serialize.hpp"

namespace fewbody {

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a \"p/q\" string or an integer");
}

namespace {

Monomial monomial_from(const json& arr, int n) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != n)
    throw VariableMismatch("exponent list has wrong length");
  Monomial m(n);
  for (int i = 0; i < n; ++i) {
    const int e = arr[i].get<int>();
    if (e < 0) throw std::invalid_argument("negative exponent");
    m.set(i, e);
  }
  return m;
}

}  // namespace

json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"coeff", c.str()}, {"powers", m.to_vector()}});
  return {{"variables", p.vars()}, {"terms", terms}};
}

MultiPoly multipoly_from_json(const json& j) {
  auto vars = j.at("variables").get<std::vector<std::string>>();
  MultiPoly p(vars);
  const int n = static_cast<int>(vars.size());
  for (const auto& t : j.at("terms")) p.add_term(monomial_from(t.at("powers"), n), rational_from_json(t.at("coeff")));
  return p;
}

json to_json(const DiffOp& op) {
  json terms = json::array();
  for (const auto& [a, c] : op.terms()) {
    std::vector<int> d = a.to_vector();
    d.resize(op.nderiv());
    for (const auto& [m, v] : c.terms())
      terms.push_back({{"coeff", v.str()}, {"powers", m.to_vector()}, {"derivs", d}});
  }
  return {{"variables", op.vars()}, {"nderiv", op.nderiv()}, {"terms", terms}};
}

DiffOp diffop_from_json(const json& j) {
  auto vars = j.at("variables").get<std::vector<std::string>>();
  const int n = static_cast<int>(vars.size());
  const int nd = j.contains("nderiv") ? j.at("nderiv").get<int>() : n;
  DiffOp op(vars, nd);
  for (const auto& t : j.at("terms")) {
    auto d = t.at("derivs").get<std::vector<int>>();
    if (static_cast<int>(d.size()) != nd) throw VariableMismatch("derivative list has wrong length");
    Monomial a(n);
    for (int i = 0; i < nd; ++i) a.set(i, d[i]);
    op.add_term(a, MultiPoly::monomial(vars, monomial_from(t.at("powers"), n),
                                       rational_from_json(t.at("coeff"))));
  }
  return op;
}

json to_json(const RationalFn& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

}  // namespace fewbody
