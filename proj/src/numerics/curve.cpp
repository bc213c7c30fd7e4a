#include <cstdio>
#include <sstream>

#include "fewbody/errors.hpp"
#include "fewbody/numerics.hpp"

namespace fewbody {

std::vector<CurveRow> potential_curve(const Params& p, const std::vector<Rational>& rho23) {
  if (p.kind != Case::Molecular3) throw DomainError("potential_curve: Molecular3 params required");
  std::vector<CurveRow> rows;
  for (const auto& r : rho23) {
    Params q = p;
    q.rho23 = r;
    validate(q);
    rows.push_back({r, ground_state(q).energy.eval({Rational(0), Rational(0), r})});
  }
  return rows;
}

std::vector<Rational> parse_range(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string s; std::getline(ss, s, ':');) parts.push_back(s);
  if (parts.size() == 1) return {Rational::parse(parts[0])};
  if (parts.size() != 3) throw std::invalid_argument("range must be lo:hi:step");
  const Rational lo = Rational::parse(parts[0]), hi = Rational::parse(parts[1]), step = Rational::parse(parts[2]);
  if (step.sign() <= 0) throw std::invalid_argument("range step must be positive");
  if (hi < lo) throw std::invalid_argument("range: hi < lo");
  std::vector<Rational> out;
  for (Rational x = lo; x <= hi; x += step) out.push_back(x);
  return out;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string to_csv(const std::vector<CurveRow>& rows) {
  std::string out = "rho23,E0\n";
  for (const auto& r : rows) out += format_double(r.rho23.to_double()) + "," + format_double(r.E0.to_double()) + "\n";
  return out;
}

std::string to_csv(const std::vector<ScanRow>& rows, const std::string& xname, const std::string& yname) {
  std::string out = xname + "," + yname + "\n";
  for (const auto& r : rows) out += format_double(r.x) + "," + format_double(r.y) + "\n";
  return out;
}

json to_json(const BOReport& r) {
  json j;
  j["E0"] = to_json(r.E0);
  j["E0_nucl"] = r.E0_nucl;
  j["gap"] = r.gap;
  j["degenerate"] = r.degenerate;
  j["c1_series"] = to_json(r.c1_series);
  j["c2_series"] = r.c2_series ? to_json(*r.c2_series) : json(nullptr);
  return j;
}

json to_json(const SeriesFit& f) {
  return {{"c1", f.c1}, {"c2", f.c2}, {"c1_err", f.c1_err}, {"c2_err", f.c2_err}, {"points", f.points}};
}

json to_json(const std::vector<CurveRow>& rows) {
  json a = json::array();
  for (const auto& r : rows) a.push_back({{"rho23", to_json(r.rho23)}, {"E0", to_json(r.E0)}});
  return a;
}

json to_json(const std::vector<ScanRow>& rows, const std::string& xname, const std::string& yname) {
  json a = json::array();
  for (const auto& r : rows) a.push_back({{xname, r.x}, {yname, r.y}});
  return a;
}

}  // namespace fewbody
