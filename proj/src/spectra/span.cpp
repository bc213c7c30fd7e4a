#include <map>

#include "fewbody/spectra.hpp"

namespace fewbody {

std::optional<std::vector<Rational>> express_in_generators(const DiffOp& op, const std::vector<DiffOp>& gens,
                                                           int order) {
  std::vector<DiffOp> words{DiffOp::identity(op.vars(), op.nderiv())};
  for (const auto& g : gens) words.push_back(g);
  if (order >= 2)
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i; j < gens.size(); ++j) words.push_back(compose(gens[i], gens[j]));
  words.push_back(op);

  // One row per (derivative multi-index, coefficient monomial) pair.
  std::map<std::pair<Monomial, Monomial>, int, decltype([](const auto& a, const auto& b) {
             GradedLex lt;
             if (lt(a.first, b.first)) return true;
             if (lt(b.first, a.first)) return false;
             return lt(a.second, b.second);
           })>
      rows;
  for (const auto& w : words)
    for (const auto& [alpha, c] : w.terms())
      for (const auto& [mono, v] : c.terms()) rows.emplace(std::make_pair(alpha, mono), static_cast<int>(rows.size()));
  const int n = static_cast<int>(words.size());
  RMatrix a(rows.size(), std::vector<Rational>(n, Rational(0)));
  for (int k = 0; k < n; ++k)
    for (const auto& [alpha, c] : words[k].terms())
      for (const auto& [mono, v] : c.terms()) a[rows.at({alpha, mono})][k] = k + 1 == n ? -v : v;

  // A solution is a null vector with a nonzero last entry.
  for (const auto& v : null_space(a)) {
    if (v.back().is_zero()) continue;
    std::vector<Rational> out(v.begin(), v.end() - 1);
    const Rational s = Rational(1) / v.back();
    for (auto& x : out) x *= s;
    return out;
  }
  return std::nullopt;
}

}  // namespace fewbody
