#include <algorithm>
#include <future>
#include <thread>

#include "fewbody/errors.hpp"
#include "fewbody/spectra.hpp"

namespace fewbody {

namespace {

void fill(Monomial& m, int var, int k, int left, std::vector<Monomial>& out) {
  if (var == k) {
    out.push_back(m);
    return;
  }
  for (int e = 0; e <= left; ++e) {
    m.set(var, e);
    fill(m, var + 1, k, left - e, out);
  }
  m.set(var, 0);
}

struct Column {
  std::vector<std::pair<int, Rational>> entries;
  std::string bad_monomial, bad_term;
};

}  // namespace

int MonomialBasis::index_of(const Monomial& m) const {
  const auto it = std::lower_bound(monomials.begin(), monomials.end(), m, GradedLex{});
  if (it == monomials.end() || !(*it == m)) return -1;
  return static_cast<int>(it - monomials.begin());
}

std::pair<int, int> MonomialBasis::degree_range(int s) const {
  const auto lo = std::partition_point(monomials.begin(), monomials.end(),
                                       [s](const Monomial& m) { return m.degree() < s; });
  const auto hi = std::partition_point(lo, monomials.end(), [s](const Monomial& m) { return m.degree() <= s; });
  return {static_cast<int>(lo - monomials.begin()), static_cast<int>(hi - monomials.begin())};
}

MonomialBasis enumerate_basis(const std::vector<std::string>& vars, int k, int N) {
  if (k < 1 || k > static_cast<int>(vars.size())) throw std::invalid_argument("enumerate_basis: bad variable count");
  if (N < 0) throw std::invalid_argument("enumerate_basis: negative degree cap");
  MonomialBasis b{vars, k, N, {}};
  Monomial m(static_cast<int>(vars.size()));
  fill(m, 0, k, N, b.monomials);
  std::sort(b.monomials.begin(), b.monomials.end(), GradedLex{});
  return b;
}

MonomialBasis enumerate_basis(int k, int N) {
  std::vector<std::string> vars;
  for (int i = 1; i <= k; ++i) vars.push_back("x" + std::to_string(i));
  return enumerate_basis(vars, k, N);
}

OpMatrix assemble_matrix(const DiffOp& op, const MonomialBasis& basis) {
  if (op.vars() != basis.vars) throw VariableMismatch("assemble_matrix: operator and basis variables differ");
  const int n = static_cast<int>(basis.size());
  auto column = [&](int j) {
    Column col;
    const MultiPoly img = op.apply(MultiPoly::monomial(basis.vars, basis.monomials[j]));
    for (const auto& [mono, c] : img.terms()) {
      const int i = basis.index_of(mono);
      if (i < 0) {
        col.bad_monomial = MultiPoly::monomial(basis.vars, basis.monomials[j]).to_string();
        col.bad_term = MultiPoly::monomial(basis.vars, mono, c).to_string();
        break;
      }
      col.entries.emplace_back(i, c);
    }
    return col;
  };
  const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, 8);
  std::vector<Column> cols(n);
  std::vector<std::future<void>> jobs;
  for (int w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (int j = w; j < n; j += workers) cols[j] = column(j);
    }));
  for (auto& f : jobs) f.get();

  OpMatrix m{basis, RMatrix(n, std::vector<Rational>(n, Rational(0)))};
  for (int j = 0; j < n; ++j) {
    if (!cols[j].bad_term.empty()) throw InvariantSubspaceViolation(cols[j].bad_monomial, cols[j].bad_term);
    for (auto& [i, c] : cols[j].entries) m.entries[i][j] = c;
  }
  return m;
}

}  // namespace fewbody
