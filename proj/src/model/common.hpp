#pragma once

#include "fewbody/model.hpp"

namespace fewbody::detail {

/// Shorthand for writing the case formulas over a fixed variable list.
struct Ctx {
  std::vector<std::string> vars;
  int nd;

  explicit Ctx(Case c) : vars(case_variables(c)), nd(case_nderiv(c)) {}

  MultiPoly x(int i) const { return MultiPoly::var(vars, i); }
  MultiPoly k(const Rational& r) const { return MultiPoly(vars, r); }
  DiffOp zero() const { return DiffOp(vars, nd); }
  DiffOp mul(const MultiPoly& p) const { return DiffOp::multiply(p, nd); }

  /// c * d_i d_j (i == j gives the pure second derivative).
  DiffOp d2(int i, int j, const MultiPoly& c) const {
    DiffOp op(vars, nd);
    op.add_term(Monomial::unit(static_cast<int>(vars.size()), i) *
                    Monomial::unit(static_cast<int>(vars.size()), j),
                c);
    return op;
  }
  DiffOp d1(int i, const MultiPoly& c) const {
    DiffOp op(vars, nd);
    op.add_term(Monomial::unit(static_cast<int>(vars.size()), i), c);
    return op;
  }

  DiffOp Jm(int i) const { return gen::Jminus(vars, i, nd); }
  DiffOp J0(int i, int j) const { return gen::J0(vars, i, j, nd); }
};

struct Masses3 {
  Rational m1, m2, m3, mu12, mu13, mu23;
};
Masses3 finite_masses(const Params& p);

}  // namespace fewbody::detail
