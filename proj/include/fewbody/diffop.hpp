#pragma once

#include <map>
#include <string>
#include <vector>

#include "fewbody/gaussfn.hpp"
#include "fewbody/multipoly.hpp"
#include "fewbody/rationalfn.hpp"

namespace fewbody {

/// Linear differential operator sum_alpha c_alpha(x) d^alpha in normal order
/// (coefficients to the left). The coefficient ring uses `vars`; only the
/// first `nderiv` of them are differentiated, the rest act as parameters.
class DiffOp {
 public:
  using Terms = std::map<Monomial, MultiPoly, GradedLex>;

  DiffOp() = default;
  explicit DiffOp(std::vector<std::string> vars, int nderiv = -1);

  static DiffOp identity(const std::vector<std::string>& vars, int nderiv = -1);
  static DiffOp partial(const std::vector<std::string>& vars, int var, int times = 1,
                        int nderiv = -1);
  static DiffOp multiply(const MultiPoly& p, int nderiv = -1);

  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  int nderiv() const { return nderiv_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;  // -1 for the zero operator

  /// Coefficient of d^alpha; alpha indexes all vars (trailing entries zero).
  MultiPoly coeff(const Monomial& alpha) const;
  MultiPoly coeff(std::initializer_list<int> alpha) const;
  void add_term(const Monomial& alpha, const MultiPoly& c);

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp operator-() const;
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(const Rational& c, const DiffOp& a);
  /// Left multiplication by a function.
  friend DiffOp operator*(const MultiPoly& p, const DiffOp& a);
  friend bool operator==(const DiffOp& a, const DiffOp& b);

  MultiPoly apply(const MultiPoly& f) const;
  GaussFn apply(const GaussFn& f) const;
  RationalFn apply(const RationalFn& f) const;

  /// Evaluates every coefficient with the parameter variables fixed.
  DiffOp substitute(int var, const Rational& value) const;

  /// Part of order exactly k.
  DiffOp homogeneous_part(int k) const;

  std::string to_string() const;

 private:
  void check_compatible(const std::vector<std::string>& v, const char* where) const;
  std::vector<std::string> vars_;
  int nderiv_ = 0;
  Terms terms_;
};

DiffOp compose(const DiffOp& a, const DiffOp& b);
DiffOp commutator(const DiffOp& a, const DiffOp& b);

/// g^{-1} (op - shift) g for g = exp(q) with unit prefactor.
DiffOp gauge_conjugate(const DiffOp& op, const GaussFn& g, const Rational& shift);

/// Calls fn(gamma) for every multi-index gamma <= alpha (componentwise).
template <class Fn>
void for_each_submultiindex(const Monomial& alpha, Fn&& fn) {
  Monomial g(alpha.size());
  const int n = alpha.size();
  while (true) {
    fn(static_cast<const Monomial&>(g));
    int i = 0;
    while (i < n) {
      if (g[i] < alpha[i]) {
        g.set(i, g[i] + 1);
        break;
      }
      g.set(i, 0);
      ++i;
    }
    if (i == n) return;
  }
}

/// prod_i binomial(alpha_i, gamma_i).
Rational multi_binomial(const Monomial& alpha, const Monomial& gamma);

}  // namespace fewbody
