#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fewbody/errors.hpp"
#include "fewbody/rational.hpp"

namespace fewbody {

inline constexpr int kMaxVars = 8;

/// Exponent vector over at most kMaxVars variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : n_(nvars) {}
  Monomial(std::initializer_list<int> exps);
  static Monomial unit(int nvars, int var, int power = 1);

  int size() const { return n_; }
  int operator[](int i) const { return e_[i]; }
  void set(int i, int v) { e_[i] = static_cast<std::uint16_t>(v); }
  int degree() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires divides

  std::vector<int> to_vector() const { return {e_.begin(), e_.begin() + n_}; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

 private:
  int n_ = 0;
  std::array<std::uint16_t, kMaxVars> e_{};
};

/// Graded lexicographic order: total degree first, then larger exponent in
/// the earliest variable first. Gives 1, x, y, z, x^2, xy, xz, y^2, ...
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Rational with a named variable list.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLex>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) { check_vars(); }
  MultiPoly(std::vector<std::string> vars, const Rational& c);

  static MultiPoly var(const std::vector<std::string>& vars, int i);
  static MultiPoly var(const std::vector<std::string>& vars, const std::string& name);
  static MultiPoly monomial(const std::vector<std::string>& vars, const Monomial& m,
                            const Rational& c = Rational(1));

  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coeff(const Monomial& m) const;
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(int var) const;

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly operator+(const Rational& c) const;
  MultiPoly operator-(const Rational& c) const { return *this + (-c); }

  MultiPoly pow(int e) const;
  MultiPoly diff(int var, int times = 1) const;
  MultiPoly diff(const Monomial& alpha) const;

  Rational eval(const std::vector<Rational>& point) const;
  double eval_double(const std::vector<double>& point) const;

  /// Substitutes polynomials (over a common target variable list) for each variable.
  MultiPoly compose(const std::vector<MultiPoly>& images) const;
  /// Substitutes a value for one variable; the variable stays in the list.
  MultiPoly substitute(int var, const Rational& value) const;
  /// Re-expresses over a different variable list; every used variable must exist there.
  MultiPoly rebase(const std::vector<std::string>& target) const;

  /// Exact division by a polynomial; throws DomainError if not exact.
  MultiPoly divide_exact(const MultiPoly& d) const;

  std::string to_string() const;

 private:
  void check_vars() const;
  std::vector<std::string> vars_;
  Terms terms_;
};

void require_same_vars(const std::vector<std::string>& a, const std::vector<std::string>& b,
                       const char* where);

}  // namespace fewbody
