#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fewbody/integrals.hpp"
#include "fewbody/ratdiffop.hpp"
#include "fewbody/rationalfn.hpp"

namespace fewbody {

/// Separating coordinates for the free three-body radial operator.
struct WMap {
  Masses m;
  MultiPoly w1, w2;  // over rho12, rho13, rho23
  RationalFn w3;
  MultiPoly sigma;  // (m2+m3)(rho12-rho13) + (m2-m3) rho23; w3 = w1 w2 / ((m2+m3) sigma^2)
};

WMap build_wmap(const Masses& m);
/// (w1, w2, w3) at a rho point; DomainError when sigma vanishes there.
std::array<Rational, 3> evaluate(const WMap& w, const std::vector<Rational>& rho);

const std::vector<std::string>& w_variables();

/// The radial operator written in the w coordinates.
RatDiffOp opham_operator(const Masses& m, int d);

struct PushforwardReport {
  bool ok = true;
  int functions = 0;
  int points = 0;
  struct Mismatch {
    std::string function;
    std::vector<Rational> rho;
    Rational residual;
  };
  std::vector<Mismatch> mismatches;
};

/// Test functions in w of degree <= 2 (plus w1 w2 + w3^2).
std::vector<MultiPoly> pushforward_battery();

/// Compares Delta_rad(f o W)(rho) with (opham f)(W(rho)) exactly at `npoints` seeded points.
PushforwardReport verify_pushforward(const Masses& m, int d, std::uint64_t seed, int npoints = 50);

struct SeparatedForm {
  Rational A, B;  // weights of 2w1 d1^2 + d d1 and 2w2 d2^2 + d d2
  Rational d;     // first-order constant recovered from the w1 part
  MultiPoly w3_second, w3_first;  // shared w3 operator  P(w3) d3^2 + Q(w3) d3
  RationalFn weight;              // A/w1 + B/w2
};

/// Matches op = A(2w1 d1^2 + d d1) + B(2w2 d2^2 + d d2) + (A/w1 + B/w2)(P d3^2 + Q d3).
/// Throws TemplateMismatch naming the first term that does not fit.
SeparatedForm match_separated_template(const RatDiffOp& op);

/// Closed forms for the template pieces.
SeparatedForm separated_closed_form(const Masses& m, int d);

struct WPotential {
  Rational prefactor;  // 2 omega^2
  Rational c_w1, c_w2;
  /// The +- sqrt(w1 w2 / w3) coefficient is sqrt_numerator / (m2+m3)^(5/2).
  Rational sqrt_numerator;
  Rational m23;  // m2 + m3
  bool w3_independent = false;
  /// Branch identification: sqrt(w1 w2/w3) = branch_sign * sqrt(m2+m3) * sigma makes the
  /// expression equal to V exactly; 0 when the sqrt term is absent.
  int branch_sign = 0;
  bool reproduces_potential = false;

  double sqrt_coefficient() const;
};

WPotential potential_in_w(const Masses& m, const NuCoefficients& nu, const Rational& omega);

/// 2w d^2 + d d + lambda / w in the single variable "w".
RatDiffOp one_variable_operator(const Rational& lambda, int d);

json to_json(const PushforwardReport& r);
json to_json(const SeparatedForm& s);
json to_json(const WPotential& p);

}  // namespace fewbody
