#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fewbody/diffop.hpp"
#include "fewbody/gaussfn.hpp"
#include "fewbody/identity.hpp"
#include "fewbody/multipoly.hpp"
#include "fewbody/rationalfn.hpp"
#include "fewbody/serialize.hpp"

namespace fewbody {

enum class Case {
  General3,
  EqualMass3,
  Isotropic3,
  Atomic3,
  Molecular3,
  OneDim3,
  TwoBodyES,
  TwoBodyQES,
  Primitive3QES,
};

std::string case_name(Case c);
Case parse_case(const std::string& name);
const std::vector<Case>& all_cases();

/// Positive rational mass or the infinite-mass limit.
struct Mass {
  Rational value{1};
  bool infinite = false;
  static Mass inf() { return {Rational(1), true}; }
};

struct Params {
  Case kind = Case::General3;
  std::array<Mass, 3> m{};
  Rational a{1}, b{1}, c{1};
  Rational omega{1};
  int d = 3;
  std::array<Rational, 3> A3{};  // A12, A13, A23 (primitive QES)
  Rational A{0};                 // two-body sextic coupling
  int N = 0;                     // QES level
  Rational rho23{0};             // numeric value of the molecular parameter

  /// Mass shared by the equal/atomic/molecular cases (m1, m2, or m1).
  Rational case_mass() const;
};

/// Throws DomainError when the parameters violate the case invariants.
void validate(const Params& p);

/// Parses {case, m:[..], springs:[..], omega, d, A:[..]|A, N, rho23}; rationals as
/// "p/q" strings, infinite masses as "inf". Throws std::invalid_argument.
Params params_from_json(const json& j);
json to_json(const Params& p);

/// Variable list of the case and the number of differentiable variables.
std::vector<std::string> case_variables(Case c);
int case_nderiv(Case c);

struct ReducedMasses {
  Rational mu12, mu13, mu23;
};
ReducedMasses reduced_masses(const Params& p);

struct NuCoefficients {
  Rational nu12, nu13, nu23;
};
NuCoefficients nu_coefficients(const Params& p);

DiffOp build_radial_laplacian(const Params& p);
MultiPoly build_potential(const Params& p);
/// -Delta_rad + V (or the d=1 radial Hamiltonian).
DiffOp build_hamiltonian(const Params& p);

struct GroundState {
  GaussFn wavefunction;
  MultiPoly energy;  // constant except for the molecular rho23 dependence
};
GroundState ground_state(const Params& p);

DiffOp build_h_algebraic(const Params& p);
DiffOp lie_form(const Params& p);

/// Hidden-algebra generators realized on the case variables.
namespace gen {
DiffOp Jminus(const std::vector<std::string>& vars, int i, int nderiv = -1);
DiffOp J0(const std::vector<std::string>& vars, int i, int j, int nderiv = -1);
DiffOp J0N(const std::vector<std::string>& vars, const Rational& N, int nderiv = -1);
DiffOp Jplus(const std::vector<std::string>& vars, int i, const Rational& N, int nderiv = -1);
}  // namespace gen

struct Cometric {
  std::vector<std::vector<MultiPoly>> matrix;
  MultiPoly determinant;   // direct cofactor expansion
  MultiPoly factored;      // closed product form
  std::string convention;  // "full": Delta = sum g^{ij} d_i d_j + ..., "half": (1/2) Delta
};
Cometric cometric(const Params& p);

/// 2(r12 r13 + r12 r23 + r13 r23) - r12^2 - r13^2 - r23^2 over the rho variables.
MultiPoly area_square(const std::vector<std::string>& vars);

RationalFn effective_potential(const Params& p);
/// -(Delta Gamma)/Gamma computed by exact log-derivatives (independent route).
RationalFn effective_potential_from_gauge(const Params& p);

struct PowerFactor {
  MultiPoly base;
  Rational exponent;
};
std::vector<PowerFactor> gauge_factor_gamma(const Params& p);

struct PrimitiveQES {
  MultiPoly potential;  // V~ only (add build_potential for the full potential)
  GaussFn ground;
  Rational residual_energy;  // constant value of (H~ Psi~)/Psi~
  Rational shift_from_harmonic;  // residual_energy - omega d (a+b+c)
};
PrimitiveQES build_qes_primitive(const Params& p);

using Vec = std::vector<double>;
std::vector<Vec> jacobi_coordinates(const std::vector<double>& masses,
                                    const std::vector<Vec>& positions);
double jacobi_reduced_mass(const std::vector<double>& masses);

/// Random case-consistent parameters with small positive rationals p/q, p <= 9, q <= 5.
/// OneDim3 always gets d = 1; TwoBodyQES draws N in 0..3.
Params random_params(Case kind, RationalSampler& rs, int d = 3);

}  // namespace fewbody
