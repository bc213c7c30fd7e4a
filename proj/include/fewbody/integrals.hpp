#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fewbody/diffop.hpp"
#include "fewbody/model.hpp"
#include "fewbody/phasepoly.hpp"
#include "fewbody/serialize.hpp"

namespace fewbody {

using Masses = std::array<Rational, 3>;

/// Inputs of the free and harmonic three-body integrals. The nu's (with omega)
/// are only needed for the Hamiltonians and the prolonged integrals.
struct IntegralInputs {
  Masses m{Rational(1), Rational(1), Rational(1)};
  int d = 3;
  Rational omega{1};
  std::optional<NuCoefficients> nu;
};

/// Finite masses, d, omega and the nu's of a General3-family Params.
IntegralInputs integral_inputs(const Params& p);

struct IntegralSet {
  IntegralInputs in;
  PhasePoly S1, S2, S3, F1, F2, F3, L0;
  PhasePoly L0sq;  // L0^2
  PhasePoly K;     // mass-weighted F1, F2, F3 combination of the third involutive triplet
  DiffOp S1q, S2q, S3q, F1q, F2q, F3q, L0q;
  // Present when nu's are supplied.
  std::optional<PhasePoly> H, S2t, S3t;
  std::optional<DiffOp> Hq, S2tq, S3tq;

  /// Classical member by name ("S1", "L0sq", "S3t", ...); throws std::out_of_range.
  const PhasePoly& classical(const std::string& name) const;
  const DiffOp& quantum(const std::string& name) const;
};

/// Phase space (rho12, rho13, rho23; p1, p2, p3) with no terms.
PhasePoly phase_space();
IntegralSet build_integral_set(const IntegralInputs& in);

PhasePoly conservation_check_classical(const PhasePoly& H, const PhasePoly& I);
DiffOp conservation_check_quantum(const DiffOp& H, const DiffOp& I);

enum class Superintegrability { None, Minimal, Maximal };
std::string to_string(Superintegrability s);

struct SuperintegrabilityVerdict {
  Superintegrability kind = Superintegrability::None;
  /// The three relations m2 nu13 = m3 nu12, m1 nu23 = m2 nu13, m3 nu12 = m1 nu23.
  std::array<bool, 3> relations{};
  std::vector<std::string> witnessed;  // relations that hold, as text
  std::vector<std::string> surviving;  // classical integrals with {H, X} = 0
  std::vector<std::string> surviving_quantum;
};

SuperintegrabilityVerdict classify_superintegrability(const Masses& m, const NuCoefficients& nu, int d = 3,
                                                      const Rational& omega = Rational(1));

struct TripletCheck {
  std::string name;
  std::array<std::string, 3> members;
  std::array<PhasePoly, 3> brackets;  // {a,b}, {a,c}, {b,c}
  bool in_involution() const;
};

std::vector<TripletCheck> involution_triplets(const IntegralSet& set);

/// Permutation of particle labels 1,2,3 given as images (sigma(1), sigma(2), sigma(3)).
using Perm = std::array<int, 3>;
const std::vector<Perm>& s3_elements();

/// Relabels particles i -> sigma(i) in rho's and momenta (or derivatives).
PhasePoly permutation_action(const Perm& sigma, const PhasePoly& f);
DiffOp permutation_action(const Perm& sigma, const DiffOp& op);
/// Masses seen after relabeling: m'_{sigma(i)} = m_i.
Masses permutation_action(const Perm& sigma, const Masses& m);

/// Bracket residual with its full canonical term list.
json residual_json(const PhasePoly& r);
json residual_json(const DiffOp& r);
json to_json(const SuperintegrabilityVerdict& v);

}  // namespace fewbody
