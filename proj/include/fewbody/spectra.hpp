#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fewbody/diffop.hpp"
#include "fewbody/model.hpp"
#include "fewbody/multipoly.hpp"
#include "fewbody/upoly.hpp"

namespace fewbody {

/// Monomials of total degree <= N in the first k of `vars`, graded-lex ordered.
struct MonomialBasis {
  std::vector<std::string> vars;
  int k = 0;
  int N = 0;
  std::vector<Monomial> monomials;

  std::size_t size() const { return monomials.size(); }
  /// Position of m in the list, or -1.
  int index_of(const Monomial& m) const;
  /// [begin, end) index range of the monomials of total degree s.
  std::pair<int, int> degree_range(int s) const;
};

MonomialBasis enumerate_basis(const std::vector<std::string>& vars, int k, int N);
/// Variables named x1..xk.
MonomialBasis enumerate_basis(int k, int N);

struct OpMatrix {
  MonomialBasis basis;
  RMatrix entries;  // column j = coordinates of op applied to monomial j
};

/// Throws InvariantSubspaceViolation when op maps a basis monomial outside the span.
OpMatrix assemble_matrix(const DiffOp& op, const MonomialBasis& basis);

struct Eigenvalue {
  enum class Kind { Exact, Interval, Complex };
  Kind kind = Kind::Exact;
  Rational value;              // exact value, or interval midpoint
  Rational lo, hi;             // certified enclosure (lo == hi == value when exact)
  double re = 0, im = 0;       // floating approximation (complex roots only carry this)
  UPoly factor;                // squarefree factor of the block characteristic polynomial
  int multiplicity = 1;        // algebraic
  int geometric = -1;          // dim ker(M - lambda), -1 if not computed exactly
  std::vector<int> degrees;    // grading blocks contributing this eigenvalue
  std::vector<int> jordan_nullities;  // dim ker (M - lambda)^k, k = 1..multiplicity, when defective

  bool defective() const { return geometric >= 0 && geometric < multiplicity; }
  double approx() const;
  Eigenvalue shifted(const Rational& s) const;
};

struct Eigenfunction {
  Rational eigenvalue;
  MultiPoly phi;
};

struct SpectrumReport {
  std::optional<Params> params;
  int N = 0;
  MonomialBasis basis;
  RMatrix matrix;
  Rational E0;
  std::vector<Eigenvalue> gauged;
  std::vector<Eigenvalue> physical;
  std::vector<Eigenfunction> eigenfunctions;

  /// Sum of algebraic multiplicities (equals the basis size).
  int total_multiplicity() const;
  /// Gauged eigenvalues expanded by multiplicity, exact entries only.
  std::vector<Rational> exact_multiset() const;
};

/// Spectrum of a block-triangular (in the grading) matrix, degree block by block.
SpectrumReport eigenvalues_graded(const OpMatrix& m);

/// Spectrum treating the whole matrix as one block.
SpectrumReport eigenvalues_single_block(const OpMatrix& m);

/// The gauged operator whose matrix compute_spectrum diagonalizes (molecular: rho23 fixed).
DiffOp spectral_operator(const Params& p);

/// Gauged spectrum of h on the degree <= N polynomials, plus physical energies.
SpectrumReport compute_spectrum(const Params& p, int N);

/// (N+1)x(N+1) block of the QES two-body operator on P_N, N taken from p.
SpectrumReport qes_2body_block(const Params& p);

struct LaguerreCheck {
  bool ok = true;
  int first_failing_n = -1;
  std::string reason;
  std::vector<MultiPoly> eigenfunctions;  // phi_n, n = 0..nmax
};

/// Checks the exact eigenfunctions of the two-body ES operator against the
/// generalized Laguerre polynomials L_n^{(d/2-1)}(2 mu omega rho).
LaguerreCheck laguerre_verify(const Params& p, int nmax);

/// L_n^{(alpha)}(x) by the three-term recurrence.
UPoly laguerre(int n, const Rational& alpha);

/// Constant coefficients c with op = c_0 + sum c_i g_i + sum_{i<=j} c_ij g_i g_j over the
/// given generators (products included up to `order`), or nullopt if op is outside that span.
std::optional<std::vector<Rational>> express_in_generators(const DiffOp& op, const std::vector<DiffOp>& gens,
                                                           int order = 2);

json to_json(const Eigenvalue& e);
json to_json(const SpectrumReport& r);

}  // namespace fewbody
