#pragma once

#include <string>
#include <vector>

#include "fewbody/diffop.hpp"
#include "fewbody/multipoly.hpp"

namespace fewbody {

/// Polynomial on phase space: coordinates q_0..q_{n-1} followed by their
/// conjugate momenta p_0..p_{n-1} in one variable list.
class PhasePoly {
 public:
  PhasePoly(std::vector<std::string> coords, std::vector<std::string> momenta);
  PhasePoly(int ncoords, MultiPoly poly);

  static PhasePoly coord(const PhasePoly& like, int i);
  static PhasePoly momentum(const PhasePoly& like, int i);
  static PhasePoly constant(const PhasePoly& like, const Rational& c);
  /// Lifts a coordinate-only polynomial (over the coordinate names).
  static PhasePoly lift(const PhasePoly& like, const MultiPoly& coords_only);

  int ncoords() const { return ncoords_; }
  const MultiPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  std::vector<std::string> coord_names() const;

  PhasePoly& operator+=(const PhasePoly& o);
  PhasePoly& operator-=(const PhasePoly& o);
  PhasePoly operator-() const { return PhasePoly(ncoords_, -poly_); }
  friend PhasePoly operator+(PhasePoly a, const PhasePoly& b) { return a += b; }
  friend PhasePoly operator-(PhasePoly a, const PhasePoly& b) { return a -= b; }
  friend PhasePoly operator*(const PhasePoly& a, const PhasePoly& b);
  friend PhasePoly operator*(const Rational& c, const PhasePoly& a) {
    return PhasePoly(a.ncoords_, a.poly_ * c);
  }
  friend bool operator==(const PhasePoly& a, const PhasePoly& b) {
    return a.ncoords_ == b.ncoords_ && a.poly_ == b.poly_;
  }

  /// Part of homogeneous degree k in the momenta.
  PhasePoly momentum_degree_part(int k) const;

  std::string to_string() const { return poly_.to_string(); }

 private:
  int ncoords_;
  MultiPoly poly_;
};

PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g);

/// Replaces each d_i^k in the order-k part of `op` by (s p_i)^k with s^2 = sign2,
/// i.e. sign2 = +1 for d -> p and sign2 = -1 for d -> i p (the latter only
/// well defined on even orders, where i^k is real).
PhasePoly principal_symbol(const DiffOp& op, const PhasePoly& like, int sign2 = 1);

}  // namespace fewbody
