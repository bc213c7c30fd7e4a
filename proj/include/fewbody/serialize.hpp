#pragma once

#include <json.hpp>

#include "fewbody/diffop.hpp"
#include "fewbody/multipoly.hpp"
#include "fewbody/rational.hpp"
#include "fewbody/rationalfn.hpp"

namespace fewbody {

using json = nlohmann::ordered_json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// {variables:[...], terms:[{coeff:"p/q", powers:[...]}]}
json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const json& j);

/// {variables:[...], nderiv:k, terms:[{coeff:"p/q", powers:[...], derivs:[...]}]}
/// One entry per (coefficient monomial, derivative) pair.
json to_json(const DiffOp& op);
DiffOp diffop_from_json(const json& j);

json to_json(const RationalFn& f);

}  // namespace fewbody
