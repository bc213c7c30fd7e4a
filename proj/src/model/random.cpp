#include "fewbody/model.hpp"

namespace fewbody {

Params random_params(Case kind, RationalSampler& rs, int d) {
  auto r = [&] { return Rational(rs.next_int(1, 9), rs.next_int(1, 5)); };
  Params p;
  p.kind = kind;
  p.d = kind == Case::OneDim3 ? 1 : d;
  p.omega = r();
  p.a = r();
  p.b = r();
  p.c = r();
  for (auto& m : p.m) m = Mass{r(), false};
  switch (kind) {
    case Case::EqualMass3:
      p.m[1] = p.m[2] = p.m[0];
      break;
    case Case::Isotropic3:
      p.m[1] = p.m[2] = p.m[0];
      p.b = p.c = p.a;
      break;
    case Case::Atomic3:
      p.m[0] = Mass::inf();
      p.m[2] = p.m[1];
      break;
    case Case::Molecular3:
      p.m[1] = p.m[2] = Mass::inf();
      p.c = Rational(0);
      p.rho23 = r();
      break;
    case Case::TwoBodyQES:
      p.A = r();
      p.N = static_cast<int>(rs.next_int(0, 3));
      break;
    case Case::Primitive3QES:
      for (auto& a : p.A3) a = r();
      break;
    default:
      break;
  }
  return p;
}

}  // namespace fewbody
