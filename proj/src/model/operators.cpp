#include "common.hpp"
#include "fewbody/errors.hpp"

namespace fewbody {

using detail::Ctx;

namespace gen {

DiffOp Jminus(const std::vector<std::string>& vars, int i, int nderiv) {
  return DiffOp::partial(vars, i, 1, nderiv);
}

DiffOp J0(const std::vector<std::string>& vars, int i, int j, int nderiv) {
  return MultiPoly::var(vars, i) * DiffOp::partial(vars, j, 1, nderiv);
}

DiffOp J0N(const std::vector<std::string>& vars, const Rational& N, int nderiv) {
  DiffOp op = DiffOp::multiply(MultiPoly(vars, -N), nderiv);
  for (int i = 0; i < op.nderiv(); ++i) op += J0(vars, i, i, nderiv);
  return op;
}

DiffOp Jplus(const std::vector<std::string>& vars, int i, const Rational& N, int nderiv) {
  return MultiPoly::var(vars, i) * J0N(vars, N, nderiv);
}

}  // namespace gen

namespace detail {

Masses3 finite_masses(const Params& p) {
  for (const auto& m : p.m)
    if (m.infinite) throw DomainError(case_name(p.kind) + ": finite masses required");
  const auto mu = reduced_masses(p);
  return {p.m[0].value, p.m[1].value, p.m[2].value, mu.mu12, mu.mu13, mu.mu23};
}

}  // namespace detail

namespace {

using detail::finite_masses;

bool is_general_family(Case c) {
  return c == Case::General3 || c == Case::EqualMass3 || c == Case::Isotropic3 ||
         c == Case::Primitive3QES;
}


Rational two_body_mu(const Params& p) { return reduced_masses(p).mu12; }

Rational two_body_A(const Params& p) { return p.kind == Case::TwoBodyQES ? p.A : Rational(0); }

DiffOp laplacian_general(const Params& p) {
  const Ctx c(p.kind);
  const auto M = finite_masses(p);
  const Rational d(p.d);
  const auto r12 = c.x(0), r13 = c.x(1), r23 = c.x(2);
  DiffOp op = c.zero();
  op += c.d2(0, 0, r12 * (Rational(2) / M.mu12));
  op += c.d2(1, 1, r13 * (Rational(2) / M.mu13));
  op += c.d2(2, 2, r23 * (Rational(2) / M.mu23));
  op += c.d2(0, 1, (r12 + r13 - r23) * (Rational(2) / M.m1));
  op += c.d2(0, 2, (r12 + r23 - r13) * (Rational(2) / M.m2));
  op += c.d2(1, 2, (r13 + r23 - r12) * (Rational(2) / M.m3));
  op += c.d1(0, c.k(d / M.mu12));
  op += c.d1(1, c.k(d / M.mu13));
  op += c.d1(2, c.k(d / M.mu23));
  return op;
}

MultiPoly potential_general(const Params& p) {
  const Ctx c(p.kind);
  const auto nu = nu_coefficients(p);
  const Rational w2 = Rational(2) * p.omega * p.omega;
  return (c.x(0) * nu.nu12 + c.x(1) * nu.nu13 + c.x(2) * nu.nu23) * w2;
}

MultiPoly primitive_tilde_potential(const Params& p) {
  const Ctx c(p.kind);
  const auto M = finite_masses(p);
  const Rational &A12 = p.A3[0], &A13 = p.A3[1], &A23 = p.A3[2];
  const Rational &a = p.a, &b = p.b, &cc = p.c;
  const auto r12 = c.x(0), r13 = c.x(1), r23 = c.x(2);
  MultiPoly cubic = r12.pow(3) * (A12 * A12 / M.mu12) + r13.pow(3) * (A13 * A13 / M.mu13) +
                    r23.pow(3) * (A23 * A23 / M.mu23);
  cubic += (r13.pow(2) * (A13 / M.m1) + r23.pow(2) * (A23 / M.m2)) * r12 * A12;
  cubic += (r12.pow(2) * (A12 / M.m1) + r23.pow(2) * (A23 / M.m3)) * r13 * A13;
  cubic += (r12.pow(2) * (A12 / M.m2) + r13.pow(2) * (A13 / M.m3)) * r23 * A23;
  cubic -= r12 * r13 * r23 * (A12 * A13 / M.m1 + A12 * A23 / M.m2 + A13 * A23 / M.m3);

  const Rational P = a * M.mu12 * M.m3;  // a mu12 m3
  const Rational Q = b * M.mu13 * M.m2;  // b mu13 m2
  const Rational R = cc * M.mu23 * M.m1; // c mu23 m1
  MultiPoly quad = r12.pow(2) * (A12 * M.m3 * (Rational(2) * a * M.m1 * M.m2 + Q + R));
  quad += r13.pow(2) * (A13 * M.m2 * (P + Rational(2) * b * M.m1 * M.m3 + R));
  quad += r23.pow(2) * (A23 * M.m1 * (P + Q + Rational(2) * cc * M.m2 * M.m3));
  quad += r12 * r13 * (A13 * M.m2 * (P - R) + A12 * M.m3 * (Q - R));
  quad += r12 * r23 * (A23 * M.m1 * (P - Q) + A12 * M.m3 * (R - Q));
  quad += r13 * r23 * (A23 * M.m1 * (Q - P) + A13 * M.m2 * (R - P));

  MultiPoly lin = r12 * (A12 / M.mu12) + r13 * (A13 / M.mu13) + r23 * (A23 / M.mu23);
  return cubic * Rational(8) + quad * (Rational(4) * p.omega / (M.m1 * M.m2 * M.m3)) -
         lin * Rational(2 * (p.d + 2));
}

MultiPoly ground_exponent_general(const Params& p) {
  const Ctx c(p.kind);
  const auto M = finite_masses(p);
  return (c.x(0) * (p.a * M.mu12) + c.x(1) * (p.b * M.mu13) + c.x(2) * (p.c * M.mu23)) *
         (-p.omega);
}

MultiPoly primitive_extra_exponent(const Params& p) {
  const Ctx c(p.kind);
  return -(c.x(0).pow(2) * p.A3[0] + c.x(1).pow(2) * p.A3[1] + c.x(2).pow(2) * p.A3[2]);
}

DiffOp h_general(const Params& p) {
  const Ctx c(p.kind);
  const auto M = finite_masses(p);
  const Rational &a = p.a, &b = p.b, &cc = p.c, &w = p.omega;
  const Rational d(p.d);
  const auto r12 = c.x(0), r13 = c.x(1), r23 = c.x(2);
  DiffOp op = c.zero();
  op += c.d2(0, 0, r12 * (Rational(-2) / M.mu12));
  op += c.d2(1, 1, r13 * (Rational(-2) / M.mu13));
  op += c.d2(2, 2, r23 * (Rational(-2) / M.mu23));
  op += c.d2(0, 1, (r13 + r12 - r23) * (Rational(-2) / M.m1));
  op += c.d2(0, 2, (r23 + r12 - r13) * (Rational(-2) / M.m2));
  op += c.d2(1, 2, (r13 + r23 - r12) * (Rational(-2) / M.m3));

  MultiPoly f1 = (r12 * (Rational(2) * a * M.m1 * M.m2) + (r12 + r13 - r23) * (b * M.mu13 * M.m2) +
                  (r12 + r23 - r13) * (cc * M.mu23 * M.m1)) *
                     (Rational(2) * M.mu12 * w) -
                 d * M.m1 * M.m2;
  MultiPoly f2 = (r13 * (Rational(2) * b * M.m1 * M.m3) + (r12 + r13 - r23) * (a * M.mu12 * M.m3) +
                  (r13 + r23 - r12) * (cc * M.mu23 * M.m1)) *
                     (Rational(2) * M.mu13 * w) -
                 d * M.m1 * M.m3;
  MultiPoly f3 = (r23 * (Rational(2) * cc * M.m2 * M.m3) + (r12 + r23 - r13) * (a * M.mu12 * M.m3) +
                  (r13 + r23 - r12) * (b * M.mu13 * M.m2)) *
                     (Rational(2) * M.mu23 * w) -
                 d * M.m2 * M.m3;
  op += c.d1(0, f1 * (Rational(1) / (M.mu12 * M.m1 * M.m2)));
  op += c.d1(1, f2 * (Rational(1) / (M.mu13 * M.m1 * M.m3)));
  op += c.d1(2, f3 * (Rational(1) / (M.mu23 * M.m2 * M.m3)));
  return op;
}

DiffOp h_equal_mass(const Params& p) {
  const Ctx c(p.kind);
  const Rational m = p.m[0].value;
  const Rational &a = p.a, &b = p.b, &cc = p.c, &w = p.omega;
  const auto r12 = c.x(0), r13 = c.x(1), r23 = c.x(2);
  DiffOp second = c.d2(0, 0, r12 * Rational(2)) + c.d2(1, 1, r13 * Rational(2)) +
                  c.d2(2, 2, r23 * Rational(2)) + c.d2(0, 1, r13 + r12 - r23) +
                  c.d2(0, 2, r23 + r12 - r13) + c.d2(1, 2, r13 + r23 - r12);
  DiffOp first = c.d1(0, r12 * (Rational(4) * a + b + cc)) + c.d1(1, r13 * (Rational(4) * b + a + cc)) +
                 c.d1(2, r23 * (Rational(4) * cc + a + b)) + c.d1(0, (r13 - r23) * (b - cc)) +
                 c.d1(1, (r12 - r23) * (a - cc)) + c.d1(2, (r12 - r13) * (a - b));
  DiffOp lower = c.d1(0, c.k(1)) + c.d1(1, c.k(1)) + c.d1(2, c.k(1));
  return (Rational(-2) / m) * second + w * first + (Rational(-2 * p.d) / m) * lower;
}

DiffOp h_isotropic(const Params& p) {
  const Ctx c(p.kind);
  const Rational m = p.m[0].value;
  const auto r12 = c.x(0), r13 = c.x(1), r23 = c.x(2);
  DiffOp second = c.d2(0, 0, r12 * Rational(2)) + c.d2(1, 1, r13 * Rational(2)) +
                  c.d2(2, 2, r23 * Rational(2)) + c.d2(0, 1, r13 + r12 - r23) +
                  c.d2(0, 2, r23 + r12 - r13) + c.d2(1, 2, r13 + r23 - r12);
  DiffOp euler = c.d1(0, r12) + c.d1(1, r13) + c.d1(2, r23);
  DiffOp lower = c.d1(0, c.k(1)) + c.d1(1, c.k(1)) + c.d1(2, c.k(1));
  return (Rational(-2) / m) * second + (Rational(6) * p.a * p.omega) * euler +
         (Rational(-2 * p.d) / m) * lower;
}

DiffOp h_atomic(const Params& p) {
  const Ctx c(p.kind);
  const Rational m = p.case_mass();
  const Rational &a = p.a, &b = p.b, &cc = p.c, &w = p.omega;
  const auto r12 = c.x(0), r13 = c.x(1), r23 = c.x(2);
  DiffOp second = c.d2(0, 0, r12) + c.d2(1, 1, r13) + c.d2(2, 2, r23 * Rational(2)) +
                  c.d2(0, 2, r23 + r12 - r13) + c.d2(1, 2, r13 + r23 - r12);
  DiffOp first = c.d1(0, r12 * (Rational(4) * a + cc)) + c.d1(1, r13 * (Rational(4) * b + cc)) +
                 c.d1(2, r23 * (Rational(2) * (Rational(2) * cc + a + b))) -
                 c.d1(0, (r13 - r23) * cc) - c.d1(1, (r12 - r23) * cc) +
                 c.d1(2, (r12 - r13) * (Rational(2) * (a - b)));
  DiffOp lower = c.d1(0, c.k(1)) + c.d1(1, c.k(1)) + c.d1(2, c.k(2));
  return (Rational(-2) / m) * second + w * first + (Rational(-p.d) / m) * lower;
}

DiffOp h_molecular(const Params& p) {
  const Ctx c(p.kind);
  const Rational m = p.case_mass();
  const Rational &a = p.a, &b = p.b, &w = p.omega;
  const auto r12 = c.x(0), r13 = c.x(1), r23 = c.x(2);
  DiffOp second = c.d2(0, 0, r12) + c.d2(1, 1, r13) + c.d2(0, 1, r13 + r12 - r23);
  DiffOp first = c.d1(0, r12 * (Rational(2) * a + b)) + c.d1(1, r13 * (Rational(2) * b + a)) +
                 c.d1(0, (r13 - r23) * b) + c.d1(1, (r12 - r23) * a);
  DiffOp lower = c.d1(0, c.k(1)) + c.d1(1, c.k(1));
  return (Rational(-2) / m) * second + (Rational(2) * w) * first + (Rational(-p.d) / m) * lower;
}

DiffOp h_onedim(const Params& p) {
  const Ctx c(p.kind);
  const auto M = finite_masses(p);
  const Rational &a = p.a, &b = p.b, &cc = p.c, &w = p.omega;
  const auto x12 = c.x(0), x13 = c.x(1);
  DiffOp op = c.d2(0, 0, c.k(Rational(-1) / (Rational(2) * M.mu12))) +
              c.d2(1, 1, c.k(Rational(-1) / (Rational(2) * M.mu13))) +
              c.d2(0, 1, c.k(Rational(-1) / M.m1));
  MultiPoly f1 = (x12 * (a * M.m1) + x13 * (b * M.mu13)) * M.mu12 +
                 (x12 - x13) * (cc * M.mu23 * (M.m1 - M.mu12));
  MultiPoly f2 = (x12 * (a * M.mu12) + x13 * (b * M.m1)) * M.mu13 +
                 (x13 - x12) * (cc * M.mu23 * (M.m1 - M.mu13));
  op += c.d1(0, f1 * (Rational(2) * w / (M.mu12 * M.m1)));
  op += c.d1(1, f2 * (Rational(2) * w / (M.mu13 * M.m1)));
  return op;
}

DiffOp h_two_body(const Params& p) {
  const Ctx c(p.kind);
  const Rational mu = two_body_mu(p);
  const Rational A = two_body_A(p);
  const auto r = c.x(0);
  DiffOp op = c.d2(0, 0, r * (Rational(-2) / mu));
  op += c.d1(0, r * (Rational(4) * p.omega) + r.pow(2) * (Rational(8) * mu * A) - Rational(p.d) / mu);
  op += c.mul(r * (Rational(-8 * p.N) * mu * A));
  return op;
}

DiffOp h_primitive(const Params& p) {
  const Ctx c(p.kind);
  const Cometric g = cometric(p);
  DiffOp op = h_general(p);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) op += c.d1(i, g.matrix[i][j] * c.x(j) * (Rational(4) * p.A3[j]));
  return op;
}

DiffOp lie_general(const Params& p) {
  const Ctx c(p.kind);
  const auto M = finite_masses(p);
  const Rational &a = p.a, &b = p.b, &cc = p.c, &w = p.omega;
  const Rational d(p.d);
  auto J0 = [&](int i, int j) { return c.J0(i - 1, j - 1); };
  auto Jm = [&](int i) { return c.Jm(i - 1); };
  DiffOp quad = (Rational(1) / M.mu12) * compose(J0(1, 1), Jm(1)) +
                (Rational(1) / M.mu13) * compose(J0(2, 2), Jm(2)) +
                (Rational(1) / M.mu23) * compose(J0(3, 3), Jm(3)) +
                (Rational(1) / M.m1) *
                    (compose(J0(2, 2), Jm(1)) + compose(J0(1, 1), Jm(2)) - compose(J0(3, 1), Jm(2))) +
                (Rational(1) / M.m2) *
                    (compose(J0(3, 3), Jm(1)) + compose(J0(1, 1), Jm(3)) - compose(J0(2, 3), Jm(1))) +
                (Rational(1) / M.m3) *
                    (compose(J0(2, 2), Jm(3)) + compose(J0(3, 3), Jm(2)) - compose(J0(1, 2), Jm(3)));
  const Rational P = a * M.mu12 * M.m3, Q = b * M.mu13 * M.m2, R = cc * M.mu23 * M.m1;
  DiffOp l1 = (Rational(2) * a * M.m1 * M.m2 + Q + R) * J0(1, 1) + (Q - R) * (J0(2, 1) - J0(3, 1));
  DiffOp l2 = (Rational(2) * b * M.m1 * M.m3 + P + R) * J0(2, 2) + (P - R) * (J0(1, 2) - J0(3, 2));
  DiffOp l3 = (Rational(2) * cc * M.m2 * M.m3 + P + Q) * J0(3, 3) + (P - Q) * (J0(1, 3) - J0(2, 3));
  DiffOp low = (Rational(1) / M.mu12) * Jm(1) + (Rational(1) / M.mu13) * Jm(2) +
               (Rational(1) / M.mu23) * Jm(3);
  return Rational(-2) * quad + (Rational(2) * M.mu12 * w / (M.mu12 * M.m1 * M.m2)) * l1 +
         (Rational(2) * M.mu13 * w / (M.mu13 * M.m1 * M.m3)) * l2 +
         (Rational(2) * M.mu23 * w / (M.mu23 * M.m2 * M.m3)) * l3 - d * low;
}

DiffOp lie_equal_quadratic(const Ctx& c) {
  auto J0 = [&](int i, int j) { return c.J0(i - 1, j - 1); };
  auto Jm = [&](int i) { return c.Jm(i - 1); };
  return Rational(2) * (compose(J0(1, 1), Jm(1)) + compose(J0(2, 2), Jm(2)) + compose(J0(3, 3), Jm(3))) +
         compose(J0(2, 2), Jm(1)) + compose(J0(1, 1), Jm(2)) - compose(J0(3, 1), Jm(2)) +
         compose(J0(3, 3), Jm(1)) + compose(J0(1, 1), Jm(3)) - compose(J0(2, 3), Jm(1)) +
         compose(J0(2, 2), Jm(3)) + compose(J0(3, 3), Jm(2)) - compose(J0(1, 2), Jm(3));
}

DiffOp lie_equal_mass(const Params& p) {
  const Ctx c(p.kind);
  const Rational m = p.m[0].value;
  const Rational &a = p.a, &b = p.b, &cc = p.c;
  auto J0 = [&](int i, int j) { return c.J0(i - 1, j - 1); };
  DiffOp lin = (Rational(4) * a + b + cc) * J0(1, 1) + (Rational(4) * b + a + cc) * J0(2, 2) +
               (Rational(4) * cc + a + b) * J0(3, 3) + (a - cc) * J0(1, 2) + (a - b) * J0(1, 3) +
               (b - a) * J0(2, 3) + (b - cc) * J0(2, 1) + (cc - a) * J0(3, 2) + (cc - b) * J0(3, 1);
  DiffOp low = c.Jm(0) + c.Jm(1) + c.Jm(2);
  return (Rational(-2) / m) * lie_equal_quadratic(c) + p.omega * lin + (Rational(-2 * p.d) / m) * low;
}

DiffOp lie_isotropic(const Params& p) {
  const Ctx c(p.kind);
  const Rational m = p.m[0].value;
  DiffOp lin = c.J0(0, 0) + c.J0(1, 1) + c.J0(2, 2);
  DiffOp low = c.Jm(0) + c.Jm(1) + c.Jm(2);
  return (Rational(-2) / m) * lie_equal_quadratic(c) + (Rational(6) * p.a * p.omega) * lin +
         (Rational(-2 * p.d) / m) * low;
}

DiffOp lie_atomic(const Params& p) {
  const Ctx c(p.kind);
  const Rational m = p.case_mass();
  const Rational &a = p.a, &b = p.b, &cc = p.c;
  auto J0 = [&](int i, int j) { return c.J0(i - 1, j - 1); };
  auto Jm = [&](int i) { return c.Jm(i - 1); };
  DiffOp quad = compose(J0(1, 1), Jm(1)) + compose(J0(2, 2), Jm(2)) +
                Rational(2) * compose(J0(3, 3), Jm(3)) + compose(J0(3, 3), Jm(1)) +
                compose(J0(1, 1), Jm(3)) - compose(J0(2, 3), Jm(1)) + compose(J0(2, 2), Jm(3)) +
                compose(J0(3, 3), Jm(2)) - compose(J0(1, 2), Jm(3));
  DiffOp lin = (Rational(2) * a) * (Rational(2) * J0(1, 1) + J0(1, 3) + J0(3, 3) - J0(2, 3)) +
               (Rational(2) * b) * (Rational(2) * J0(2, 2) + J0(2, 3) + J0(3, 3) - J0(1, 3)) +
               cc * (Rational(4) * J0(3, 3) + J0(2, 2) + J0(3, 2) - J0(1, 2) + J0(1, 1) + J0(3, 1) -
                     J0(2, 1));
  DiffOp low = Jm(1) + Jm(2) + Rational(2) * Jm(3);
  return (Rational(-2) / m) * quad + p.omega * lin + (Rational(-p.d) / m) * low;
}

DiffOp lie_molecular(const Params& p) {
  const Ctx c(p.kind);
  const Rational m = p.case_mass();
  const Rational &a = p.a, &b = p.b;
  const auto r23 = c.x(2);
  auto J0 = [&](int i, int j) { return c.J0(i - 1, j - 1); };
  auto Jm = [&](int i) { return c.Jm(i - 1); };
  DiffOp quad = compose(J0(1, 1), Jm(1)) + compose(J0(2, 2), Jm(2)) + compose(J0(2, 2), Jm(1)) +
                compose(J0(1, 1), Jm(2)) - r23 * compose(Jm(1), Jm(2));
  DiffOp lin = (Rational(2) * a + b) * J0(1, 1) + (Rational(2) * b + a) * J0(2, 2) +
               b * (J0(2, 1) - r23 * Jm(1)) + a * (J0(1, 2) - r23 * Jm(2));
  return (Rational(-2) / m) * quad + (Rational(2) * p.omega) * lin +
         (Rational(-p.d) / m) * (Jm(1) + Jm(2));
}

DiffOp lie_onedim(const Params& p) {
  const Ctx c(p.kind);
  const auto M = finite_masses(p);
  const Rational &a = p.a, &b = p.b, &cc = p.c, &w = p.omega;
  auto J0 = [&](int i, int j) { return c.J0(i - 1, j - 1); };
  auto Jm = [&](int i) { return c.Jm(i - 1); };
  DiffOp op = (Rational(-1) / (Rational(2) * M.mu12)) * compose(Jm(1), Jm(1)) +
              (Rational(-1) / (Rational(2) * M.mu13)) * compose(Jm(2), Jm(2)) +
              (Rational(-1) / M.m1) * compose(Jm(1), Jm(2));
  DiffOp l1 = M.mu12 * (a * M.m1 * J0(1, 1) + b * M.mu13 * J0(2, 1)) +
              (cc * M.mu23 * (M.m1 - M.mu12)) * (J0(1, 1) - J0(2, 1));
  DiffOp l2 = M.mu13 * (a * M.mu12 * J0(1, 2) + b * M.m1 * J0(2, 2)) +
              (cc * M.mu23 * (M.m1 - M.mu13)) * (J0(2, 2) - J0(1, 2));
  return op + (Rational(2) * w / (M.mu12 * M.m1)) * l1 + (Rational(2) * w / (M.mu13 * M.m1)) * l2;
}

DiffOp lie_two_body(const Params& p) {
  const Ctx c(p.kind);
  const Rational mu = two_body_mu(p);
  const Rational A = two_body_A(p);
  const Rational N(p.N);
  const DiffOp J0 = gen::J0N(c.vars, N, c.nd);
  const DiffOp Jm = c.Jm(0);
  const DiffOp Jp = gen::Jplus(c.vars, 0, N, c.nd);
  return (Rational(-2) / mu) * compose(J0, Jm) + (-(Rational(2) * N + Rational(p.d)) / mu) * Jm +
         (Rational(8) * mu * A) * Jp + (Rational(4) * p.omega) * J0 +
         c.mul(c.k(Rational(4) * N * p.omega));
}

}  // namespace

DiffOp build_radial_laplacian(const Params& p) {
  validate(p);
  const Ctx c(p.kind);
  if (is_general_family(p.kind)) return laplacian_general(p);
  const auto r0 = c.x(0);
  switch (p.kind) {
    case Case::Atomic3: {
      const Rational m = p.case_mass();
      const auto r12 = c.x(0), r13 = c.x(1), r23 = c.x(2);
      DiffOp second = c.d2(0, 0, r12) + c.d2(1, 1, r13) + c.d2(2, 2, r23 * Rational(2)) +
                      c.d2(0, 2, r23 + r12 - r13) + c.d2(1, 2, r13 + r23 - r12);
      DiffOp first = c.d1(0, c.k(1)) + c.d1(1, c.k(1)) + c.d1(2, c.k(2));
      return (Rational(2) / m) * second + (Rational(p.d) / m) * first;
    }
    case Case::Molecular3: {
      const Rational m = p.case_mass();
      const auto r12 = c.x(0), r13 = c.x(1), r23 = c.x(2);
      DiffOp inner = c.d2(0, 0, r12) + c.d2(1, 1, r13) + c.d2(0, 1, r13 + r12 - r23) +
                     Rational(p.d, 2) * (c.d1(0, c.k(1)) + c.d1(1, c.k(1)));
      return (Rational(2) / m) * inner;
    }
    case Case::OneDim3: {
      const auto M = finite_masses(p);
      return c.d2(0, 0, c.k(Rational(1) / (Rational(2) * M.mu12))) +
             c.d2(1, 1, c.k(Rational(1) / (Rational(2) * M.mu13))) +
             c.d2(0, 1, c.k(Rational(1) / M.m1));
    }
    case Case::TwoBodyES:
    case Case::TwoBodyQES: {
      const Rational mu = two_body_mu(p);
      return (Rational(1) / mu) * (c.d2(0, 0, r0 * Rational(2)) + c.d1(0, c.k(p.d)));
    }
    default:
      break;
  }
  throw DomainError("build_radial_laplacian: unsupported case");
}

MultiPoly build_potential(const Params& p) {
  validate(p);
  const Ctx c(p.kind);
  const Rational w2 = p.omega * p.omega;
  switch (p.kind) {
    case Case::General3:
      return potential_general(p);
    case Case::Primitive3QES:
      return potential_general(p) + primitive_tilde_potential(p);
    case Case::EqualMass3: {
      const Rational m = p.m[0].value;
      const Rational &a = p.a, &b = p.b, &cc = p.c;
      return (c.x(0) * (Rational(2) * a * a + a * (b + cc) - b * cc) +
              c.x(1) * (Rational(2) * b * b + b * (a + cc) - a * cc) +
              c.x(2) * (Rational(2) * cc * cc + cc * (a + b) - a * b)) *
             (m * w2 / Rational(2));
    }
    case Case::Isotropic3: {
      const Rational m = p.m[0].value;
      return (c.x(0) + c.x(1) + c.x(2)) * (Rational(3, 2) * m * p.a * p.a * w2);
    }
    case Case::Atomic3: {
      const Rational m = p.case_mass();
      const Rational &a = p.a, &b = p.b, &cc = p.c;
      return (c.x(0) * (Rational(2) * a * a + a * cc - b * cc) +
              c.x(1) * (Rational(2) * b * b + b * cc - a * cc) + c.x(2) * (cc * (a + b + cc))) *
             (m * w2);
    }
    case Case::Molecular3: {
      const Rational m = p.case_mass();
      return (c.x(0) * p.a + c.x(1) * p.b) * (Rational(2) * m * w2 * (p.a + p.b));
    }
    case Case::OneDim3: {
      const auto nu = nu_coefficients(p);
      const auto x12 = c.x(0), x13 = c.x(1);
      return (x12.pow(2) * (nu.nu12 + nu.nu23) + x13.pow(2) * (nu.nu13 + nu.nu23) -
              x12 * x13 * (Rational(2) * nu.nu23)) *
             (Rational(2) * w2);
    }
    case Case::TwoBodyES:
      return c.x(0) * (Rational(2) * two_body_mu(p) * w2);
    case Case::TwoBodyQES: {
      const Rational mu = two_body_mu(p);
      const Rational& A = p.A;
      const auto r = c.x(0);
      return (r * (w2 - A * Rational(4 * p.N + p.d + 2)) + r.pow(2) * (Rational(4) * mu * A * p.omega) +
              r.pow(3) * (Rational(4) * mu * mu * A * A)) *
             (Rational(2) * mu);
    }
  }
  throw DomainError("build_potential: unsupported case");
}

DiffOp build_hamiltonian(const Params& p) {
  return -build_radial_laplacian(p) + DiffOp::multiply(build_potential(p), case_nderiv(p.kind));
}

GroundState ground_state(const Params& p) {
  validate(p);
  const Ctx c(p.kind);
  const Rational& w = p.omega;
  const Rational d(p.d);
  switch (p.kind) {
    case Case::General3:
      return {GaussFn::exp(ground_exponent_general(p)), c.k(w * d * (p.a + p.b + p.c))};
    case Case::Primitive3QES:
      return {GaussFn::exp(ground_exponent_general(p) + primitive_extra_exponent(p)),
              c.k(w * d * (p.a + p.b + p.c))};
    case Case::EqualMass3: {
      const Rational m = p.m[0].value;
      return {GaussFn::exp((c.x(0) * p.a + c.x(1) * p.b + c.x(2) * p.c) * (-w * m / Rational(2))),
              c.k(w * d * (p.a + p.b + p.c))};
    }
    case Case::Isotropic3: {
      const Rational m = p.m[0].value;
      return {GaussFn::exp((c.x(0) + c.x(1) + c.x(2)) * (-w * m * p.a / Rational(2))),
              c.k(Rational(3) * w * d * p.a)};
    }
    case Case::Atomic3: {
      const Rational m = p.case_mass();
      return {GaussFn::exp((c.x(0) * (Rational(2) * p.a) + c.x(1) * (Rational(2) * p.b) + c.x(2) * p.c) *
                           (-w * m / Rational(2))),
              c.k(w * d * (p.a + p.b + p.c))};
    }
    case Case::Molecular3: {
      const Rational m = p.case_mass();
      return {GaussFn::exp((c.x(0) * p.a + c.x(1) * p.b) * (-w * m)),
              c.k(w * d * (p.a + p.b)) + c.x(2) * (Rational(2) * m * w * w * p.a * p.b)};
    }
    case Case::OneDim3: {
      const auto M = finite_masses(p);
      const auto x12 = c.x(0), x13 = c.x(1);
      return {GaussFn::exp((x12.pow(2) * (p.a * M.mu12) + x13.pow(2) * (p.b * M.mu13) +
                            (x13 - x12).pow(2) * (p.c * M.mu23)) *
                           (-w)),
              c.k(w * (p.a + p.b + p.c))};
    }
    case Case::TwoBodyES:
    case Case::TwoBodyQES: {
      const Rational mu = two_body_mu(p);
      const auto r = c.x(0);
      return {GaussFn::exp(r * (-mu * w) - r.pow(2) * (mu * mu * two_body_A(p))), c.k(d * w)};
    }
  }
  throw DomainError("ground_state: unsupported case");
}

DiffOp build_h_algebraic(const Params& p) {
  validate(p);
  switch (p.kind) {
    case Case::General3:
      return h_general(p);
    case Case::EqualMass3:
      return h_equal_mass(p);
    case Case::Isotropic3:
      return h_isotropic(p);
    case Case::Atomic3:
      return h_atomic(p);
    case Case::Molecular3:
      return h_molecular(p);
    case Case::OneDim3:
      return h_onedim(p);
    case Case::TwoBodyES:
    case Case::TwoBodyQES:
      return h_two_body(p);
    case Case::Primitive3QES:
      return h_primitive(p);
  }
  throw DomainError("build_h_algebraic: unsupported case");
}

DiffOp lie_form(const Params& p) {
  validate(p);
  switch (p.kind) {
    case Case::General3:
      return lie_general(p);
    case Case::EqualMass3:
      return lie_equal_mass(p);
    case Case::Isotropic3:
      return lie_isotropic(p);
    case Case::Atomic3:
      return lie_atomic(p);
    case Case::Molecular3:
      return lie_molecular(p);
    case Case::OneDim3:
      return lie_onedim(p);
    case Case::TwoBodyES:
    case Case::TwoBodyQES:
      return lie_two_body(p);
    case Case::Primitive3QES:
      throw DomainError("primitive QES operator has no Lie-algebraic form");
  }
  throw DomainError("lie_form: unsupported case");
}

}  // namespace fewbody
