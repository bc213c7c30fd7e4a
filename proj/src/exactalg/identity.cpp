#include "fewbody/identity.hpp"

#include <limits>

namespace fewbody {

long RationalSampler::next_int(long lo, long hi) {
  // Rejection sampling keeps the stream identical across standard libraries.
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

Rational RationalSampler::next() {
  const long p = next_int(lo_, hi_);
  const long q = next_int(lo_, hi_);
  return Rational(p, q);
}

std::vector<Rational> RationalSampler::point(int dim) {
  std::vector<Rational> pt;
  pt.reserve(dim);
  for (int i = 0; i < dim; ++i) pt.push_back(next());
  return pt;
}

std::vector<Point> sample_points(int dim, int count, std::uint64_t seed,
                                 const std::vector<MultiPoly>& avoid) {
  RationalSampler rs(seed);
  std::vector<Point> pts;
  int retries = 0;
  while (static_cast<int>(pts.size()) < count) {
    Point pt = rs.point(dim);
    bool ok = true;
    for (const auto& d : avoid)
      if (d.eval(pt).is_zero()) ok = false;
    if (ok) {
      pts.push_back(std::move(pt));
      retries = 0;
    } else if (++retries > 100) {
      throw SamplingError("sample_points: denominator vanished on 100 consecutive draws");
    }
  }
  return pts;
}

bool identity_test(const MultiPoly& f, const MultiPoly& g, const std::vector<Point>& points) {
  require_same_vars(f.vars(), g.vars(), "identity_test");
  if (static_cast<int>(points.size()) < kMinIdentityPoints)
    throw std::invalid_argument("identity_test: at least 25 points required");
  for (const auto& pt : points)
    if (f.eval(pt) != g.eval(pt)) return false;
  return true;
}

bool identity_test(const RationalFn& f, const RationalFn& g, const std::vector<Point>& points) {
  require_same_vars(f.vars(), g.vars(), "identity_test");
  if (static_cast<int>(points.size()) < kMinIdentityPoints)
    throw std::invalid_argument("identity_test: at least 25 points required");
  for (const auto& pt : points)
    if (f.eval(pt) != g.eval(pt)) return false;
  return true;
}

bool identity_test(const RationalFn& f, const RationalFn& g, std::uint64_t seed, int count) {
  auto pts = sample_points(static_cast<int>(f.vars().size()), count, seed, {f.den(), g.den()});
  return identity_test(f, g, pts);
}

bool identity_test(const MultiPoly& f, const MultiPoly& g, std::uint64_t seed, int count) {
  auto pts = sample_points(f.nvars(), count, seed);
  return identity_test(f, g, pts);
}

}  // namespace fewbody
