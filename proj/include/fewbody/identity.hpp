#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fewbody/multipoly.hpp"
#include "fewbody/rationalfn.hpp"

namespace fewbody {

/// Seeded source of random positive rationals p/q with p, q in [lo, hi].
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, long lo = 1, long hi = 1000)
      : gen_(seed), lo_(lo), hi_(hi) {}
  Rational next();
  long next_int(long lo, long hi);
  std::vector<Rational> point(int dim);

 private:
  std::mt19937_64 gen_;
  long lo_, hi_;
};

using Point = std::vector<Rational>;

/// Draws `count` points of dimension `dim`, rejecting any point where one of
/// `avoid` vanishes. Throws SamplingError after 100 consecutive rejections.
std::vector<Point> sample_points(int dim, int count, std::uint64_t seed,
                                 const std::vector<MultiPoly>& avoid = {});

inline constexpr int kMinIdentityPoints = 25;

bool identity_test(const MultiPoly& f, const MultiPoly& g, const std::vector<Point>& points);
bool identity_test(const RationalFn& f, const RationalFn& g, const std::vector<Point>& points);

/// Samples its own points (avoiding both denominators) from `seed`.
bool identity_test(const RationalFn& f, const RationalFn& g, std::uint64_t seed,
                   int count = kMinIdentityPoints);
bool identity_test(const MultiPoly& f, const MultiPoly& g, std::uint64_t seed,
                   int count = kMinIdentityPoints);

}  // namespace fewbody
