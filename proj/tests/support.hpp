#pragma once

#include <random>

#include "exceptia/hypercomplex.hpp"

namespace testing_support {

using namespace exceptia;

// Fixed seed so failures reproduce.
inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed1995);
  return g;
}

inline long uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

// Small rationals p/q with |p| <= 9, 1 <= q <= 4.
inline Rational small_rational() { return Rational(BigInt(uniform(-9, 9)), BigInt(uniform(1, 4))); }

inline Golden small_golden() { return Golden(small_rational(), small_rational()); }

inline RatHyper random_rat_hyper(int level) {
  RatHyper x(level);
  for (std::size_t t = 0; t < x.size(); ++t) x[t] = small_rational();
  return x;
}

inline GoldHyper random_gold_hyper(int level) {
  GoldHyper x(level);
  for (std::size_t t = 0; t < x.size(); ++t) x[t] = small_golden();
  return x;
}

}  // namespace testing_support
