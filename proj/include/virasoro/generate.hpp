#pragma once

#include "virasoro/delta.hpp"

#include <cstdint>

namespace virasoro {

/// Deterministic splitmix64 stream. Randomized checks derive every choice
/// from this so a (seed, window) pair fully determines a run on any platform.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t x = (state_ += 0x9e3779b97f4a7c15ULL);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

 private:
  std::uint64_t state_;
};

inline Rational random_rational(SplitMix& rng, int max_abs_numerator = 9,
                                int max_denominator = 4) {
  const int num = rng.range(-max_abs_numerator, max_abs_numerator);
  const int den = rng.range(1, max_denominator);
  return make_rational(num, den);
}

inline CentralScalar random_scalar(SplitMix& rng, int max_c_degree = 1) {
  CentralScalar result(random_rational(rng));
  if (max_c_degree >= 1 && rng.below(2) == 0) {
    result += CentralScalar::c().scaled(random_rational(rng));
  }
  return result;
}

inline LaurentPoly random_laurent(SplitMix& rng, Var variable, int max_abs_exponent,
                                  int max_terms = 3, int max_c_degree = 0) {
  LaurentPoly result(variable);
  const int terms = rng.range(0, max_terms);
  for (int i = 0; i < terms; ++i) {
    result.add_term(rng.range(-max_abs_exponent, max_abs_exponent),
                    random_scalar(rng, max_c_degree));
  }
  return result;
}

inline DeltaExpansion random_delta_expansion(SplitMix& rng, int max_j,
                                             int max_abs_exponent) {
  DeltaExpansion result;
  for (int j = 0; j <= max_j; ++j) {
    if (rng.below(3) != 0) {
      result.add_term(j, random_laurent(rng, Var::w, max_abs_exponent));
    }
  }
  return result;
}

/// Random series holomorphic in z (non-negative z-exponents only).
inline BiSeries random_holomorphic(SplitMix& rng, Window window, int max_terms = 4) {
  BiSeries result(window);
  const int bound = window.bound();
  const int terms = rng.range(1, max_terms);
  for (int i = 0; i < terms; ++i) {
    result.add_term(rng.range(0, bound), rng.range(-bound, bound),
                    random_scalar(rng, 0));
  }
  return result;
}

}  // namespace virasoro
