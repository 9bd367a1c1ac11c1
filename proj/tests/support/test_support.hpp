#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "ksphere/config.hpp"
#include "ksphere/exact_matrix.hpp"

namespace testing_support {

// KSPHERE_SEED overrides the fixed default so a failing run can be replayed.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("KSPHERE_SEED"); s && *s) return std::strtoull(s, nullptr, 10);
  return ksphere::Config{}.seed;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(seed());
  return g;
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline ksphere::DyadicGaussian random_dyadic(int bound = 9, int max_shift = 3) {
  return ksphere::DyadicGaussian(uniform_int(-bound, bound), uniform_int(-bound, bound), uniform_int(0, max_shift));
}

inline ksphere::ExactMatrix random_matrix(std::size_t n, int bound = 9, int max_shift = 3) {
  ksphere::ExactMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_dyadic(bound, max_shift);
  return m;
}

// Random signed permutation matrix, entries in {0, ±1, ±i} when `phases`.
inline ksphere::ExactMatrix random_signed_permutation(std::size_t n, bool phases = false) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng());
  ksphere::ExactMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    ksphere::DyadicGaussian s = uniform_int(0, 1) ? 1 : -1;
    if (phases && uniform_int(0, 1)) s = s.times_i();
    m(i, p[i]) = s;
  }
  return m;
}

inline std::vector<double> random_sphere_point(int d) {
  std::normal_distribution<double> g;
  std::vector<double> x(static_cast<std::size_t>(d + 1));
  double r = 0;
  do {
    r = 0;
    for (auto& v : x) {
      v = g(rng());
      r += v * v;
    }
  } while (r < 1e-6);
  r = std::sqrt(r);
  for (auto& v : x) v /= r;
  return x;
}

}  // namespace testing_support
