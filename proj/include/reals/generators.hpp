// Seeded deterministic generators shared by the verification suites.
#pragma once

#include "reals/rational.hpp"

#include <cstdint>
#include <random>

namespace reals {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class RationalGen {
public:
  explicit RationalGen(std::uint64_t seed, long max_num = 10000, long max_den = 60)
      : rng_(seed), num_(-max_num, max_num), den_(1, max_den), pick_(0, 3) {}

  // Mixed population: about a quarter of the draws terminate in base 10, so
  // both representatives of an equivalence class get exercised.
  Rational next() {
    long n = num_(rng_);
    if (pick_(rng_) == 0) {
      static const long finite_dens[] = {1, 2, 4, 5, 8, 10, 16, 20, 25, 40, 50, 100};
      return Rational(n, finite_dens[rng_() % (sizeof(finite_dens) / sizeof(long))]);
    }
    return Rational(n, den_(rng_));
  }

  Rational next_nonzero() {
    for (;;) {
      Rational r = next();
      if (!r.is_zero()) return r;
    }
  }

  std::uint64_t raw() { return rng_(); }

private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long> num_;
  std::uniform_int_distribution<long> den_;
  std::uniform_int_distribution<int> pick_;
};

}  // namespace reals
