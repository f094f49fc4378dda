#pragma once

#include <cstdint>
#include <random>

#include "thomcalc/rational.hpp"

namespace thomcalc {

constexpr std::uint64_t kDefaultSeed = 20240611;

// 0 asks for a nondeterministic seed.
inline std::uint64_t resolve_seed(std::uint64_t seed) {
  if (seed != 0) return seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// Numerator in [-bound, bound], denominator in [1, bound].
inline Rational random_rational(std::mt19937_64& rng, int bound = 100) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace thomcalc
