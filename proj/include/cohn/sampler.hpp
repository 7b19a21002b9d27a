#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "cohn/tuple.hpp"

namespace cohn {

// Seeded generator with a platform-independent bounded draw (the standard
// distributions are implementation-defined, mt19937_64 output is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform-ish draw in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  // Draw in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 engine_;
};

// Over Q: an integer in [-range, range]; over F_p: a uniform residue.
Scalar random_scalar(Field f, Rng& rng, long range = 3);
Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, Rng& rng, long range = 3);
GroupElement random_invertible(Field f, std::size_t n, Rng& rng, long range = 3);
// (g, g * t * g^-1) for a fresh random g.
std::pair<GroupElement, CommutingTuple> random_conjugate(const CommutingTuple& t, Rng& rng);

}  // namespace cohn
