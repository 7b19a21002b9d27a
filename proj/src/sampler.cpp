#include "cohn/sampler.hpp"

#include "cohn/linalg.hpp"

namespace cohn {

Scalar random_scalar(Field f, Rng& rng, long range) {
  if (f.is_rational()) return Scalar(f, rng.between(-range, range));
  return Scalar(f, static_cast<long>(rng.below(f.characteristic())));
}

Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, Rng& rng, long range) {
  Matrix m(f, rows, cols);
  for (auto& e : m.entries()) e = random_scalar(f, rng, range);
  return m;
}

GroupElement random_invertible(Field f, std::size_t n, Rng& rng, long range) {
  for (;;) {
    Matrix g = random_matrix(f, n, n, rng, range);
    if (is_invertible(g)) return GroupElement(std::move(g));
  }
}

std::pair<GroupElement, CommutingTuple> random_conjugate(const CommutingTuple& t, Rng& rng) {
  GroupElement g = random_invertible(t.field(), t.n(), rng);
  CommutingTuple c = conjugate(t, g);
  return {std::move(g), std::move(c)};
}

}  // namespace cohn
