#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cohn/cycle.hpp"
#include "cohn/tuple.hpp"

namespace cohn {

// Hom(source, target) as matrices h (n_t x n_s) with h A_i^s = A_i^t h.
struct HomSpace {
  CommutingTuple source;
  CommutingTuple target;
  std::vector<Matrix> basis;

  std::size_t dim() const noexcept { return basis.size(); }
};

HomSpace hom_basis(const CommutingTuple& s, const CommutingTuple& t);

struct IsomOptions {
  // Full deterministic grid only while dim Hom <= grid_budget.
  std::size_t grid_budget = 8;
  // Seeded trials tried before the grid; all that is tried beyond the budget.
  std::size_t pre_grid_trials = 16;
  std::size_t random_trials = 1024;
  std::uint64_t seed = 0;
  CycleOptions cycle;
};

// A certificate g with g * s * g^-1 = t, or nullopt when the modules are not
// isomorphic. Never answers nullopt without a completed grid scan or a sound
// invariant mismatch; throws GRID_BUDGET_EXCEEDED instead.
std::optional<GroupElement> is_isomorphic(const CommutingTuple& s, const CommutingTuple& t,
                                          const IsomOptions& opts = {});

std::size_t aut_dim(const CommutingTuple& t);

// n - rank [A_1 | ... | A_d] = dim M / mM. Throws NOT_PUNCTUAL.
std::size_t min_generators(const CommutingTuple& t);

}  // namespace cohn
