#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "cohn/tuple.hpp"

namespace cohn {

struct ClosedPoint {
  std::vector<Scalar> coords;

  friend bool operator==(const ClosedPoint& a, const ClosedPoint& b) { return a.coords == b.coords; }
  friend std::strong_ordering operator<=>(const ClosedPoint& a, const ClosedPoint& b);
};

struct CycleEntry {
  ClosedPoint point;
  std::size_t multiplicity = 0;

  friend bool operator==(const CycleEntry&, const CycleEntry&) = default;
};

// A 0-cycle sum m_p * p in canonical form: distinct points, sorted
// lexicographically, positive multiplicities.
class Cycle {
 public:
  Cycle() = default;
  // Merges repeated points, drops zero multiplicities and sorts.
  static Cycle from_entries(std::vector<CycleEntry> entries);

  const std::vector<CycleEntry>& entries() const noexcept { return entries_; }
  std::size_t degree() const noexcept;
  Cycle shifted(const std::vector<Scalar>& by) const;

  friend Cycle operator+(const Cycle& a, const Cycle& b);
  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::vector<CycleEntry> entries_;
};

// alpha[i-1] = number of support points of multiplicity i, for i = 1..n.
struct Partition {
  std::vector<std::size_t> alpha;

  std::size_t weight() const noexcept;
  // "(1^2 2^1 3^1)"; "()" for the empty partition.
  std::string notation() const;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

struct CycleOptions {
  std::size_t genericity_budget = 32;
};

enum class SupportStatus { Split, NotSplit, GenericityExhausted };

struct SupportOutcome {
  SupportStatus status = SupportStatus::Split;
  Cycle cycle;
  std::vector<std::size_t> unsplit_degrees;  // set when NotSplit
};

// The separating-form sequence: unit vectors, then (1, k, k^2, ...) for k = 1, 2, ...
std::vector<std::vector<Scalar>> separating_candidates(Field f, std::size_t d, std::size_t budget);

// Non-throwing support computation.
SupportOutcome try_cycle(const CommutingTuple& t, const CycleOptions& opts = {});
// Throws NOT_SPLIT or GENERICITY_EXHAUSTED.
Cycle cycle(const CommutingTuple& t, const CycleOptions& opts = {});

Partition stratum(const Cycle& c);

struct LocalSummand {
  ClosedPoint point;
  CommutingTuple block;  // the restriction of t to the generalized eigenspace

  // block translated by -point; punctual.
  CommutingTuple recentered() const;
};

struct Localization {
  GroupElement change_of_basis;  // g with g*t*g^-1 = direct sum of the blocks
  std::vector<LocalSummand> summands;  // in cycle order
};

Localization localize(const CommutingTuple& t, const CycleOptions& opts = {});

// det(f(A_1, ..., A_d)).
Scalar det_pushforward(const MultiPoly& f, const CommutingTuple& t);

}  // namespace cohn
