#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cohn/cycle.hpp"
#include "cohn/poly.hpp"
#include "cohn/tuple.hpp"

namespace cohn {

struct CensusFilter {
  bool nilpotent = false;
  bool per_stratum = false;
  std::vector<MultiPoly> relations;

  // "all", or the active filters joined by '+': "nilpotent+strata+relations".
  std::string name() const;
};

struct CensusRequest {
  std::size_t n = 1;
  std::size_t d = 1;
  std::uint64_t q = 2;
  CensusFilter filter;
  // Upper bound on q^(d n^2).
  mpz_class budget = mpz_class(1) << 32;
  CycleOptions cycle;
};

struct CensusResult {
  mpz_class raw_count;
  mpz_class gl_order;
  mpq_class groupoid_count;
  std::optional<std::map<Partition, mpz_class>> per_stratum;
  mpz_class unsplit_count;
};

// prod_{i<n} (q^n - q^i).
mpz_class gl_order(std::size_t n, std::uint64_t q);

// Throws NONPRIME_Q or BUDGET_EXCEEDED.
CensusResult enumerate(const CensusRequest& req);

struct OrbitRecord {
  CommutingTuple representative;  // smallest member in the base-q encoding
  mpz_class orbit_size;
  mpz_class aut_order;
  bool nilpotent = false;
};

// Orbit decomposition of C(n,d)(F_q) under simultaneous conjugation.
// Verifies orbit_size * aut_order = |GL_n| and that the nilpotent and
// relation filters are constant on each orbit.
std::vector<OrbitRecord> orbit_census(const CensusRequest& req);

}  // namespace cohn
