#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "cohn/quot.hpp"
#include "cohn/tuple.hpp"

namespace cohn {

// On-disk module format (UTF-8 JSON):
//   {"field": "Q" | "Fp:<p>", "n": N, "d": D,
//    "matrices": D arrays of N rows of N scalar strings,
//    "frame": optional, r arrays of N scalar strings,
//    "name": optional string, "description": optional string}
struct ModuleDocument {
  Field field = Field::rationals();
  std::size_t n = 0;
  std::size_t d = 1;
  std::vector<Matrix> matrices;
  std::optional<std::vector<Vector>> frame;
  std::optional<std::string> name;
  std::optional<std::string> description;

  friend bool operator==(const ModuleDocument&, const ModuleDocument&) = default;
};

// Structural parse: JSON syntax, keys, types, shapes and scalar syntax.
// Throws PARSE_ERROR (detail carries line/column when the JSON itself is
// malformed) or VALIDATION_ERROR for shape problems. Commutation is not checked.
ModuleDocument parse_document(std::string_view text);
// Canonical text: fixed key order, one matrix per line, reduced scalars.
std::string emit_document(const ModuleDocument& doc);

// Throws VALIDATION_ERROR wrapping the underlying module error.
CommutingTuple document_tuple(const ModuleDocument& doc);
// Requires a frame; throws VALIDATION_ERROR.
FramedModule document_framed(const ModuleDocument& doc);

ModuleDocument make_document(const CommutingTuple& t);
ModuleDocument make_document(const FramedModule& f);

struct RunConfig {
  std::uint64_t seed = 0;
  std::size_t genericity_budget = 32;
  std::size_t grid_budget = 8;
  mpz_class census_budget = mpz_class(1) << 32;
};

// Keys: seed, genericity_budget, grid_budget, census_budget (all optional).
RunConfig parse_config(std::string_view text);
nlohmann::json config_json(const RunConfig& cfg);

// Polynomials such as "x1^2 - 3/2*x2*x3 + 1" or, for d <= 3, in x, y, z.
// Throws PARSE_ERROR.
MultiPoly parse_multipoly(Field f, std::size_t variables, std::string_view text);

// Comma-separated scalars, e.g. "1,-1/2".
std::vector<Scalar> parse_scalar_list(Field f, std::string_view text);

}  // namespace cohn
