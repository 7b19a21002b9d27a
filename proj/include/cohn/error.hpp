#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace cohn {

// The closed error taxonomy. Every failure a caller can observe carries one
// of these codes; anything else escaping the library is a bug.
enum class ErrorCode {
  MixedFields,
  NotSquare,
  ZeroPoly,
  ArityMismatch,
  SizeMismatch,
  NotCommuting,
  SingularG,
  NotYoungDiagram,
  NotMonic,
  NotSplit,
  GenericityExhausted,
  GridBudgetExceeded,
  NotPunctual,
  NotSurjective,
  WrongFrameCount,
  BudgetExceeded,
  NonprimeQ,
  ParseError,
  ValidationError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// True for codes that the CLI reports as usage/parse problems (exit 2)
// rather than domain errors (exit 1).
bool is_usage_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, nlohmann::json detail = nlohmann::json::object())
      : std::runtime_error(std::move(message)), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const nlohmann::json& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  nlohmann::json detail_;
};

[[noreturn]] inline void fail(ErrorCode code, std::string message,
                              nlohmann::json detail = nlohmann::json::object()) {
  throw Error(code, std::move(message), std::move(detail));
}

}  // namespace cohn
