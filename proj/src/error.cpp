#include "cohn/error.hpp"

namespace cohn {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MixedFields: return "MIXED_FIELDS";
    case ErrorCode::NotSquare: return "NOT_SQUARE";
    case ErrorCode::ZeroPoly: return "ZERO_POLY";
    case ErrorCode::ArityMismatch: return "ARITY_MISMATCH";
    case ErrorCode::SizeMismatch: return "SIZE_MISMATCH";
    case ErrorCode::NotCommuting: return "NOT_COMMUTING";
    case ErrorCode::SingularG: return "SINGULAR_G";
    case ErrorCode::NotYoungDiagram: return "NOT_YOUNG_DIAGRAM";
    case ErrorCode::NotMonic: return "NOT_MONIC";
    case ErrorCode::NotSplit: return "NOT_SPLIT";
    case ErrorCode::GenericityExhausted: return "GENERICITY_EXHAUSTED";
    case ErrorCode::GridBudgetExceeded: return "GRID_BUDGET_EXCEEDED";
    case ErrorCode::NotPunctual: return "NOT_PUNCTUAL";
    case ErrorCode::NotSurjective: return "NOT_SURJECTIVE";
    case ErrorCode::WrongFrameCount: return "WRONG_FRAME_COUNT";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::NonprimeQ: return "NONPRIME_Q";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::ValidationError: return "VALIDATION_ERROR";
  }
  return "UNKNOWN";
}

bool is_usage_error(ErrorCode code) noexcept { return code == ErrorCode::ParseError; }

}  // namespace cohn
