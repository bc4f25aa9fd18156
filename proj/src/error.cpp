#include "cozo/error.hpp"

namespace cozo {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::CONFIG_INVALID: return "CONFIG_INVALID";
    case ErrorCode::WINDOW_SIZE_INVALID: return "WINDOW_SIZE_INVALID";
    case ErrorCode::IO_ERROR: return "IO_ERROR";
    case ErrorCode::PARSE_ERROR: return "PARSE_ERROR";
    case ErrorCode::UNBALANCED_MARKERS: return "UNBALANCED_MARKERS";
    case ErrorCode::UNKNOWN_ACTOR: return "UNKNOWN_ACTOR";
    case ErrorCode::GOLD_EMPTY: return "GOLD_EMPTY";
    case ErrorCode::DENOMINATOR_ZERO: return "DENOMINATOR_ZERO";
    case ErrorCode::NO_GOLD_ANAPHORS: return "NO_GOLD_ANAPHORS";
    case ErrorCode::INVALID_ARGUMENT: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace cozo
