#pragma once

#include <stdexcept>
#include <string>

namespace cozo {

enum class ErrorCode {
  CONFIG_INVALID,
  WINDOW_SIZE_INVALID,
  IO_ERROR,
  PARSE_ERROR,
  UNBALANCED_MARKERS,
  UNKNOWN_ACTOR,
  GOLD_EMPTY,
  DENOMINATOR_ZERO,
  NO_GOLD_ANAPHORS,
  INVALID_ARGUMENT,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a stable error code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cozo
