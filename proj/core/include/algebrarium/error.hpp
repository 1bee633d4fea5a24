#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace algebrarium {

enum class ErrorCode {
  DomainMismatch,
  EmptyChain,
  ParseError,
  ConfigError,
  ResampleExhausted,
  UnsupportedMode,
  EmptyRecord,
  ProfileMismatch,
  DomainError,
  InsufficientData,
  DegenerateInput,
  IdMismatch,
  IoError,
  DataFormat,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; the code carries the failure class.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace algebrarium
