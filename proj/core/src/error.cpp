#include "algebrarium/error.hpp"

namespace algebrarium {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::EmptyChain: return "EmptyChain";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ResampleExhausted: return "ResampleExhausted";
    case ErrorCode::UnsupportedMode: return "UnsupportedMode";
    case ErrorCode::EmptyRecord: return "EmptyRecord";
    case ErrorCode::ProfileMismatch: return "ProfileMismatch";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::IdMismatch: return "IdMismatch";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::DataFormat: return "DataFormat";
  }
  return "Unknown";
}

}  // namespace algebrarium
