#pragma once

#include <stdexcept>
#include <string>

namespace gkz {

// Machine-readable error codes, surfaced verbatim by the CLI.
enum class ErrorCode {
  duplicate_points,
  not_full_dimensional,
  not_affinely_generating,
  resonant_parameter,
  index_out_of_range,
  parse_error,
  scale_guard,
  internal,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::duplicate_points: return "DuplicatePoints";
    case ErrorCode::not_full_dimensional: return "NotFullDimensional";
    case ErrorCode::not_affinely_generating: return "NotAffinelyGenerating";
    case ErrorCode::resonant_parameter: return "ResonantParameter";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::scale_guard: return "ScaleGuardExceeded";
    case ErrorCode::internal: return "InternalError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gkz
