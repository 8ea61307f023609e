#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graphca {

enum class ErrorCode {
  InvalidGraph,
  InvalidConnectionSet,
  SizeLimitExceeded,
  InvalidFactor,
  IndexOutOfRange,
  NotConnected,
  InternalFactorizationError,
  NotPrimePower,
  InvalidAlphabet,
  NotAGroup,
  LengthMismatch,
  NotBound,
  InvalidSymbol,
  InvalidInputCA,
  InvalidColoring,
  InvalidAutomorphism,
  NotBipartite,
  PreconditionFailed,
  ConstructionFailed,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidConnectionSet: return "InvalidConnectionSet";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::InvalidFactor: return "InvalidFactor";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::InternalFactorizationError: return "InternalFactorizationError";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::InvalidAlphabet: return "InvalidAlphabet";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotBound: return "NotBound";
    case ErrorCode::InvalidSymbol: return "InvalidSymbol";
    case ErrorCode::InvalidInputCA: return "InvalidInputCA";
    case ErrorCode::InvalidColoring: return "InvalidColoring";
    case ErrorCode::InvalidAutomorphism: return "InvalidAutomorphism";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can branch on the error class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace graphca
