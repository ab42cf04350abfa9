#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frl {

enum class ErrorKind {
  EmptyInput,
  OutOfAmbient,
  OverlappingAmbients,
  DegenerateComplement,
  DegenerateDual,
  UnknownVertex,
  NotPure,
  NotAntichain,
  DimensionTooSmall,
  BadParameters,
  BudgetExceeded,
  ParseError,
  UnknownTheorem,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::OutOfAmbient: return "OutOfAmbient";
    case ErrorKind::OverlappingAmbients: return "OverlappingAmbients";
    case ErrorKind::DegenerateComplement: return "DegenerateComplement";
    case ErrorKind::DegenerateDual: return "DegenerateDual";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::NotAntichain: return "NotAntichain";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownTheorem: return "UnknownTheorem";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported through this type.
/// `kind()` is stable and meant for dispatch; `what()` is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace frl
