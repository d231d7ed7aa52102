#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sclat {

enum class ErrorKind {
  NonMonotoneDim,
  NotAPartialOrder,
  InvalidInput,
  AmbientMismatch,
  SizeLimit,
  GeneratorNotInLattice,
  NotASubstructure,
  NotPrimitive,
  InvalidSignature,
  NotPrimitiveExtension,
  NotWayBelow,
  HasZeroDimComponent,
  NotInjective,
  NotLatticeMap,
  PreconditionViolated,
  SaturationBudgetExceeded,
  ParseError,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonMonotoneDim: return "NonMonotoneDim";
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::GeneratorNotInLattice: return "GeneratorNotInLattice";
    case ErrorKind::NotASubstructure: return "NotASubstructure";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::InvalidSignature: return "InvalidSignature";
    case ErrorKind::NotPrimitiveExtension: return "NotPrimitiveExtension";
    case ErrorKind::NotWayBelow: return "NotWayBelow";
    case ErrorKind::HasZeroDimComponent: return "HasZeroDimComponent";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::NotLatticeMap: return "NotLatticeMap";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::SaturationBudgetExceeded: return "SaturationBudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Domain error raised by every public operation of the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a runtime-verified postcondition does not hold. Seeing one of
/// these means either the code or the underlying mathematical claim is wrong.
class PostconditionFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool cond, const char* what) {
  if (!cond) throw PostconditionFailure(what);
}

}  // namespace sclat
