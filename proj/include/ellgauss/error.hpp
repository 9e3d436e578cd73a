#pragma once

#include <stdexcept>
#include <string>

namespace ellgauss {

enum class ErrorKind {
  NotSplit,
  NotPrimary,
  InternalInconsistency,
  ZeroMultiplier,
  LatticePoint,
  PoleHit,
  PrecisionExhausted,
  UnsupportedResidueClass,
  MembershipViolation,
  DenominatorDivisible,
  BadReduction,
  UnsupportedStep,
  InvalidArgument,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::NotPrimary: return "NotPrimary";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::ZeroMultiplier: return "ZeroMultiplier";
    case ErrorKind::LatticePoint: return "LatticePoint";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::UnsupportedResidueClass: return "UnsupportedResidueClass";
    case ErrorKind::MembershipViolation: return "MembershipViolation";
    case ErrorKind::DenominatorDivisible: return "DenominatorDivisible";
    case ErrorKind::BadReduction: return "BadReduction";
    case ErrorKind::UnsupportedStep: return "UnsupportedStep";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace ellgauss
