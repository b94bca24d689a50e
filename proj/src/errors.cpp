#include "frob/errors.hpp"

namespace frob {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::NotMPrimary: return "NotMPrimary";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotGorenstein: return "NotGorenstein";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::SOPNotFound: return "SOPNotFound";
    case ErrorKind::ChainExhausted: return "ChainExhausted";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::NotFPure: return "NotFPure";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::NotHypersurface: return "NotHypersurface";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

ErrorClass classify(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownVariable:
    case ErrorKind::NonPrimeModulus:
    case ErrorKind::Io:
    case ErrorKind::InvalidArgument:
    case ErrorKind::RingMismatch:
      return ErrorClass::Input;
    case ErrorKind::BudgetExceeded:
      return ErrorClass::Budget;
    case ErrorKind::IdentityViolation:
      return ErrorClass::Internal;
    default:
      return ErrorClass::Hypothesis;
  }
}

}  // namespace frob
