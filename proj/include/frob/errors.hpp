#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frob {

enum class ErrorKind {
  RingMismatch,
  ExponentOverflow,
  BudgetExceeded,
  NotZeroDimensional,
  NotMPrimary,
  UnitIdeal,
  NotIrreducible,
  NotGorenstein,
  InsufficientSamples,
  SOPNotFound,
  ChainExhausted,
  IdentityViolation,
  NotFPure,
  HypothesisViolation,
  NotHypersurface,
  InvalidArgument,
  ParseError,
  UnknownVariable,
  NonPrimeModulus,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Coarse classes used by the CLI exit-code contract.
enum class ErrorClass { Input, Hypothesis, Budget, Internal };
ErrorClass classify(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace frob
