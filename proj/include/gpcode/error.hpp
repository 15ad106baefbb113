#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpcode {

/// Named failure kinds. Every precondition a module checks maps to one of
/// these so the CLI can report it and pick an exit code.
enum class ErrorKind {
  NotPrime,
  FieldTooLarge,
  InvalidElement,
  NotADivisor,
  DirectedGraph,
  NotConnected,
  TooLargeForOracle,
  BudgetExceeded,
  BridgeHypothesisFailed,
  NonIntegralWeight,
  EmptyBase,
  DivisibilityFailed,
  NotSemiprimitive,
  NotPrimitiveDivisor,
  NoSolution,
  PreconditionFailed,
  HypothesesFailed,
  CacheError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gpcode
