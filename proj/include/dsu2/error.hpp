#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dsu2 {

enum class ErrorKind {
  DivisionByZero,
  IllegalPromotion,
  ClosureError,
  NotPolynomial,
  ZeroPolynomial,
  DimensionMismatch,
  NotDiagonal,
  Inconsistent,
  NoSolutionInAnsatz,
  DegenerateWeight,
  UnsupportedCoefficient,
  UnsupportedRootClass,
  UnknownPreset,
  MissingParam,
  InvalidSpec,
  Parse,
  StepBudgetExceeded,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind so the
/// CLI can map it onto its JSON error body.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dsu2
