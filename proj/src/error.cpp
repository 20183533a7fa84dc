#include "dsu2/error.hpp"

namespace dsu2 {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::IllegalPromotion: return "IllegalPromotion";
    case ErrorKind::ClosureError: return "ClosureError";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::NoSolutionInAnsatz: return "NoSolutionInAnsatz";
    case ErrorKind::DegenerateWeight: return "DegenerateWeight";
    case ErrorKind::UnsupportedCoefficient: return "UnsupportedCoefficient";
    case ErrorKind::UnsupportedRootClass: return "UnsupportedRootClass";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::MissingParam: return "MissingParam";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::StepBudgetExceeded: return "StepBudgetExceeded";
  }
  return "Unknown";
}

}  // namespace dsu2
