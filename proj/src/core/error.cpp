#include "specmult/error.hpp"

namespace specmult {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::UnknownRelation: return "UnknownRelation";
    case ErrorKind::UnknownConvolution: return "UnknownConvolution";
    case ErrorKind::InfiniteExpansion: return "InfiniteExpansion";
    case ErrorKind::UnknownPowerRule: return "UnknownPowerRule";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::EmptyType: return "EmptyType";
    case ErrorKind::NoSaturationRule: return "NoSaturationRule";
    case ErrorKind::DisjointnessViolation: return "DisjointnessViolation";
    case ErrorKind::InvalidMultiplicityFunction: return "InvalidMultiplicityFunction";
    case ErrorKind::EmptyInterval: return "EmptyInterval";
    case ErrorKind::SearchBoundExceeded: return "SearchBoundExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::DepthTooLarge: return "DepthTooLarge";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

bool is_refusal(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::Parse:
    case ErrorKind::EmptySet:
    case ErrorKind::EmptyInterval:
    case ErrorKind::InvalidMultiplicityFunction:
      return false;
    default:
      return true;
  }
}

void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(error_kind_name(kind)) + ": " + what);
}

}  // namespace specmult
