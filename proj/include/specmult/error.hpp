#pragma once

#include <stdexcept>
#include <string>

namespace specmult {

// Every failure mode of the library. The C API maps these one-to-one onto
// smult_status codes, so the numbering is part of the ABI.
enum class ErrorKind {
  InvalidArgument = 1,
  Parse,
  UnknownRelation,
  UnknownConvolution,
  InfiniteExpansion,
  UnknownPowerRule,
  EmptySet,
  EmptyType,
  NoSaturationRule,
  DisjointnessViolation,
  InvalidMultiplicityFunction,
  EmptyInterval,
  SearchBoundExceeded,
  BudgetExceeded,
  OutOfRange,
  InsufficientData,
  DepthTooLarge,
  Overflow,
};

const char* error_kind_name(ErrorKind kind) noexcept;

// True for the kinds the CLI reports as a computation refusal (exit code 2)
// rather than a usage error.
bool is_refusal(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace specmult
