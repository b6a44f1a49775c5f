#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace koszul {

enum class ErrorCode {
  ParseError,
  InvalidArgument,
  DimensionMismatch,
  SingularMatrix,
  CapacityExceeded,
  DegenerateRelations,
  WrongN,
  NotPBW,
  NotFrobenius,
  NotFrobeniusDual,
  InvalidAlgebra,
  NotAugmented,
  BaseNotCY,
  NotGorensteinCandidate,
  DeformationIncompatible,
  NotCompatible,
  AutomorphismCheckFailed,
  PotentialCheckFailed,
};

// Coarse classes used for process exit codes.
enum class ErrorClass { Parse = 1, Precondition = 2, Capacity = 3, Inconsistency = 4 };

std::string_view to_string(ErrorCode code);
ErrorClass classify(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what);

  ErrorCode code() const noexcept { return code_; }
  ErrorClass error_class() const noexcept { return classify(code_); }
  /// what() without the code prefix.
  std::string const& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

[[noreturn]] void fail(ErrorCode code, std::string const& message);

}  // namespace koszul
