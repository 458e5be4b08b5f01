#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace legknot {

enum class Errc {
  // construction / parsing
  NotAPermutation,
  MarkerCollision,
  TooSmall,
  SyntaxError,
  ArcMultiplicity,
  OrientationConflict,
  LetterOutOfRange,
  // algebra
  VariableMismatch,
  DegreeOfZero,
  NonRealResult,
  EmptyTable,
  FieldUnsupported,
  Overflow,
  // resource limits
  CrossingLimitExceeded,
  BudgetExceeded,
  // data consistency
  FingerprintMismatch,
  InconsistentRecord,
  NotAKnot,
  UnknownKnot,
  // command line
  UsageError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace legknot
