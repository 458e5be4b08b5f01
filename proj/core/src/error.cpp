#include "legknot/error.hpp"

namespace legknot {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::MarkerCollision: return "MarkerCollision";
    case Errc::TooSmall: return "TooSmall";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::ArcMultiplicity: return "ArcMultiplicity";
    case Errc::OrientationConflict: return "OrientationConflict";
    case Errc::LetterOutOfRange: return "LetterOutOfRange";
    case Errc::VariableMismatch: return "VariableMismatch";
    case Errc::DegreeOfZero: return "DegreeOfZero";
    case Errc::NonRealResult: return "NonRealResult";
    case Errc::EmptyTable: return "EmptyTable";
    case Errc::FieldUnsupported: return "FieldUnsupported";
    case Errc::Overflow: return "Overflow";
    case Errc::CrossingLimitExceeded: return "CrossingLimitExceeded";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::FingerprintMismatch: return "FingerprintMismatch";
    case Errc::InconsistentRecord: return "InconsistentRecord";
    case Errc::NotAKnot: return "NotAKnot";
    case Errc::UnknownKnot: return "UnknownKnot";
    case Errc::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace legknot
