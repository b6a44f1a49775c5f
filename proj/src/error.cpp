#include "koszul/error.hpp"

namespace koszul {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::DegenerateRelations: return "DegenerateRelations";
    case ErrorCode::WrongN: return "WrongN";
    case ErrorCode::NotPBW: return "NotPBW";
    case ErrorCode::NotFrobenius: return "NotFrobenius";
    case ErrorCode::NotFrobeniusDual: return "NotFrobeniusDual";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::NotAugmented: return "NotAugmented";
    case ErrorCode::BaseNotCY: return "BaseNotCY";
    case ErrorCode::NotGorensteinCandidate: return "NotGorensteinCandidate";
    case ErrorCode::DeformationIncompatible: return "DeformationIncompatible";
    case ErrorCode::NotCompatible: return "NotCompatible";
    case ErrorCode::AutomorphismCheckFailed: return "AutomorphismCheckFailed";
    case ErrorCode::PotentialCheckFailed: return "PotentialCheckFailed";
  }
  return "Unknown";
}

ErrorClass classify(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return ErrorClass::Parse;
    case ErrorCode::CapacityExceeded: return ErrorClass::Capacity;
    case ErrorCode::InvalidAlgebra:
    case ErrorCode::AutomorphismCheckFailed:
    case ErrorCode::PotentialCheckFailed: return ErrorClass::Inconsistency;
    default: return ErrorClass::Precondition;
  }
}

Error::Error(ErrorCode code, std::string const& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

void fail(ErrorCode code, std::string const& message) { throw Error(code, message); }

}  // namespace koszul
