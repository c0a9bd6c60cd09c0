#include "topo/error.hpp"

namespace topo {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyCarrier: return "EmptyCarrier";
    case Errc::CarrierTooLarge: return "CarrierTooLarge";
    case Errc::PointOutOfRange: return "PointOutOfRange";
    case Errc::CarrierMismatch: return "CarrierMismatch";
    case Errc::MissingEmptyOrFull: return "MissingEmptyOrFull";
    case Errc::NotClosedUnderUnion: return "NotClosedUnderUnion";
    case Errc::NotClosedUnderIntersection: return "NotClosedUnderIntersection";
    case Errc::MissingEmpty: return "MissingEmpty";
    case Errc::NotDownClosed: return "NotDownClosed";
    case Errc::NotUnionClosed: return "NotUnionClosed";
    case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
    case Errc::NonStabilization: return "NonStabilization";
    case Errc::BoundTooLarge: return "BoundTooLarge";
    case Errc::IoError: return "IoError";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownField: return "UnknownField";
    case Errc::MissingField: return "MissingField";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::FormatVersionMismatch: return "FormatVersionMismatch";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::UsageError: return "UsageError";
  }
  return "UnknownError";
}

}  // namespace topo
