#pragma once

#include <stdexcept>
#include <string>

namespace topo {

/// Machine-readable failure categories raised by the public entry points.
enum class Errc {
  EmptyCarrier,
  CarrierTooLarge,
  PointOutOfRange,
  CarrierMismatch,
  MissingEmptyOrFull,
  NotClosedUnderUnion,
  NotClosedUnderIntersection,
  MissingEmpty,
  NotDownClosed,
  NotUnionClosed,
  InternalInvariantViolation,
  NonStabilization,
  BoundTooLarge,
  IoError,
  SyntaxError,
  UnknownField,
  MissingField,
  TypeMismatch,
  FormatVersionMismatch,
  UnknownLabel,
  DuplicateLabel,
  UsageError,
};

const char* errc_name(Errc code) noexcept;

/// Exception carrying an Errc alongside the human-readable message.
/// what() is "<code name>: <message>".
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace topo
