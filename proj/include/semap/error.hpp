#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semap {

// Every domain failure raised by the library carries one of these codes. The
// CLI prints the code name, so names are part of the external interface.
enum class ErrorCode {
  ParseError,
  InvalidVertexId,
  FaceTooShort,
  RepeatedVertexInFace,
  EdgeDegreeNotTwo,
  NonPolyhedralIntersection,
  PinchedVertex,
  Disconnected,
  UnsupportedSurface,
  SizeTooSmall,
  DegreeTooSmall,
  NonPositiveDefect,
  NonIntegerCount,
  MaxGonTooSmall,
  WrongShape,
  MultiEdgeDetected,
  NotEligibleSquare,
  PropagationConflict,
  UnknownName,
  NTooSmall,
  NonPolyhedralQuotient,
  NotFreeInvolution,
  AlreadySpherical,
  NotSemiEquivelar,
  WrongSphere,
  ClassificationViolation,
  CountMismatch,
  TooLarge,
  ConvergenceFailure,
  InternalError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace semap
