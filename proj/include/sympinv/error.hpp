#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sympinv {

enum class ErrorCode {
  DivisionByZeroJet,
  DomainError,
  BasepointMismatch,
  SingularLinearPart,
  OrderExhausted,
  OrderMismatch,
  SyntaxError,
  UnknownFunction,
  ArityError,
  UnboundVariable,
  DegreeError,
  GraphDegeneracy,
  NonGenericSample,
  FrameDegeneracy,
  DegenerateJet,
  NormalizationSingular,
  StepDegenerate,
  LagrangianTangent,
  DegenerateQ1,
  SigmaDegenerate,
  WeightNormalizationSingular,
  OnZeroLevelSet,
  AllSamplesDegenerate,
  IncomparableClouds,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library carries a code so callers (and the CLI
// exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, std::size_t offset, const std::string& what)
      : Error(code, what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Geometric degeneracy with a short machine-readable reason ("tangent-through-origin", ...).
class DegenerateError : public Error {
 public:
  DegenerateError(ErrorCode code, std::string reason)
      : Error(code, reason), reason_(std::move(reason)) {}

  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

}  // namespace sympinv
