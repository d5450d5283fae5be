#pragma once

#include <stdexcept>
#include <string>

namespace cyclicity {

// One code per failure mode surfaced by the public API.
enum class ErrorCode {
  // construction / generators
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  NonpositiveWeight,
  SizeTooSmall,
  SizeTooLarge,
  InvalidJump,
  NotPrime,
  NotCongruentOneModFour,
  InvalidParams,
  GiveUp,
  // structural preconditions
  Disconnected,
  WeightedInput,
  AlreadyAdjacent,
  SameVertex,
  NotSpanningSubgraph,
  ComplementDisconnected,
  NotRegular,
  // numerics
  SingularSystem,
  DegeneratePerturbation,
  // input / persistence
  ParseError,
  CorruptRun,
};

// Coarse grouping; doubles as the CLI process exit code.
enum class ErrorCategory { Parse = 1, Precondition = 2, Numeric = 3 };

const char* name(ErrorCode code) noexcept;
ErrorCategory category(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return cyclicity::category(code_); }

 private:
  ErrorCode code_;
};

}  // namespace cyclicity
