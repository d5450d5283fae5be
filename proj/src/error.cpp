#include "cyclicity/error.hpp"

namespace cyclicity {

const char* name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::InvalidJump: return "InvalidJump";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotCongruentOneModFour: return "NotCongruentOneModFour";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::GiveUp: return "GiveUp";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::WeightedInput: return "WeightedInput";
    case ErrorCode::AlreadyAdjacent: return "AlreadyAdjacent";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::NotSpanningSubgraph: return "NotSpanningSubgraph";
    case ErrorCode::ComplementDisconnected: return "ComplementDisconnected";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::DegeneratePerturbation: return "DegeneratePerturbation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CorruptRun: return "CorruptRun";
  }
  return "UnknownError";
}

ErrorCategory category(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::CorruptRun:
      return ErrorCategory::Parse;
    case ErrorCode::SingularSystem:
    case ErrorCode::DegeneratePerturbation:
      return ErrorCategory::Numeric;
    default:
      return ErrorCategory::Precondition;
  }
}

}  // namespace cyclicity
