#include "c2p/error.hpp"

namespace c2p {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::AdjacentCrossing: return "AdjacentCrossing";
    case ErrorCode::DuplicateCrossing: return "DuplicateCrossing";
    case ErrorCode::UnknownEdgeInCrossing: return "UnknownEdgeInCrossing";
    case ErrorCode::PartitionNotCovering: return "PartitionNotCovering";
    case ErrorCode::CliqueIncomplete: return "CliqueIncomplete";
    case ErrorCode::PartTooSmall: return "PartTooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ForeignPart: return "ForeignPart";
    case ErrorCode::HTooLarge: return "HTooLarge";
    case ErrorCode::NotOnePlane: return "NotOnePlane";
    case ErrorCode::InvalidAssignment: return "InvalidAssignment";
    case ErrorCode::InvalidFormula: return "InvalidFormula";
    case ErrorCode::EmptyFormula: return "EmptyFormula";
    case ErrorCode::EvenChain: return "EvenChain";
    case ErrorCode::NotOneInThree: return "NotOneInThree";
    case ErrorCode::InconsistentGadget: return "InconsistentGadget";
    case ErrorCode::ParamConflict: return "ParamConflict";
    case ErrorCode::Underconstrained: return "Underconstrained";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

bool is_invariant_violation(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::VertexOutOfRange:
    case ErrorCode::SelfLoop:
    case ErrorCode::DuplicateEdge:
    case ErrorCode::AdjacentCrossing:
    case ErrorCode::DuplicateCrossing:
    case ErrorCode::UnknownEdgeInCrossing:
    case ErrorCode::PartitionNotCovering:
    case ErrorCode::CliqueIncomplete:
    case ErrorCode::ForeignPart:
    case ErrorCode::InvalidFormula:
    case ErrorCode::InconsistentGadget:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace c2p
