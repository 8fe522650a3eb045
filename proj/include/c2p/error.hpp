#pragma once

#include <stdexcept>
#include <string>

namespace c2p {

enum class ErrorCode {
  // instance invariants
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  AdjacentCrossing,
  DuplicateCrossing,
  UnknownEdgeInCrossing,
  PartitionNotCovering,
  CliqueIncomplete,
  // operation preconditions
  PartTooSmall,
  TooLarge,
  ForeignPart,
  HTooLarge,
  NotOnePlane,
  InvalidAssignment,
  // reduction
  InvalidFormula,
  EmptyFormula,
  EvenChain,
  NotOneInThree,
  InconsistentGadget,
  // generator
  ParamConflict,
  Underconstrained,
  // text formats
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

/// True for errors caused by an input that violates a structural invariant
/// (as opposed to malformed syntax or an unsupported request).
bool is_invariant_violation(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace c2p
