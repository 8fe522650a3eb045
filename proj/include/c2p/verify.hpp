#pragma once

#include <vector>

#include "c2p/model.hpp"

namespace c2p {

enum class ViolationKind { NotAPath, UnresolvedCrossing, MissingChoice };

struct Violation {
  ViolationKind kind = ViolationKind::NotAPath;
  PartId part = 0;                  // NotAPath, MissingChoice
  CrossingPair crossing{};          // UnresolvedCrossing

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyResult {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
};

/// Checks that every part of size >= 2 is replaced by a spanning path and no
/// two kept edges cross. All violations are reported: missing and malformed
/// choices first (by part), then unresolved crossings (by crossing order).
/// Crossings touching a part without a well-formed path are not reported.
/// Throws ForeignPart when a choice names a part the instance does not have.
VerifyResult verify_solution(const Instance& inst, const Solution& sol);

/// Clique edges not on their part's path, ascending. Link edges and the edge
/// of a size-2 part are never removed. Parts without a choice contribute
/// nothing.
std::vector<EdgeId> removed_edges(const Instance& inst, const Solution& sol);

/// Per-edge kept flags for a solution; parts lacking a well-formed path keep
/// all their edges.
std::vector<bool> kept_edges(const Instance& inst, const Solution& sol);

}  // namespace c2p
