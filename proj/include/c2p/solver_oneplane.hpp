#pragma once

// Linear-time solver for 1-plane instances. In a 1-plane drawing, cliques
// whose edges cross each other form groups of at most two cliques, and a
// clique with five or more vertices crosses no other clique. Each group is
// therefore decided by a constant-size exhaustive search; crossings with
// link edges only force removals inside one clique.

#include <optional>
#include <vector>

#include "c2p/model.hpp"

namespace c2p {

/// Parts joined by crossings between clique edges of different parts.
struct CrossComponent {
  std::vector<PartId> parts;  // ascending
  /// Set when the group cannot come from a simple 1-plane drawing: more than
  /// two parts, a part of size >= 5 crossing another part, or a part with an
  /// internal crossing combined with another part.
  bool unrealizable = false;
};

/// First edge with more than one crossing, or nullopt if the instance is 1-plane.
std::optional<EdgeId> one_plane_violation(const Instance& inst);

/// Every part in exactly one component; components ordered by smallest part.
std::vector<CrossComponent> crossing_components(const Instance& inst);

enum class OnePlaneStatus { Feasible, Infeasible, NotOnePlane };

struct OnePlaneResult {
  OnePlaneStatus status = OnePlaneStatus::Infeasible;
  std::optional<Solution> solution;
  /// First edge with two or more crossings when status is NotOnePlane.
  std::optional<EdgeId> offending_edge;
  /// Indices into crossing_components() of groups flagged as not realizable.
  std::vector<std::size_t> flagged_components;

  bool has_unrealizable() const { return !flagged_components.empty(); }
};

OnePlaneResult solve_one_plane(const Instance& inst);

}  // namespace c2p
