#pragma once

// Complete search over spanning-path choices for any clique size. Serves as
// the reference every other solver is checked against.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "c2p/model.hpp"

namespace c2p {

/// Two unremovable edges (link edges or the edge of a size-2 part) cross.
struct Infeasible {
  CrossingPair witness{};

  friend bool operator==(const Infeasible&, const Infeasible&) = default;
};

/// Clique edges that every solution must remove because they cross an
/// unremovable edge. Ascending ids.
struct ForbiddenSet {
  std::vector<EdgeId> edges;

  friend bool operator==(const ForbiddenSet&, const ForbiddenSet&) = default;
};

/// Infeasible names the first offending crossing in crossing order.
std::variant<ForbiddenSet, Infeasible> preprocess(const Instance& inst);

/// First solution found by backtracking with forward checking. Parts are
/// picked by fewest remaining paths (ties to the lower index), values in
/// canonical path order. nullopt iff no solution exists.
std::optional<Solution> solve_exact(const Instance& inst);

inline constexpr std::uint64_t kDefaultSolutionCap = 1'000'000;

struct Enumeration {
  std::vector<Solution> solutions;
  bool cap_exceeded = false;
};

/// All solutions, at most `cap`, in lexicographic order of per-part path
/// indices (parts ascending). cap_exceeded is set when more exist.
Enumeration enumerate_solutions(const Instance& inst, std::uint64_t cap = kDefaultSolutionCap);

struct SolutionCount {
  std::uint64_t count = 0;
  bool cap_exceeded = false;
};

SolutionCount count_solutions(const Instance& inst, std::uint64_t cap = kDefaultSolutionCap);

}  // namespace c2p
