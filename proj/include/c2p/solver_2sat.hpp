#pragma once

// Polynomial decision procedure for instances whose parts have at most three
// vertices. One boolean per triangle edge says "this edge is removed".
//
//   (!a | !b)  for two edges of the same triangle (at most one removed)
//   ( a |  b)  for crossing triangle edges of different parts
//   ( a )      for a triangle edge crossing an unremovable edge
//
// "Exactly one removed" is relaxed to "at most one": removing an edge only
// deletes crossings, so triangles left untouched get an arbitrary edge removed
// during extraction.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "c2p/model.hpp"
#include "c2p/solver_exact.hpp"

namespace c2p {

/// Literal over variable `var`; `negated` selects !var.
struct Literal {
  std::uint32_t var = 0;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Disjunction of one or two literals; a unit clause repeats its literal.
struct Clause2 {
  Literal a;
  Literal b;

  friend bool operator==(const Clause2&, const Clause2&) = default;
};

struct TwoSatInstance {
  std::size_t num_vars = 0;
  /// Edge encoded by each variable.
  std::vector<EdgeId> var_edge;
  std::vector<Clause2> clauses;
};

/// Throws HTooLarge when a part has more than three vertices.
std::variant<TwoSatInstance, Infeasible> build_2sat(const Instance& inst);

/// Satisfying assignment (indexed by variable) via strongly connected
/// components of the implication graph, or nullopt when unsatisfiable.
std::optional<std::vector<bool>> solve_2sat(const TwoSatInstance& sat);

/// Turns a satisfying assignment of build_2sat(inst) into a Solution. Throws
/// InvalidAssignment if a triangle has more than one edge marked removed or
/// the assignment has the wrong length.
Solution extract_solution_2sat(const Instance& inst, const TwoSatInstance& sat,
                               const std::vector<bool>& assignment);

/// build + solve + extract. nullopt iff infeasible.
std::optional<Solution> solve_via_2sat(const Instance& inst);

}  // namespace c2p
