#pragma once

// Reduction from Positive 1-in-3-SAT to clique-to-path instances with cliques
// of size <= 4 whose drawing is 3-plane.
//
// Every triangle has a crossing-free base edge and two crossed edges, called
// left and right. With vertices a < b < c: base = (a,b), left = (b,c),
// right = (a,c).
//
//  * Variable x occurring in n_x clauses: ring triangles t_1..t_{2n_x}, where
//    left(t_i) crosses left(t_{i+1}) and right(t_i) crosses right(t_{i+1})
//    (indices cyclic), plus tau_1..tau_{n_x} with right(tau_j) crossing
//    left(t_{2j-1}) and right(t_{2j}), and left(tau_j) crossing left(t_{2j})
//    and right(t_{2j-1}). Every solution removes the same side from all tau;
//    right means True.
//  * Clause (x,y,z): a plane K4 with center v and rim v_x, v_y, v_z in this
//    cyclic order, plus one input triangle per variable. left(t(w)) crosses
//    the spoke (v,v_w) and the rim edge (v_w, v_next); right(t(w)) crosses the
//    rim edge (v_prev, v_w). The K4 can become a path iff exactly one input
//    has its right edge removed.
//  * Chain: an odd number of triangles joined left-to-left and right-to-right
//    from tau^x_j to the input triangle of the j-th clause containing x.
//    Consecutive triangles remove opposite sides, so odd length transfers
//    the side unchanged.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "c2p/model.hpp"

namespace c2p {

/// Positive 1-in-3-SAT formula; variables are 1-based.
struct Formula {
  std::size_t nvars = 0;
  std::vector<std::array<std::uint32_t, 3>> clauses;

  friend bool operator==(const Formula&, const Formula&) = default;
};

/// Throws InvalidFormula for out-of-range or repeated variables in a clause.
void validate_formula(const Formula& f);

struct Assignment {
  std::vector<bool> values;  // values[var - 1]

  bool value(std::uint32_t var) const { return values[var - 1]; }
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Every clause has exactly one true variable.
bool satisfies_one_in_three(const Formula& f, const Assignment& a);

enum class Side { Base, Left, Right };

struct TriHandle {
  PartId part = 0;
  EdgeId base = 0;
  EdgeId left = 0;
  EdgeId right = 0;

  EdgeId edge(Side s) const { return s == Side::Base ? base : s == Side::Left ? left : right; }
  friend bool operator==(const TriHandle&, const TriHandle&) = default;
};

struct VariableWitness {
  std::vector<TriHandle> ring;  // t_1..t_{2n}
  std::vector<TriHandle> tau;   // tau_1..tau_n

  friend bool operator==(const VariableWitness&, const VariableWitness&) = default;
};

struct ClauseWitness {
  PartId part = 0;
  VertexId center = 0;
  std::array<VertexId, 3> rim{};       // v_x, v_y, v_z in cyclic order
  std::array<EdgeId, 3> spokes{};      // (v, rim[i])
  std::array<EdgeId, 3> outer{};       // (rim[i], rim[i+1 mod 3])
  std::array<TriHandle, 3> inputs{};   // t_c(x), t_c(y), t_c(z)
  std::array<std::uint32_t, 3> vars{}; // 1-based; empty for a standalone gadget
  std::array<std::uint32_t, 3> occurrence{};  // j: this is the j-th clause of vars[i], 1-based
  /// chains[i] runs from tau^{vars[i]}_{occurrence[i]} to inputs[i].
  std::array<std::vector<TriHandle>, 3> chains;

  friend bool operator==(const ClauseWitness&, const ClauseWitness&) = default;
};

struct ReductionWitness {
  std::size_t nvars = 0;
  std::size_t chain_length = 1;
  std::vector<VariableWitness> variables;  // index var-1; empty for unused variables
  std::vector<ClauseWitness> clauses;

  friend bool operator==(const ReductionWitness&, const ReductionWitness&) = default;
};

/// Incremental construction of gadget instances. Clique edge ids are assigned
/// as parts are added and equal the ids of the built instance; link edges get
/// ids after all clique edges.
class InstanceBuilder {
 public:
  VertexId add_vertex();
  PartId add_part(std::vector<VertexId> vertices);
  TriHandle add_triangle();
  /// Id of the clique edge between two vertices of the same part.
  EdgeId clique_edge(VertexId a, VertexId b) const;
  const Edge& edge(EdgeId e) const { return clique_edges_[e]; }

  void cross(EdgeId a, EdgeId b);
  /// Adds a link edge between two fresh singleton parts crossing `e`, which
  /// forces `e` to be removed.
  void force_removed(EdgeId e);
  /// left-left and right-right crossings between two triangles.
  void join(const TriHandle& a, const TriHandle& b);

  std::size_t part_count() const { return parts_.size(); }
  Instance build() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<VertexId>> parts_;
  std::vector<Edge> clique_edges_;
  std::vector<Edge> links_;
  std::vector<std::pair<Edge, Edge>> crossings_;
};

VariableWitness append_variable_gadget(InstanceBuilder& b, std::size_t occurrences);
ClauseWitness append_clause_gadget(InstanceBuilder& b);
/// Throws EvenChain for even m unless allow_even is set (parity experiments).
std::vector<TriHandle> append_chain(InstanceBuilder& b, std::size_t m, bool allow_even = false);

struct VariableGadget {
  Instance instance;
  VariableWitness witness;
};
struct ClauseGadget {
  Instance instance;
  ClauseWitness witness;
};
struct ChainGadget {
  Instance instance;
  std::vector<TriHandle> triangles;
};

VariableGadget build_variable_gadget(std::size_t occurrences);
ClauseGadget build_clause_gadget();
ChainGadget build_chain(std::size_t m, bool allow_even = false);

struct Reduction {
  Instance instance;
  ReductionWitness witness;
};

/// Throws EmptyFormula without clauses, EvenChain for even chain_length.
/// Variables that occur in no clause get no gadget.
Reduction reduce_formula(const Formula& f, std::size_t chain_length = 1);

/// Side removed from a triangle by a solution (the pair of path endpoints).
Side removed_side(const Instance& inst, const Solution& sol, const TriHandle& t);

/// x is True iff the right edge of every tau^x_j is removed. Throws
/// InconsistentGadget when the tau triangles of a variable disagree or remove
/// their base. Unused variables are False.
Assignment extract_assignment(const Instance& inst, const ReductionWitness& w, const Solution& sol);

/// Solution of the reduced instance for a 1-in-3 satisfying assignment.
/// Throws NotOneInThree otherwise.
Solution solution_from_assignment(const Instance& inst, const ReductionWitness& w,
                                  const Assignment& a);

inline constexpr std::size_t kOracleMaxVars = 24;

/// Exhaustive 1-in-3 search. Assignments are ordered by their sorted list of
/// true variables, compared lexicographically (so {} < {1} < {1,2} < {2});
/// returns the first satisfying one. Throws TooLarge beyond kOracleMaxVars.
std::optional<Assignment> oracle_1in3(const Formula& f);

}  // namespace c2p
