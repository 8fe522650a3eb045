#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "c2p/generator.hpp"
#include "c2p/model.hpp"
#include "c2p/reduction.hpp"

namespace c2p::testing {

using EdgePair = std::pair<Edge, Edge>;

/// Instance with canonical edge ids; crossings named by endpoints.
Instance make_instance(std::size_t n, std::vector<std::vector<VertexId>> parts,
                       std::vector<Edge> links = {}, std::vector<EdgePair> crossings = {});

Instance triangle();
Instance k4_with_crossing();  // K4 on 0..3 with (0,2) x (1,3)

/// Clause gadget whose inputs are forced to drop the given sides.
struct ForcedClause {
  Instance instance;
  ClauseWitness witness;
};
ForcedClause forced_clause_gadget(const std::array<Side, 3>& removed);

/// Chain of m triangles between a source and a sink triangle; the source is
/// forced to drop `source_side`.
struct ForcedChain {
  Instance instance;
  TriHandle source;
  TriHandle sink;
};
ForcedChain forced_chain(std::size_t m, Side source_side);

/// random_instance, or nullopt when the parameters are unreachable.
std::optional<Instance> try_random_instance(const GenParams& params);

/// Fixed corpus of small instances (<= 6 parts of size <= 4).
std::vector<Instance> small_corpus(std::size_t count, std::uint64_t seed);

/// All formulas with 3..4 variables and 1..2 clauses (sorted triples, any order).
std::vector<Formula> tiny_formulas();

/// Seeded random formulas with 3..5 variables and 1..3 clauses.
std::vector<Formula> random_formulas(std::size_t count, std::uint64_t seed);

/// Edges kept by the path `order` (by id).
std::vector<EdgeId> path_edges(const Instance& inst, const std::vector<VertexId>& order);

}  // namespace c2p::testing
