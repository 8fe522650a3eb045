#pragma once

// Combinatorial model of a simple topological graph whose vertex set is
// partitioned into cliques. The drawing is abstracted to the set of edge
// pairs that cross; coordinates, arcs and crossing order along an edge are
// not represented, and geometric realizability is not checked.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace c2p {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using PartId = std::uint32_t;

/// Undirected edge; endpoints are stored with u < v once inside an Instance.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Unordered pair of crossing edges, stored with first < second.
struct CrossingPair {
  EdgeId first = 0;
  EdgeId second = 0;

  friend bool operator==(const CrossingPair&, const CrossingPair&) = default;
  friend auto operator<=>(const CrossingPair&, const CrossingPair&) = default;
};

enum class EdgeKind { Clique, Link };

struct EdgeClass {
  EdgeKind kind = EdgeKind::Link;
  PartId part = 0;  // meaningful for clique edges only

  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

/// One spanning path of a part, as an ordered vertex sequence.
struct PathChoice {
  PartId part = 0;
  std::vector<VertexId> order;

  friend bool operator==(const PathChoice&, const PathChoice&) = default;
};

/// One PathChoice per part of size >= 2, sorted by part index.
struct Solution {
  std::vector<PathChoice> paths;

  friend bool operator==(const Solution&, const Solution&) = default;
};

/// Validated, immutable instance. Parts are stored with sorted vertices and the
/// clique edges of a part are indexed in row-major order of vertex positions:
/// (0,1), (0,2), ..., (0,s-1), (1,2), ...
class Instance {
 public:
  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t part_count() const { return parts_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  /// Sorted lexicographically.
  std::span<const CrossingPair> crossings() const { return crossings_; }
  /// Edges crossing e, ascending.
  std::span<const EdgeId> crossing_partners(EdgeId e) const;

  std::span<const VertexId> part(PartId p) const { return parts_[p]; }
  const std::vector<std::vector<VertexId>>& parts() const { return parts_; }
  std::span<const EdgeId> part_edges(PartId p) const;
  PartId part_of(VertexId v) const { return part_of_[v]; }

  EdgeClass classify(EdgeId e) const;
  /// Only clique edges of parts with at least three vertices can be removed;
  /// a size-2 part keeps its single edge exactly like a link edge.
  bool is_removable(EdgeId e) const;
  /// Position of a clique edge inside part_edges(part).
  std::size_t local_index(EdgeId e) const { return local_index_[e]; }

  /// Largest part size (h).
  std::size_t max_part_size() const { return max_part_size_; }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  friend Instance build_instance(std::size_t, std::vector<Edge>, std::vector<CrossingPair>,
                                 std::vector<std::vector<VertexId>>);

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<CrossingPair> crossings_;
  std::vector<std::vector<VertexId>> parts_;

  std::vector<PartId> part_of_;
  std::vector<EdgeClass> classes_;
  std::vector<std::uint32_t> local_index_;
  std::vector<std::size_t> partner_offsets_;
  std::vector<EdgeId> partners_;
  std::vector<std::size_t> part_edge_offsets_;
  std::vector<EdgeId> part_edges_;
  std::unordered_map<std::uint64_t, EdgeId> edge_index_;
  std::size_t max_part_size_ = 0;
};

/// Validates raw lists and builds an Instance. Edge ids are positions in
/// `edges`. Throws Error with the first violated invariant, scanning edges,
/// then parts, then clique completeness, then crossings, each in input order.
Instance build_instance(std::size_t n, std::vector<Edge> edges, std::vector<CrossingPair> crossings,
                        std::vector<std::vector<VertexId>> parts);

/// Canonical edge list: clique edges of each part (parts in order, vertex
/// pairs of the sorted part in row-major order), followed by `links`.
std::vector<Edge> canonical_edges(const std::vector<std::vector<VertexId>>& parts,
                                  std::span<const Edge> links);

/// Builds an instance with canonical edge ids from parts, link edges and
/// crossings named by endpoints. This is the id convention of the text format.
Instance assemble_instance(std::size_t n, std::vector<std::vector<VertexId>> parts,
                           std::span<const Edge> links,
                           std::span<const std::pair<Edge, Edge>> crossings);

/// True when the instance's edge ids follow the canonical convention, so that
/// serialization round-trips ids exactly.
bool has_canonical_edge_order(const Instance& inst);

EdgeClass classify_edge(const Instance& inst, EdgeId e);

/// Largest number of crossings on a single edge; the instance is k-plane iff
/// the result is <= k.
std::size_t max_crossings_per_edge(const Instance& inst);

/// All Hamiltonian paths of the complete graph on `part`, each listed once
/// with its smaller endpoint first, in lexicographic order. |part|!/2 items.
/// Throws PartTooSmall for fewer than two vertices and TooLarge beyond
/// kMaxEnumerablePart vertices.
std::vector<std::vector<VertexId>> spanning_paths(std::span<const VertexId> part);

inline constexpr std::size_t kMaxEnumerablePart = 9;

}  // namespace c2p
