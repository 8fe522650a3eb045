#pragma once

// Backtracking over per-part spanning-path domains with forward checking on
// pairwise "both kept edges cross" nogoods. Shared by the exact and 1-plane
// solvers; not part of the public headers.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "c2p/model.hpp"

namespace c2p::detail {

/// Spanning paths of K_size over vertex positions 0..size-1, in canonical
/// order, with a bitmask of kept local edges per path.
struct PathTemplate {
  std::size_t size = 0;
  std::vector<std::vector<std::uint8_t>> orders;
  std::vector<std::uint64_t> kept;
};

const PathTemplate& path_template(std::size_t size);

/// Bit index of the clique edge between positions i < j of a part of `size`.
constexpr std::size_t local_pair_index(std::size_t size, std::size_t i, std::size_t j) {
  return i * size - i * (i + 1) / 2 + (j - i - 1);
}

class PathSearch {
 public:
  enum class Order { MinRemaining, Ascending };
  /// Called once per solution; return false to stop the search.
  using Visitor = std::function<bool()>;

  /// `forbidden` lists clique edges that must be removed.
  PathSearch(const Instance& inst, std::span<const EdgeId> forbidden);

  /// Explores every consistent assignment of the given parts. Parts of size
  /// < 3 are fixed and skipped. Returns false iff the visitor stopped it.
  bool run(std::span<const PartId> parts, Order order, const Visitor& visit);

  /// Valid inside the visitor: the path index chosen for part p.
  std::uint32_t chosen(PartId p) const { return chosen_[p]; }

  /// Domain after unary pruning (forbidden edges, same-part crossings).
  std::span<const std::uint32_t> initial_domain(PartId p) const { return initial_[p]; }

  PathChoice path_choice(PartId p, std::uint32_t path) const;

  /// Solution for the current assignment: every part of size >= 2, with
  /// size-2 parts on their unique path.
  Solution current_solution() const;

  std::uint64_t nodes() const { return nodes_; }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  struct Partner {
    PartId part;
    std::uint8_t bit;
  };
  struct Saved {
    PartId part;
    std::vector<std::uint32_t> domain;
  };

  bool dfs(std::span<const PartId> parts, Order order, std::size_t next, const Visitor& visit);
  bool forward_check(PartId p, std::uint32_t path);
  void undo_to(std::size_t mark);
  std::uint64_t kept_mask(PartId p, std::uint32_t path) const;

  const Instance& inst_;
  std::vector<std::vector<std::uint32_t>> initial_;
  std::vector<const PathTemplate*> templates_;
  std::vector<std::vector<std::uint32_t>> domain_;
  std::vector<std::uint32_t> chosen_;
  std::vector<std::size_t> partner_offsets_;
  std::vector<Partner> partners_;
  std::vector<Saved> trail_;
  std::uint64_t nodes_ = 0;
};

}  // namespace c2p::detail
