#include "path_search.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

#include "c2p/error.hpp"

namespace c2p::detail {
namespace {

PathTemplate make_template(std::size_t size) {
  PathTemplate t;
  t.size = size;
  std::vector<std::uint8_t> perm(size);
  std::iota(perm.begin(), perm.end(), std::uint8_t{0});
  do {
    if (perm.front() >= perm.back()) continue;
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i + 1 < size; ++i) {
      const std::size_t a = std::min(perm[i], perm[i + 1]);
      const std::size_t b = std::max(perm[i], perm[i + 1]);
      mask |= std::uint64_t{1} << local_pair_index(size, a, b);
    }
    t.orders.push_back(perm);
    t.kept.push_back(mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return t;
}

}  // namespace

const PathTemplate& path_template(std::size_t size) {
  static std::array<std::unique_ptr<PathTemplate>, kMaxEnumerablePart + 1> cache;
  static std::mutex lock;
  if (size < 2) throw Error(ErrorCode::PartTooSmall, "no path template below size 2");
  if (size > kMaxEnumerablePart) {
    throw Error(ErrorCode::TooLarge, "part of size " + std::to_string(size) +
                                         " exceeds the enumeration limit of " +
                                         std::to_string(kMaxEnumerablePart));
  }
  std::lock_guard guard(lock);
  if (!cache[size]) cache[size] = std::make_unique<PathTemplate>(make_template(size));
  return *cache[size];
}

PathSearch::PathSearch(const Instance& inst, std::span<const EdgeId> forbidden)
    : inst_(inst),
      initial_(inst.part_count()),
      templates_(inst.part_count(), nullptr),
      chosen_(inst.part_count(), kNone) {
  const std::size_t parts = inst.part_count();
  std::vector<std::uint64_t> forbidden_mask(parts, 0);
  for (EdgeId e : forbidden) {
    const EdgeClass c = inst.classify(e);
    if (c.kind == EdgeKind::Clique) forbidden_mask[c.part] |= std::uint64_t{1} << inst.local_index(e);
  }
  std::vector<std::vector<std::uint64_t>> self_pairs(parts);
  for (const CrossingPair& c : inst.crossings()) {
    if (!inst.is_removable(c.first) || !inst.is_removable(c.second)) continue;
    const PartId p = inst.classify(c.first).part;
    if (p != inst.classify(c.second).part) continue;
    self_pairs[p].push_back((std::uint64_t{1} << inst.local_index(c.first)) |
                            (std::uint64_t{1} << inst.local_index(c.second)));
  }

  for (PartId p = 0; p < parts; ++p) {
    const std::size_t size = inst.part(p).size();
    if (size < 3) continue;
    const PathTemplate& t = path_template(size);
    templates_[p] = &t;
    auto& dom = initial_[p];
    for (std::uint32_t i = 0; i < t.kept.size(); ++i) {
      const std::uint64_t kept = t.kept[i];
      if (kept & forbidden_mask[p]) continue;
      bool ok = true;
      for (std::uint64_t pair : self_pairs[p]) {
        if ((kept & pair) == pair) {
          ok = false;
          break;
        }
      }
      if (ok) dom.push_back(i);
    }
  }
  domain_ = initial_;

  partner_offsets_.assign(inst.edge_count() + 1, 0);
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    std::size_t count = 0;
    if (inst.is_removable(e)) {
      const PartId p = inst.classify(e).part;
      for (EdgeId f : inst.crossing_partners(e)) {
        if (inst.is_removable(f) && inst.classify(f).part != p) ++count;
      }
    }
    partner_offsets_[e + 1] = partner_offsets_[e] + count;
  }
  partners_.reserve(partner_offsets_.back());
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    if (!inst.is_removable(e)) continue;
    const PartId p = inst.classify(e).part;
    for (EdgeId f : inst.crossing_partners(e)) {
      if (!inst.is_removable(f)) continue;
      const PartId q = inst.classify(f).part;
      if (q != p) partners_.push_back({q, static_cast<std::uint8_t>(inst.local_index(f))});
    }
  }
}

std::uint64_t PathSearch::kept_mask(PartId p, std::uint32_t path) const {
  return templates_[p]->kept[path];
}

PathChoice PathSearch::path_choice(PartId p, std::uint32_t path) const {
  const auto part = inst_.part(p);
  PathChoice choice{p, {}};
  if (part.size() == 2) {
    choice.order.assign(part.begin(), part.end());
    return choice;
  }
  for (std::uint8_t pos : templates_[p]->orders[path]) choice.order.push_back(part[pos]);
  return choice;
}

Solution PathSearch::current_solution() const {
  Solution sol;
  for (PartId p = 0; p < inst_.part_count(); ++p) {
    const std::size_t size = inst_.part(p).size();
    if (size == 2) {
      sol.paths.push_back(path_choice(p, 0));
    } else if (size >= 3 && chosen_[p] != kNone) {
      sol.paths.push_back(path_choice(p, chosen_[p]));
    }
  }
  return sol;
}

void PathSearch::undo_to(std::size_t mark) {
  while (trail_.size() > mark) {
    domain_[trail_.back().part] = std::move(trail_.back().domain);
    trail_.pop_back();
  }
}

bool PathSearch::forward_check(PartId p, std::uint32_t path) {
  std::uint64_t kept = kept_mask(p, path);
  const auto edges = inst_.part_edges(p);
  while (kept) {
    const int bit = __builtin_ctzll(kept);
    kept &= kept - 1;
    const EdgeId e = edges[static_cast<std::size_t>(bit)];
    for (std::size_t k = partner_offsets_[e]; k < partner_offsets_[e + 1]; ++k) {
      const Partner& other = partners_[k];
      if (chosen_[other.part] != kNone) continue;
      const PathTemplate& t = *templates_[other.part];
      const std::uint64_t bit_mask = std::uint64_t{1} << other.bit;
      auto& dom = domain_[other.part];
      const bool touched = std::any_of(dom.begin(), dom.end(),
                                       [&](std::uint32_t i) { return t.kept[i] & bit_mask; });
      if (!touched) continue;
      trail_.push_back({other.part, dom});
      std::erase_if(dom, [&](std::uint32_t i) { return (t.kept[i] & bit_mask) != 0; });
      if (dom.empty()) return false;
    }
  }
  return true;
}

bool PathSearch::run(std::span<const PartId> parts, Order order, const Visitor& visit) {
  const std::size_t mark = trail_.size();
  for (PartId p : parts) {
    if (inst_.part(p).size() >= 3 && domain_[p].empty()) return true;
  }
  const bool finished = dfs(parts, order, 0, visit);
  undo_to(mark);
  for (PartId p : parts) chosen_[p] = kNone;
  return finished;
}

bool PathSearch::dfs(std::span<const PartId> parts, Order order, std::size_t next,
                     const Visitor& visit) {
  ++nodes_;
  PartId pick = 0;
  bool found = false;
  if (order == Order::Ascending) {
    while (next < parts.size() &&
           (inst_.part(parts[next]).size() < 3 || chosen_[parts[next]] != kNone)) {
      ++next;
    }
    if (next < parts.size()) {
      pick = parts[next];
      found = true;
    }
  } else {
    std::size_t best = ~std::size_t{0};
    for (PartId p : parts) {
      if (inst_.part(p).size() < 3 || chosen_[p] != kNone) continue;
      const std::size_t size = domain_[p].size();
      if (size < best || (size == best && p < pick)) {
        best = size;
        pick = p;
        found = true;
      }
    }
  }
  if (!found) return visit();

  const std::vector<std::uint32_t> values = domain_[pick];
  for (std::uint32_t value : values) {
    const std::size_t mark = trail_.size();
    chosen_[pick] = value;
    const bool consistent = forward_check(pick, value);
    if (consistent && !dfs(parts, order, next + 1, visit)) {
      undo_to(mark);
      chosen_[pick] = kNone;
      return false;
    }
    undo_to(mark);
    chosen_[pick] = kNone;
  }
  return true;
}

}  // namespace c2p::detail
