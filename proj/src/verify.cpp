#include "c2p/verify.hpp"

#include <algorithm>
#include <string>

#include "c2p/error.hpp"

namespace c2p {
namespace {

bool is_spanning_path(const Instance& inst, const PathChoice& choice) {
  const auto part = inst.part(choice.part);
  if (choice.order.size() != part.size()) return false;
  std::vector<VertexId> sorted = choice.order;
  std::sort(sorted.begin(), sorted.end());
  return std::equal(sorted.begin(), sorted.end(), part.begin(), part.end());
}

// Index of the well-formed choice per part, or -1.
std::vector<long> index_choices(const Instance& inst, const Solution& sol,
                                std::vector<Violation>* violations) {
  std::vector<long> chosen(inst.part_count(), -1);
  std::vector<bool> bad(inst.part_count(), false);
  std::vector<bool> seen(inst.part_count(), false);
  for (std::size_t i = 0; i < sol.paths.size(); ++i) {
    const PathChoice& c = sol.paths[i];
    if (c.part >= inst.part_count()) {
      throw Error(ErrorCode::ForeignPart, "choice names part " + std::to_string(c.part) + " of " +
                                              std::to_string(inst.part_count()));
    }
    if (seen[c.part] || !is_spanning_path(inst, c)) bad[c.part] = true;
    seen[c.part] = true;
    chosen[c.part] = static_cast<long>(i);
  }
  for (PartId p = 0; p < inst.part_count(); ++p) {
    const bool needs_choice = inst.part(p).size() >= 2;
    if (bad[p]) {
      chosen[p] = -1;
      if (violations) violations->push_back({ViolationKind::NotAPath, p, {}});
    } else if (!seen[p] && needs_choice && violations) {
      violations->push_back({ViolationKind::MissingChoice, p, {}});
    }
  }
  return chosen;
}

void mark_path(const Instance& inst, const PathChoice& c, std::vector<bool>& kept) {
  for (EdgeId e : inst.part_edges(c.part)) kept[e] = false;
  for (std::size_t i = 0; i + 1 < c.order.size(); ++i) {
    kept[*inst.find_edge(c.order[i], c.order[i + 1])] = true;
  }
}

}  // namespace

std::vector<bool> kept_edges(const Instance& inst, const Solution& sol) {
  const std::vector<long> chosen = index_choices(inst, sol, nullptr);
  std::vector<bool> kept(inst.edge_count(), true);
  for (PartId p = 0; p < inst.part_count(); ++p) {
    if (chosen[p] >= 0) mark_path(inst, sol.paths[static_cast<std::size_t>(chosen[p])], kept);
  }
  return kept;
}

VerifyResult verify_solution(const Instance& inst, const Solution& sol) {
  VerifyResult result;
  const std::vector<long> chosen = index_choices(inst, sol, &result.violations);
  std::vector<bool> kept(inst.edge_count(), true);
  std::vector<bool> settled(inst.part_count(), false);
  for (PartId p = 0; p < inst.part_count(); ++p) {
    if (chosen[p] >= 0) {
      mark_path(inst, sol.paths[static_cast<std::size_t>(chosen[p])], kept);
      settled[p] = true;
    } else if (inst.part(p).size() < 2) {
      settled[p] = true;
    }
  }
  auto settled_edge = [&](EdgeId e) {
    const EdgeClass c = inst.classify(e);
    return c.kind == EdgeKind::Link || settled[c.part];
  };
  for (const CrossingPair& c : inst.crossings()) {
    if (!settled_edge(c.first) || !settled_edge(c.second)) continue;
    if (kept[c.first] && kept[c.second]) {
      result.violations.push_back({ViolationKind::UnresolvedCrossing, 0, c});
    }
  }
  return result;
}

std::vector<EdgeId> removed_edges(const Instance& inst, const Solution& sol) {
  const std::vector<bool> kept = kept_edges(inst, sol);
  std::vector<EdgeId> removed;
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    if (!kept[e]) removed.push_back(e);
  }
  return removed;
}

}  // namespace c2p
