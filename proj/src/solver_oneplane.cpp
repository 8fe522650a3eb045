#include "c2p/solver_oneplane.hpp"

#include <numeric>
#include <variant>

#include "c2p/solver_exact.hpp"
#include "path_search.hpp"

namespace c2p {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Keeps the smaller index as representative.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::optional<EdgeId> one_plane_violation(const Instance& inst) {
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    if (inst.crossing_partners(e).size() > 1) return e;
  }
  return std::nullopt;
}

std::vector<CrossComponent> crossing_components(const Instance& inst) {
  const std::size_t parts = inst.part_count();
  DisjointSets sets(parts);
  std::vector<bool> self_crossing(parts, false);
  for (const CrossingPair& c : inst.crossings()) {
    const EdgeClass a = inst.classify(c.first);
    const EdgeClass b = inst.classify(c.second);
    if (a.kind != EdgeKind::Clique || b.kind != EdgeKind::Clique) continue;
    if (a.part == b.part) {
      self_crossing[a.part] = true;
    } else if (inst.is_removable(c.first) && inst.is_removable(c.second)) {
      sets.unite(a.part, b.part);
    }
  }

  std::vector<std::size_t> slot(parts, ~std::size_t{0});
  std::vector<CrossComponent> components;
  for (PartId p = 0; p < parts; ++p) {
    const std::size_t root = sets.find(p);
    if (slot[root] == ~std::size_t{0}) {
      slot[root] = components.size();
      components.emplace_back();
    }
    components[slot[root]].parts.push_back(p);
  }
  for (CrossComponent& comp : components) {
    if (comp.parts.size() < 2) continue;
    bool violation = comp.parts.size() > 2;
    for (PartId p : comp.parts) {
      if (inst.part(p).size() >= 5 || self_crossing[p]) violation = true;
    }
    comp.unrealizable = violation;
  }
  return components;
}

OnePlaneResult solve_one_plane(const Instance& inst) {
  OnePlaneResult result;
  if (auto e = one_plane_violation(inst)) {
    result.status = OnePlaneStatus::NotOnePlane;
    result.offending_edge = e;
    return result;
  }
  const auto pre = preprocess(inst);
  if (std::holds_alternative<Infeasible>(pre)) {
    result.status = OnePlaneStatus::Infeasible;
    return result;
  }

  const std::vector<CrossComponent> components = crossing_components(inst);
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].unrealizable) result.flagged_components.push_back(i);
  }

  detail::PathSearch search(inst, std::get<ForbiddenSet>(pre).edges);
  std::vector<std::uint32_t> chosen(inst.part_count(), 0);
  for (const CrossComponent& comp : components) {
    bool found = false;
    search.run(comp.parts, detail::PathSearch::Order::Ascending, [&] {
      for (PartId p : comp.parts) {
        if (inst.part(p).size() >= 3) chosen[p] = search.chosen(p);
      }
      found = true;
      return false;
    });
    if (!found) {
      result.status = OnePlaneStatus::Infeasible;
      return result;
    }
  }

  Solution sol;
  for (PartId p = 0; p < inst.part_count(); ++p) {
    if (inst.part(p).size() >= 2) sol.paths.push_back(search.path_choice(p, chosen[p]));
  }
  result.status = OnePlaneStatus::Feasible;
  result.solution = std::move(sol);
  return result;
}

}  // namespace c2p
