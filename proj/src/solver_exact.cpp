#include "c2p/solver_exact.hpp"

#include <algorithm>
#include <numeric>

#include "path_search.hpp"

namespace c2p {
namespace {

std::vector<PartId> all_parts(const Instance& inst) {
  std::vector<PartId> parts(inst.part_count());
  std::iota(parts.begin(), parts.end(), PartId{0});
  return parts;
}

}  // namespace

std::variant<ForbiddenSet, Infeasible> preprocess(const Instance& inst) {
  ForbiddenSet forbidden;
  for (const CrossingPair& c : inst.crossings()) {
    const bool first = inst.is_removable(c.first);
    const bool second = inst.is_removable(c.second);
    if (!first && !second) return Infeasible{c};
    if (!first) forbidden.edges.push_back(c.second);
    if (!second) forbidden.edges.push_back(c.first);
  }
  std::sort(forbidden.edges.begin(), forbidden.edges.end());
  forbidden.edges.erase(std::unique(forbidden.edges.begin(), forbidden.edges.end()),
                        forbidden.edges.end());
  return forbidden;
}

std::optional<Solution> solve_exact(const Instance& inst) {
  const auto pre = preprocess(inst);
  if (std::holds_alternative<Infeasible>(pre)) return std::nullopt;
  detail::PathSearch search(inst, std::get<ForbiddenSet>(pre).edges);
  const std::vector<PartId> parts = all_parts(inst);
  std::optional<Solution> found;
  search.run(parts, detail::PathSearch::Order::MinRemaining, [&] {
    found = search.current_solution();
    return false;
  });
  return found;
}

Enumeration enumerate_solutions(const Instance& inst, std::uint64_t cap) {
  Enumeration out;
  const auto pre = preprocess(inst);
  if (std::holds_alternative<Infeasible>(pre)) return out;
  detail::PathSearch search(inst, std::get<ForbiddenSet>(pre).edges);
  const std::vector<PartId> parts = all_parts(inst);
  search.run(parts, detail::PathSearch::Order::Ascending, [&] {
    if (out.solutions.size() == cap) {
      out.cap_exceeded = true;
      return false;
    }
    out.solutions.push_back(search.current_solution());
    return true;
  });
  return out;
}

SolutionCount count_solutions(const Instance& inst, std::uint64_t cap) {
  SolutionCount out;
  const auto pre = preprocess(inst);
  if (std::holds_alternative<Infeasible>(pre)) return out;
  detail::PathSearch search(inst, std::get<ForbiddenSet>(pre).edges);
  const std::vector<PartId> parts = all_parts(inst);
  search.run(parts, detail::PathSearch::Order::Ascending, [&] {
    if (out.count == cap) {
      out.cap_exceeded = true;
      return false;
    }
    ++out.count;
    return true;
  });
  return out;
}

}  // namespace c2p
