#include "c2p/solver_2sat.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "c2p/error.hpp"

namespace c2p {
namespace {

constexpr std::uint32_t kNoVar = ~std::uint32_t{0};

std::uint32_t node(Literal l) { return 2 * l.var + (l.negated ? 1 : 0); }

// Iterative Tarjan. Components are numbered in the order they are closed,
// which is a reverse topological order of the condensation.
std::vector<std::uint32_t> tarjan(std::size_t nodes, const std::vector<std::size_t>& offsets,
                                  const std::vector<std::uint32_t>& targets) {
  constexpr std::uint32_t kUnvisited = ~std::uint32_t{0};
  std::vector<std::uint32_t> index(nodes, kUnvisited), low(nodes, 0), comp(nodes, kUnvisited);
  std::vector<bool> on_stack(nodes, false);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::size_t>> frames;
  std::uint32_t counter = 0, components = 0;

  // Negative literals are tried as roots first, so unconstrained variables
  // come out false.
  for (std::uint32_t r = 0; r < nodes; ++r) {
    const std::uint32_t root = r ^ 1u;
    if (index[root] != kUnvisited) continue;
    frames.push_back({root, offsets[root]});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next < offsets[v + 1]) {
        const std::uint32_t w = targets[next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, offsets[w]});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      const std::uint32_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const std::uint32_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comp;
}

}  // namespace

std::variant<TwoSatInstance, Infeasible> build_2sat(const Instance& inst) {
  if (inst.max_part_size() > 3) {
    throw Error(ErrorCode::HTooLarge, "2-SAT needs parts of size <= 3, largest part has " +
                                          std::to_string(inst.max_part_size()) + " vertices");
  }
  TwoSatInstance sat;
  std::vector<std::uint32_t> var_of(inst.edge_count(), kNoVar);
  for (PartId p = 0; p < inst.part_count(); ++p) {
    if (inst.part(p).size() != 3) continue;
    const auto edges = inst.part_edges(p);
    const std::uint32_t base = static_cast<std::uint32_t>(sat.num_vars);
    for (EdgeId e : edges) {
      var_of[e] = static_cast<std::uint32_t>(sat.num_vars++);
      sat.var_edge.push_back(e);
    }
    for (std::uint32_t i = 0; i < 3; ++i) {
      for (std::uint32_t j = i + 1; j < 3; ++j) {
        sat.clauses.push_back({{base + i, true}, {base + j, true}});
      }
    }
  }
  for (const CrossingPair& c : inst.crossings()) {
    const std::uint32_t a = var_of[c.first];
    const std::uint32_t b = var_of[c.second];
    if (a == kNoVar && b == kNoVar) return Infeasible{c};
    if (a == kNoVar) {
      sat.clauses.push_back({{b, false}, {b, false}});
    } else if (b == kNoVar) {
      sat.clauses.push_back({{a, false}, {a, false}});
    } else {
      // Triangle edges are pairwise adjacent, so a crossing never stays
      // inside one triangle.
      assert(inst.classify(c.first).part != inst.classify(c.second).part);
      sat.clauses.push_back({{a, false}, {b, false}});
    }
  }
  return sat;
}

std::optional<std::vector<bool>> solve_2sat(const TwoSatInstance& sat) {
  const std::size_t nodes = 2 * sat.num_vars;
  // (a | b) gives !a -> b and !b -> a.
  std::vector<std::size_t> offsets(nodes + 1, 0);
  auto negate = [](std::uint32_t n) { return n ^ 1u; };
  for (const Clause2& c : sat.clauses) {
    ++offsets[negate(node(c.a)) + 1];
    if (!(c.a == c.b)) ++offsets[negate(node(c.b)) + 1];
  }
  for (std::size_t i = 0; i < nodes; ++i) offsets[i + 1] += offsets[i];
  std::vector<std::uint32_t> targets(offsets[nodes]);
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const Clause2& c : sat.clauses) {
    targets[fill[negate(node(c.a))]++] = node(c.b);
    if (!(c.a == c.b)) targets[fill[negate(node(c.b))]++] = node(c.a);
  }
  const std::vector<std::uint32_t> comp = tarjan(nodes, offsets, targets);
  std::vector<bool> value(sat.num_vars, false);
  for (std::uint32_t v = 0; v < sat.num_vars; ++v) {
    const std::uint32_t pos = comp[2 * v], neg = comp[2 * v + 1];
    if (pos == neg) return std::nullopt;
    value[v] = pos < neg;
  }
  return value;
}

Solution extract_solution_2sat(const Instance& inst, const TwoSatInstance& sat,
                               const std::vector<bool>& assignment) {
  if (assignment.size() != sat.num_vars) {
    throw Error(ErrorCode::InvalidAssignment, "assignment has " +
                                                  std::to_string(assignment.size()) +
                                                  " values for " + std::to_string(sat.num_vars) +
                                                  " variables");
  }
  std::vector<std::uint32_t> var_of(inst.edge_count(), kNoVar);
  for (std::uint32_t v = 0; v < sat.num_vars; ++v) var_of[sat.var_edge[v]] = v;

  // Local pair index -> (i, j, third) for a triangle.
  static constexpr std::uint8_t kPairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  Solution sol;
  for (PartId p = 0; p < inst.part_count(); ++p) {
    const auto part = inst.part(p);
    if (part.size() < 2) continue;
    if (part.size() == 2) {
      sol.paths.push_back({p, {part[0], part[1]}});
      continue;
    }
    const auto edges = inst.part_edges(p);
    int removed = -1;
    for (int l = 0; l < 3; ++l) {
      const std::uint32_t v = var_of[edges[static_cast<std::size_t>(l)]];
      if (v != kNoVar && assignment[v]) {
        if (removed >= 0) {
          throw Error(ErrorCode::InvalidAssignment,
                      "part " + std::to_string(p) + " has two removed edges");
        }
        removed = l;
      }
    }
    if (removed < 0) {
      removed = static_cast<int>(std::min_element(edges.begin(), edges.end()) - edges.begin());
    }
    const auto& [i, j, k] = kPairs[removed];
    sol.paths.push_back({p, {part[i], part[k], part[j]}});
  }
  return sol;
}

std::optional<Solution> solve_via_2sat(const Instance& inst) {
  auto built = build_2sat(inst);
  if (std::holds_alternative<Infeasible>(built)) return std::nullopt;
  const auto& sat = std::get<TwoSatInstance>(built);
  const auto assignment = solve_2sat(sat);
  if (!assignment) return std::nullopt;
  return extract_solution_2sat(inst, sat, *assignment);
}

}  // namespace c2p
