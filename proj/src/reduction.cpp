#include "c2p/reduction.hpp"

#include <algorithm>
#include <string>

#include "c2p/error.hpp"

namespace c2p {
namespace {

Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

// Path on a triangle that drops the edge of side `s`.
PathChoice triangle_path(const Instance& inst, const TriHandle& t, Side s) {
  const auto v = inst.part(t.part);  // a < b < c
  switch (s) {
    case Side::Base: return {t.part, {v[0], v[2], v[1]}};
    case Side::Left: return {t.part, {v[1], v[0], v[2]}};
    case Side::Right: return {t.part, {v[0], v[1], v[2]}};
  }
  return {};
}

const PathChoice* find_choice(const Solution& sol, PartId part) {
  auto it = std::lower_bound(sol.paths.begin(), sol.paths.end(), part,
                             [](const PathChoice& c, PartId p) { return c.part < p; });
  if (it != sol.paths.end() && it->part == part) return &*it;
  for (const PathChoice& c : sol.paths) {
    if (c.part == part) return &c;
  }
  return nullptr;
}

}  // namespace

void validate_formula(const Formula& f) {
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    const auto& c = f.clauses[i];
    for (std::size_t k = 0; k < 3; ++k) {
      if (c[k] < 1 || c[k] > f.nvars) {
        throw Error(ErrorCode::InvalidFormula, "clause " + std::to_string(i + 1) +
                                                   " names variable " + std::to_string(c[k]) +
                                                   " of " + std::to_string(f.nvars));
      }
    }
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) {
      throw Error(ErrorCode::InvalidFormula,
                  "clause " + std::to_string(i + 1) + " repeats a variable");
    }
  }
}

bool satisfies_one_in_three(const Formula& f, const Assignment& a) {
  if (a.values.size() != f.nvars) return false;
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& c) {
    return a.value(c[0]) + a.value(c[1]) + a.value(c[2]) == 1;
  });
}

// ---------------------------------------------------------------------------
// InstanceBuilder

VertexId InstanceBuilder::add_vertex() { return static_cast<VertexId>(n_++); }

PartId InstanceBuilder::add_part(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      clique_edges_.push_back(Edge{vertices[i], vertices[j]});
    }
  }
  parts_.push_back(std::move(vertices));
  return static_cast<PartId>(parts_.size() - 1);
}

TriHandle InstanceBuilder::add_triangle() {
  const VertexId a = add_vertex(), b = add_vertex(), c = add_vertex();
  const EdgeId first = static_cast<EdgeId>(clique_edges_.size());
  const PartId part = add_part({a, b, c});
  // Row-major pairs: (a,b), (a,c), (b,c).
  return TriHandle{part, first, first + 2, first + 1};
}

EdgeId InstanceBuilder::clique_edge(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  for (std::size_t id = clique_edges_.size(); id-- > 0;) {
    if (clique_edges_[id] == Edge{a, b}) return static_cast<EdgeId>(id);
  }
  throw Error(ErrorCode::UnknownEdgeInCrossing,
              "no clique edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

void InstanceBuilder::cross(EdgeId a, EdgeId b) {
  crossings_.emplace_back(clique_edges_[a], clique_edges_[b]);
}

void InstanceBuilder::force_removed(EdgeId e) {
  const VertexId a = add_vertex(), b = add_vertex();
  add_part({a});
  add_part({b});
  links_.push_back(Edge{a, b});
  crossings_.emplace_back(clique_edges_[e], Edge{a, b});
}

void InstanceBuilder::join(const TriHandle& a, const TriHandle& b) {
  cross(a.left, b.left);
  cross(a.right, b.right);
}

Instance InstanceBuilder::build() const {
  return assemble_instance(n_, parts_, links_, crossings_);
}

// ---------------------------------------------------------------------------
// Gadgets

VariableWitness append_variable_gadget(InstanceBuilder& b, std::size_t occurrences) {
  VariableWitness w;
  const std::size_t ring = 2 * occurrences;
  for (std::size_t i = 0; i < ring; ++i) w.ring.push_back(b.add_triangle());
  for (std::size_t j = 0; j < occurrences; ++j) w.tau.push_back(b.add_triangle());

  // A ring of two has a single neighbour relation.
  const std::size_t links = ring == 2 ? 1 : ring;
  for (std::size_t i = 0; i < links; ++i) b.join(w.ring[i], w.ring[(i + 1) % ring]);

  for (std::size_t j = 0; j < occurrences; ++j) {
    const TriHandle& tau = w.tau[j];
    const TriHandle& odd = w.ring[2 * j];       // t_{2j-1}
    const TriHandle& even = w.ring[2 * j + 1];  // t_{2j}
    b.cross(tau.right, odd.left);
    b.cross(tau.right, even.right);
    b.cross(tau.left, even.left);
    b.cross(tau.left, odd.right);
  }
  return w;
}

ClauseWitness append_clause_gadget(InstanceBuilder& b) {
  ClauseWitness w;
  w.center = b.add_vertex();
  for (VertexId& r : w.rim) r = b.add_vertex();
  w.part = b.add_part({w.center, w.rim[0], w.rim[1], w.rim[2]});
  for (std::size_t i = 0; i < 3; ++i) {
    w.spokes[i] = b.clique_edge(w.center, w.rim[i]);
    w.outer[i] = b.clique_edge(w.rim[i], w.rim[(i + 1) % 3]);
  }
  for (TriHandle& t : w.inputs) t = b.add_triangle();
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t prev = (i + 2) % 3;
    b.cross(w.inputs[i].left, w.spokes[i]);
    b.cross(w.inputs[i].left, w.outer[i]);
    b.cross(w.inputs[i].right, w.outer[prev]);
  }
  return w;
}

std::vector<TriHandle> append_chain(InstanceBuilder& b, std::size_t m, bool allow_even) {
  if (m == 0 || (m % 2 == 0 && !allow_even)) {
    throw Error(ErrorCode::EvenChain, "chain length must be odd and positive, got " +
                                          std::to_string(m));
  }
  std::vector<TriHandle> chain;
  for (std::size_t i = 0; i < m; ++i) chain.push_back(b.add_triangle());
  for (std::size_t i = 0; i + 1 < m; ++i) b.join(chain[i], chain[i + 1]);
  return chain;
}

VariableGadget build_variable_gadget(std::size_t occurrences) {
  InstanceBuilder b;
  VariableWitness w = append_variable_gadget(b, occurrences);
  return {b.build(), std::move(w)};
}

ClauseGadget build_clause_gadget() {
  InstanceBuilder b;
  ClauseWitness w = append_clause_gadget(b);
  return {b.build(), std::move(w)};
}

ChainGadget build_chain(std::size_t m, bool allow_even) {
  InstanceBuilder b;
  std::vector<TriHandle> chain = append_chain(b, m, allow_even);
  return {b.build(), std::move(chain)};
}

Reduction reduce_formula(const Formula& f, std::size_t chain_length) {
  validate_formula(f);
  if (f.clauses.empty()) throw Error(ErrorCode::EmptyFormula, "formula has no clauses");
  if (chain_length == 0 || chain_length % 2 == 0) {
    throw Error(ErrorCode::EvenChain, "chain length must be odd and positive, got " +
                                          std::to_string(chain_length));
  }

  std::vector<std::size_t> occurrences(f.nvars, 0);
  for (const auto& c : f.clauses) {
    for (std::uint32_t v : c) ++occurrences[v - 1];
  }

  InstanceBuilder b;
  ReductionWitness w;
  w.nvars = f.nvars;
  w.chain_length = chain_length;
  w.variables.resize(f.nvars);
  for (std::size_t x = 0; x < f.nvars; ++x) {
    if (occurrences[x] > 0) w.variables[x] = append_variable_gadget(b, occurrences[x]);
  }

  std::vector<std::uint32_t> seen(f.nvars, 0);
  for (const auto& c : f.clauses) {
    ClauseWitness cw = append_clause_gadget(b);
    for (std::size_t i = 0; i < 3; ++i) {
      const std::uint32_t var = c[i];
      cw.vars[i] = var;
      cw.occurrence[i] = ++seen[var - 1];
      const TriHandle& tau = w.variables[var - 1].tau[cw.occurrence[i] - 1];
      cw.chains[i] = append_chain(b, chain_length);
      b.join(tau, cw.chains[i].front());
      b.join(cw.chains[i].back(), cw.inputs[i]);
    }
    w.clauses.push_back(std::move(cw));
  }
  return {b.build(), std::move(w)};
}

// ---------------------------------------------------------------------------
// Witness translation

Side removed_side(const Instance& inst, const Solution& sol, const TriHandle& t) {
  const PathChoice* choice = find_choice(sol, t.part);
  if (!choice || choice->order.size() != 3) {
    throw Error(ErrorCode::InconsistentGadget,
                "no path for triangle part " + std::to_string(t.part));
  }
  const auto removed = inst.find_edge(choice->order.front(), choice->order.back());
  if (removed == t.base) return Side::Base;
  if (removed == t.left) return Side::Left;
  if (removed == t.right) return Side::Right;
  throw Error(ErrorCode::InconsistentGadget,
              "path for part " + std::to_string(t.part) + " is not on its triangle");
}

Assignment extract_assignment(const Instance& inst, const ReductionWitness& w,
                              const Solution& sol) {
  Assignment a;
  a.values.assign(w.nvars, false);
  for (std::size_t x = 0; x < w.nvars; ++x) {
    const auto& tau = w.variables[x].tau;
    if (tau.empty()) continue;
    const Side side = removed_side(inst, sol, tau.front());
    for (const TriHandle& t : tau) {
      const Side s = removed_side(inst, sol, t);
      if (s != side || s == Side::Base) {
        throw Error(ErrorCode::InconsistentGadget,
                    "variable " + std::to_string(x + 1) + " has tau triangles removing different sides");
      }
    }
    a.values[x] = side == Side::Right;
  }
  return a;
}

Solution solution_from_assignment(const Instance& inst, const ReductionWitness& w,
                                  const Assignment& a) {
  if (a.values.size() != w.nvars) {
    throw Error(ErrorCode::InvalidAssignment, "assignment has " + std::to_string(a.values.size()) +
                                                  " values for " + std::to_string(w.nvars) +
                                                  " variables");
  }
  std::vector<PathChoice> by_part(inst.part_count());
  std::vector<bool> set(inst.part_count(), false);
  auto put = [&](PathChoice c) {
    set[c.part] = true;
    by_part[c.part] = std::move(c);
  };

  for (std::size_t x = 0; x < w.nvars; ++x) {
    const VariableWitness& var = w.variables[x];
    const Side side = a.values[x] ? Side::Right : Side::Left;
    for (std::size_t i = 0; i < var.ring.size(); ++i) {
      put(triangle_path(inst, var.ring[i], i % 2 == 0 ? side : opposite(side)));
    }
    for (const TriHandle& t : var.tau) put(triangle_path(inst, t, side));
  }

  for (std::size_t c = 0; c < w.clauses.size(); ++c) {
    const ClauseWitness& cw = w.clauses[c];
    int true_pos = -1;
    int trues = 0;
    for (int i = 0; i < 3; ++i) {
      if (a.value(cw.vars[static_cast<std::size_t>(i)])) {
        ++trues;
        true_pos = i;
      }
    }
    if (trues != 1) {
      throw Error(ErrorCode::NotOneInThree, "clause " + std::to_string(c + 1) + " has " +
                                                std::to_string(trues) + " true variables");
    }
    for (std::size_t i = 0; i < 3; ++i) {
      Side side = a.value(cw.vars[i]) ? Side::Right : Side::Left;
      for (const TriHandle& t : cw.chains[i]) {
        side = opposite(side);
        put(triangle_path(inst, t, side));
      }
      put(triangle_path(inst, cw.inputs[i], opposite(side)));
    }
    // Drop (v,v_w), (v_w,v_next), (v_next,v_next2); keep v_next - v - v_next2 - v_w.
    const auto w0 = static_cast<std::size_t>(true_pos);
    std::vector<VertexId> order{cw.rim[(w0 + 1) % 3], cw.center, cw.rim[(w0 + 2) % 3], cw.rim[w0]};
    if (order.front() > order.back()) std::reverse(order.begin(), order.end());
    put({cw.part, std::move(order)});
  }

  Solution sol;
  for (PartId p = 0; p < inst.part_count(); ++p) {
    if (set[p]) {
      sol.paths.push_back(std::move(by_part[p]));
    } else if (inst.part(p).size() >= 2) {
      throw Error(ErrorCode::InconsistentGadget,
                  "witness does not cover part " + std::to_string(p));
    }
  }
  return sol;
}

// ---------------------------------------------------------------------------
// Oracle

std::optional<Assignment> oracle_1in3(const Formula& f) {
  if (f.nvars > kOracleMaxVars) {
    throw Error(ErrorCode::TooLarge, "oracle handles at most " + std::to_string(kOracleMaxVars) +
                                         " variables, formula has " + std::to_string(f.nvars));
  }
  validate_formula(f);
  std::vector<std::vector<std::size_t>> occurs(f.nvars + 1);
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    for (std::uint32_t v : f.clauses[c]) occurs[v].push_back(c);
  }
  std::vector<int> count(f.clauses.size(), 0);
  std::size_t unsatisfied = f.clauses.size();  // clauses whose count != 1
  Assignment current;
  current.values.assign(f.nvars, false);

  auto flip = [&](std::uint32_t v, int delta) {
    for (std::size_t c : occurs[v]) {
      const bool was = count[c] == 1;
      count[c] += delta;
      const bool now = count[c] == 1;
      if (was && !now) ++unsatisfied;
      if (!was && now) --unsatisfied;
    }
    current.values[v - 1] = delta > 0;
  };

  // Preorder walk over subsets with increasing elements visits true-sets in
  // lexicographic order.
  std::optional<Assignment> found;
  auto visit = [&](auto&& self, std::uint32_t next) -> bool {
    if (unsatisfied == 0) {
      found = current;
      return true;
    }
    for (std::uint32_t v = next; v <= f.nvars; ++v) {
      flip(v, +1);
      const bool done = self(self, v + 1);
      flip(v, -1);
      if (done) return true;
    }
    return false;
  };
  visit(visit, 1);
  return found;
}

}  // namespace c2p
