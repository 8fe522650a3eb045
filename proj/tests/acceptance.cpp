// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "c2p/generator.hpp"
#include "c2p/io.hpp"
#include "c2p/reduction.hpp"
#include "c2p/solver_2sat.hpp"
#include "c2p/solver_exact.hpp"
#include "c2p/solver_oneplane.hpp"
#include "c2p/verify.hpp"
#include "fixtures.hpp"

using namespace c2p;
using namespace c2p::testing;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string first_failure;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool run_criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.first_failure = std::string("exception: ") + e.what();
  }
  const double elapsed = seconds_since(t0);
  const bool in_budget = elapsed <= budget_s;
  const bool pass = o.ok && in_budget;
  std::printf("[%s] %d %s: %s (%.2f s, budget %.0f s)", pass ? "PASS" : "FAIL", id, name,
              o.detail.c_str(), elapsed, budget_s);
  if (!o.ok) std::printf(" first failure: %s", o.first_failure.c_str());
  if (!in_budget) std::printf(" over budget");
  std::printf("\n");
  std::fflush(stdout);
  return pass;
}

std::string describe(const Formula& f) { return to_string(f); }

Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

// Formulas of criterion 1, also audited by criterion 4.
std::vector<Formula> equivalence_corpus() {
  std::vector<Formula> corpus{Formula{3, {{1, 2, 3}}}};
  for (const Formula& f : tiny_formulas()) corpus.push_back(f);
  for (const Formula& f : random_formulas(60, 20240601)) corpus.push_back(f);
  return corpus;
}

// Every positive formula with at most two clauses is satisfiable, so the
// required corpus never reaches the unsatisfiable direction. These extra
// formulas do.
std::vector<Formula> unsat_supplement() {
  std::vector<Formula> out{Formula{4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}}};
  Rng rng(424242);
  while (out.size() < 40) {
    const std::size_t clauses = rng.between(4, 6);
    const std::size_t nvars = rng.between(4, 6);
    out.push_back(random_formula(rng.next(), nvars, clauses));
  }
  return out;
}

Outcome reduction_equivalence() {
  Outcome o;
  std::size_t sat = 0, unsat = 0;
  const auto corpus = equivalence_corpus();
  const auto supplement = unsat_supplement();
  std::vector<Formula> all = corpus;
  all.insert(all.end(), supplement.begin(), supplement.end());
  std::size_t required_unsat = 0;
  for (const Formula& f : all) {
    const Reduction r = reduce_formula(f);
    const auto sol = solve_exact(r.instance);
    const auto oracle = oracle_1in3(f);
    o.require(sol.has_value() == oracle.has_value(), "verdicts differ on\n" + describe(f));
    if (sol) {
      o.require(verify_solution(r.instance, *sol).valid(), "solver output invalid");
      o.require(satisfies_one_in_three(f, extract_assignment(r.instance, r.witness, *sol)),
                "extracted assignment not 1-in-3 on\n" + describe(f));
    }
    if (oracle) {
      ++sat;
      const Solution s = solution_from_assignment(r.instance, r.witness, *oracle);
      o.require(verify_solution(r.instance, s).valid(), "constructed solution invalid on\n" + describe(f));
      const Assignment back = extract_assignment(r.instance, r.witness, s);
      for (std::uint32_t v = 1; v <= f.nvars; ++v) {
        if (r.witness.variables[v - 1].tau.empty()) continue;  // variable in no clause
        o.require(back.value(v) == oracle->value(v), "round trip differs on\n" + describe(f));
      }
    } else {
      ++unsat;
      if (&f - all.data() < static_cast<std::ptrdiff_t>(corpus.size())) ++required_unsat;
    }
  }
  o.require(unsat > 0, "no unsatisfiable formula exercised");
  o.detail = std::to_string(corpus.size()) + " required + " + std::to_string(supplement.size()) +
             " extra formulas, " + std::to_string(sat) + " satisfiable / " + std::to_string(unsat) +
             " unsatisfiable (" + std::to_string(required_unsat) +
             " in the required set), verdicts and round trips agree";
  return o;
}

Outcome variable_gadget_uniformity() {
  Outcome o;
  std::ostringstream detail;
  for (std::size_t n = 1; n <= 3; ++n) {
    const VariableGadget g = build_variable_gadget(n);
    std::set<Side> sides;
    std::size_t solutions = 0;
    for_each_product_solution(g.instance, [&](const Solution& s) {
      ++solutions;
      const Side side = removed_side(g.instance, s, g.witness.tau[0]);
      sides.insert(side);
      for (const TriHandle& t : g.witness.tau) {
        o.require(removed_side(g.instance, s, t) == side, "tau sides differ for n=" + std::to_string(n));
      }
      return true;
    });
    o.require(sides == std::set<Side>{Side::Left, Side::Right},
              "both uniform sides must occur for n=" + std::to_string(n));
    detail << (n > 1 ? ", " : "") << "n=" << n << ": " << solutions << " of " << product_size(g.instance);
  }
  o.detail = detail.str() + " path combinations valid, all uniform, both sides present";
  return o;
}

Outcome clause_truth_table() {
  Outcome o;
  std::size_t feasible = 0;
  for (int mask = 0; mask < 8; ++mask) {
    std::array<Side, 3> sides{};
    int trues = 0;
    for (int i = 0; i < 3; ++i) {
      const bool t = (mask >> i) & 1;
      trues += t;
      sides[static_cast<std::size_t>(i)] = t ? Side::Right : Side::Left;
    }
    const ForcedClause g = forced_clause_gadget(sides);
    const bool expect = trues == 1;
    const bool brute = brute_force_feasible(g.instance);
    const auto sol = solve_exact(g.instance);
    const std::string tag = "inputs mask " + std::to_string(mask);
    o.require(brute == expect, tag + ": product enumeration disagrees");
    o.require(sol.has_value() == expect, tag + ": exact solver disagrees");
    if (!expect || !sol) continue;
    ++feasible;
    const ClauseWitness& cw = g.witness;
    std::size_t w = 0;
    while (sides[w] != Side::Right) ++w;
    // Drop (v,v_w), (v_w,v_next), (v_next,v_next2).
    std::vector<VertexId> order{cw.rim[(w + 1) % 3], cw.center, cw.rim[(w + 2) % 3], cw.rim[w]};
    if (order.front() > order.back()) std::reverse(order.begin(), order.end());
    Solution s = *sol;
    for (PathChoice& c : s.paths) {
      if (c.part == cw.part) c.order = order;
    }
    o.require(verify_solution(g.instance, s).valid(), tag + ": documented removal set does not verify");
    std::vector<EdgeId> removed = removed_edges(g.instance, s);
    std::vector<EdgeId> expected{cw.spokes[w], cw.outer[w], cw.outer[(w + 1) % 3]};
    std::vector<EdgeId> in_k4;
    for (EdgeId e : removed) {
      if (g.instance.classify(e).part == cw.part) in_k4.push_back(e);
    }
    std::sort(expected.begin(), expected.end());
    o.require(in_k4 == expected, tag + ": removal set differs");
  }
  o.detail = "8 input combinations, feasible exactly for the " + std::to_string(feasible) +
             " with one True input";
  return o;
}

Outcome three_plane_audit() {
  Outcome o;
  std::size_t audited = 0, triangles = 0;
  for (const Formula& f : equivalence_corpus()) {
    const Reduction r = reduce_formula(f);
    const Instance& inst = r.instance;
    ++audited;
    const std::string tag = "formula\n" + describe(f);
    o.require(max_crossings_per_edge(inst) == 3, tag + ": max crossings per edge is not 3");
    for (const auto& part : inst.parts()) {
      o.require(part.size() == 3 || part.size() == 4, tag + ": part size outside {3,4}");
    }
    // Simplicity: rebuilding from the raw lists re-runs every structural check.
    const std::vector<Edge> edges(inst.edges().begin(), inst.edges().end());
    const std::vector<CrossingPair> crossings(inst.crossings().begin(), inst.crossings().end());
    o.require(build_instance(inst.vertex_count(), edges, crossings, inst.parts()) == inst,
              tag + ": rebuild differs");
    for (const CrossingPair& c : inst.crossings()) {
      const Edge& a = inst.edge(c.first);
      const Edge& b = inst.edge(c.second);
      o.require(a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v, tag + ": adjacent crossing");
    }
    auto base_free = [&](const TriHandle& t) {
      ++triangles;
      o.require(inst.crossing_partners(t.base).empty(), tag + ": base edge crossed");
    };
    for (const auto& v : r.witness.variables) {
      for (const TriHandle& t : v.ring) base_free(t);
      for (const TriHandle& t : v.tau) base_free(t);
    }
    for (const ClauseWitness& cw : r.witness.clauses) {
      for (const TriHandle& t : cw.inputs) base_free(t);
      for (const auto& chain : cw.chains) {
        for (const TriHandle& t : chain) base_free(t);
      }
      for (EdgeId e : cw.spokes) o.require(inst.crossing_partners(e).size() == 1, tag + ": spoke count");
      for (EdgeId e : cw.outer) o.require(inst.crossing_partners(e).size() == 2, tag + ": outer count");
    }
  }
  o.detail = std::to_string(audited) + " reduced instances, " + std::to_string(triangles) +
             " triangles; k = 3, bases 0, spokes 1, outer 2, parts in {3,4}";
  return o;
}

// Every subset of `candidates` as the crossing set of `base`.
template <typename Check>
std::size_t for_each_subset(const std::vector<std::vector<VertexId>>& parts, std::size_t n,
                            const std::vector<Edge>& links, const std::vector<EdgePair>& candidates,
                            Check&& check) {
  const std::size_t total = std::size_t{1} << candidates.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<EdgePair> crossings;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if ((mask >> i) & 1) crossings.push_back(candidates[i]);
    }
    check(make_instance(n, parts, links, crossings));
  }
  return total;
}

std::vector<Edge> triangle_edges(VertexId a) { return {{a, a + 1}, {a, a + 2}, {a + 1, a + 2}}; }

// Left (b,c) and right (a,c) of a triangle a<b<c.
std::vector<Edge> triangle_sides(VertexId a) { return {{a + 1, a + 2}, {a, a + 2}}; }

std::vector<EdgePair> all_pairs(const std::vector<Edge>& xs, const std::vector<Edge>& ys) {
  std::vector<EdgePair> out;
  for (const Edge& x : xs) {
    for (const Edge& y : ys) out.push_back({x, y});
  }
  return out;
}

Outcome two_sat_agreement() {
  Outcome o;
  std::size_t instances = 0, feasible = 0;
  auto check = [&](const Instance& inst) {
    ++instances;
    const auto exact = solve_exact(inst);
    const auto sat = solve_via_2sat(inst);
    o.require(exact.has_value() == sat.has_value(), "verdicts differ on\n" + to_string(inst));
    if (sat) {
      ++feasible;
      o.require(verify_solution(inst, *sat).valid(), "2-SAT solution invalid on\n" + to_string(inst));
    }
  };
  auto concat = [](std::vector<EdgePair> a, const std::vector<EdgePair>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  // Two triangles, any subset of the 9 cross pairs.
  for_each_subset({{0, 1, 2}, {3, 4, 5}}, 6, {}, all_pairs(triangle_edges(0), triangle_edges(3)), check);
  // Two triangles and an unremovable pair: 15 candidate crossings.
  {
    const std::vector<Edge> pair{{6, 7}};
    auto cands = concat(all_pairs(triangle_edges(0), triangle_edges(3)),
                        concat(all_pairs(triangle_edges(0), pair), all_pairs(triangle_edges(3), pair)));
    for_each_subset({{0, 1, 2}, {3, 4, 5}, {6, 7}}, 8, {}, cands, check);
  }
  // Three triangles, crossings among left/right sides.
  {
    auto cands = concat(all_pairs(triangle_sides(0), triangle_sides(3)),
                        concat(all_pairs(triangle_sides(0), triangle_sides(6)),
                               all_pairs(triangle_sides(3), triangle_sides(6))));
    for_each_subset({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}, 9, {}, cands, check);
  }
  // Four triangles in a ring, crossings between consecutive sides.
  {
    std::vector<EdgePair> cands;
    for (VertexId i = 0; i < 4; ++i) {
      cands = concat(cands, all_pairs(triangle_sides(3 * i), triangle_sides(3 * ((i + 1) % 4))));
    }
    for_each_subset({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}}, 12, {}, cands, check);
  }
  // Five parts: a path of three triangles plus a link edge that may cross any side.
  {
    const std::vector<Edge> link{{9, 10}};
    std::vector<Edge> sides;
    for (VertexId a : {0u, 3u, 6u}) {
      for (const Edge& e : triangle_sides(a)) sides.push_back(e);
    }
    auto cands = concat(concat(all_pairs(triangle_sides(0), triangle_sides(3)),
                               all_pairs(triangle_sides(3), triangle_sides(6))),
                        all_pairs(sides, link));
    for_each_subset({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9}, {10}}, 11, link, cands, check);
  }
  const std::size_t exhaustive = instances;

  std::size_t random = 0;
  for (std::uint64_t seed = 1; random < 200; ++seed) {
    GenParams p;
    p.seed = 7000 + seed;
    p.parts = 2 + seed % 11;
    p.max_part_size = 3;
    p.links = seed % 4;
    p.crossing_permille = static_cast<std::uint32_t>(100 + (seed * 131) % 900);
    p.cap = 1 + seed % 3;
    if (const auto inst = try_random_instance(p)) {
      check(*inst);
      ++random;
    }
  }
  o.detail = std::to_string(exhaustive) + " exhaustive-family + " + std::to_string(random) +
             " random instances, " + std::to_string(feasible) + " feasible, verdicts agree";
  return o;
}

// Fastest of several trials, each repeating the solve until it has run long
// enough to time reliably. Returns -1 unless the solve runs to a solution.
double time_solve(const Instance& inst) {
  double best = 1e9;
  for (int trial = 0; trial < 7; ++trial) {
    const auto t0 = Clock::now();
    std::size_t reps = 0;
    do {
      const OnePlaneResult r = solve_one_plane(inst);
      if (r.status != OnePlaneStatus::Feasible) return -1;
      ++reps;
    } while (seconds_since(t0) < 0.2);
    best = std::min(best, seconds_since(t0) / static_cast<double>(reps));
  }
  return best;
}

// Random feasible 1-plane instance with `parts` parts: a disjoint union of
// seeded 10-part blocks, each kept only if feasible on its own. A single
// random draw of this size almost always holds some infeasible component and
// the solver would stop there.
Instance scaling_instance(std::size_t parts) {
  constexpr std::size_t kBlock = 10;
  Rng rng(31337);
  std::size_t n = 0;
  std::vector<std::vector<VertexId>> all_parts;
  std::vector<Edge> links;
  std::vector<EdgePair> crossings;
  while (all_parts.size() < parts) {
    GenParams p;
    p.seed = rng.next();
    p.parts = kBlock;
    p.max_part_size = 4;
    p.links = 2;
    p.crossing_permille = 500;
    p.cap = 1;
    p.realizable = true;
    const auto block = try_random_instance(p);
    if (!block || solve_one_plane(*block).status != OnePlaneStatus::Feasible) continue;
    const auto shift = static_cast<VertexId>(n);
    auto moved = [shift](Edge e) { return Edge{e.u + shift, e.v + shift}; };
    for (const auto& part : block->parts()) {
      std::vector<VertexId> q;
      for (VertexId v : part) q.push_back(v + shift);
      all_parts.push_back(std::move(q));
    }
    for (EdgeId e = 0; e < block->edge_count(); ++e) {
      if (block->classify(e).kind == EdgeKind::Link) links.push_back(moved(block->edge(e)));
    }
    for (const CrossingPair& c : block->crossings()) {
      crossings.push_back({moved(block->edge(c.first)), moved(block->edge(c.second))});
    }
    n += block->vertex_count();
  }
  return make_instance(n, std::move(all_parts), std::move(links), std::move(crossings));
}

Outcome one_plane_agreement_and_scaling() {
  Outcome o;
  std::size_t checked = 0, feasible = 0;
  for (std::uint64_t seed = 1; checked < 200; ++seed) {
    GenParams p;
    p.seed = 9000 + seed;
    p.parts = 2 + seed % 14;
    p.max_part_size = 2 + seed % 5;
    p.links = seed % 5;
    p.crossing_permille = static_cast<std::uint32_t>(300 + (seed * 97) % 700);
    p.cap = 1;
    p.realizable = true;
    const auto inst = try_random_instance(p);
    if (!inst) continue;
    ++checked;
    const OnePlaneResult r = solve_one_plane(*inst);
    const auto exact = solve_exact(*inst);
    o.require(r.status != OnePlaneStatus::NotOnePlane, "generator produced a non 1-plane instance");
    o.require((r.status == OnePlaneStatus::Feasible) == exact.has_value(),
              "verdicts differ on\n" + to_string(*inst));
    o.require(!r.has_unrealizable(), "realizable instance flagged");
    if (r.solution) {
      ++feasible;
      o.require(verify_solution(*inst, *r.solution).valid(), "1-plane solution invalid");
    }
  }

  const std::vector<std::size_t> sizes{1000, 2000, 4000, 8000};
  std::vector<double> xs, ys;
  std::ostringstream timings;
  for (std::size_t n : sizes) {
    const Instance inst = scaling_instance(n);
    const double t = time_solve(inst);
    o.require(t > 0, "scaling instance not solved");
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(t));
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s%zu parts/%zu crossings: %.3g ms", n == sizes.front() ? "" : ", ", n,
                  inst.crossings().size(), t * 1e3);
    timings << buf;
  }
  const double mx = (xs[0] + xs[1] + xs[2] + xs[3]) / 4, my = (ys[0] + ys[1] + ys[2] + ys[3]) / 4;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  o.require(std::abs(slope - 1.0) <= 0.3, "log-log slope out of range");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", slope);
  o.detail = std::to_string(checked) + " random realizable instances (" + std::to_string(feasible) +
             " feasible) agree; scaling [" + timings.str() + "] slope " + buf + " (target 1.0 +- 0.3)";
  return o;
}

Outcome chain_parity() {
  Outcome o;
  std::ostringstream detail;
  for (std::size_t m : {1, 2, 3}) {
    const bool odd = m % 2 == 1;
    for (Side source : {Side::Left, Side::Right}) {
      const ForcedChain fc = forced_chain(m, source);
      const Side expected = odd ? source : opposite(source);
      std::size_t solutions = 0;
      for_each_product_solution(fc.instance, [&](const Solution& s) {
        ++solutions;
        o.require(removed_side(fc.instance, s, fc.sink) == expected,
                  "m=" + std::to_string(m) + " transfers the wrong side");
        return true;
      });
      o.require(solutions > 0, "m=" + std::to_string(m) + " has no solution");
    }
    detail << (m > 1 ? ", " : "") << "m=" << m << (odd ? " preserves" : " inverts (control)");
  }
  o.detail = detail.str();
  return o;
}

Outcome exact_vs_product() {
  Outcome o;
  const auto corpus = small_corpus(100, 8888);
  std::size_t feasible = 0, parts_max = 0, size_max = 0, crossings = 0;
  for (const Instance& inst : corpus) {
    parts_max = std::max(parts_max, inst.part_count());
    size_max = std::max(size_max, inst.max_part_size());
    crossings += inst.crossings().size();
    const bool brute = brute_force_feasible(inst);
    const auto sol = solve_exact(inst);
    o.require(sol.has_value() == brute, "verdicts differ on\n" + to_string(inst));
    if (sol) {
      ++feasible;
      o.require(verify_solution(inst, *sol).valid(), "exact solution invalid");
    }
  }
  o.require(corpus.size() == 100 && parts_max <= 6 && size_max <= 4, "corpus outside bounds");
  o.detail = std::to_string(corpus.size()) + " instances (<= " + std::to_string(parts_max) +
             " parts, size <= " + std::to_string(size_max) + ", " + std::to_string(crossings) +
             " crossings total), " + std::to_string(feasible) + " feasible, verdicts agree";
  return o;
}

}  // namespace

int main() {
  bool all = true;
  all &= run_criterion(1, "reduction equivalence", 60, reduction_equivalence);
  all &= run_criterion(2, "variable gadget uniformity", 10, variable_gadget_uniformity);
  all &= run_criterion(3, "clause gadget truth table", 5, clause_truth_table);
  all &= run_criterion(4, "3-plane audit of reduced instances", 10, three_plane_audit);
  all &= run_criterion(5, "2-SAT agrees with exact", 60, two_sat_agreement);
  all &= run_criterion(6, "1-plane agreement and linear scaling", 120, one_plane_agreement_and_scaling);
  all &= run_criterion(7, "chain parity", 5, chain_parity);
  all &= run_criterion(8, "exact agrees with product enumeration", 60, exact_vs_product);
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
