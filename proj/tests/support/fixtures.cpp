#include "fixtures.hpp"

#include <algorithm>

#include "c2p/error.hpp"

namespace c2p::testing {

Instance make_instance(std::size_t n, std::vector<std::vector<VertexId>> parts,
                       std::vector<Edge> links, std::vector<EdgePair> crossings) {
  return assemble_instance(n, std::move(parts), links, crossings);
}

Instance triangle() { return make_instance(3, {{0, 1, 2}}); }

Instance k4_with_crossing() {
  return make_instance(4, {{0, 1, 2, 3}}, {}, {{Edge{0, 2}, Edge{1, 3}}});
}

ForcedClause forced_clause_gadget(const std::array<Side, 3>& removed) {
  InstanceBuilder b;
  ClauseWitness w = append_clause_gadget(b);
  for (std::size_t i = 0; i < 3; ++i) b.force_removed(w.inputs[i].edge(removed[i]));
  return {b.build(), std::move(w)};
}

ForcedChain forced_chain(std::size_t m, Side source_side) {
  InstanceBuilder b;
  const TriHandle source = b.add_triangle();
  std::vector<TriHandle> chain = append_chain(b, m, true);
  const TriHandle sink = b.add_triangle();
  b.join(source, chain.front());
  b.join(chain.back(), sink);
  b.force_removed(source.edge(source_side));
  return {b.build(), source, sink};
}

std::optional<Instance> try_random_instance(const GenParams& params) {
  try {
    return random_instance(params);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParamConflict) throw;
    return std::nullopt;
  }
}

std::vector<Instance> small_corpus(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Instance> out;
  while (out.size() < count) {
    GenParams p;
    p.seed = rng.next();
    p.parts = rng.between(1, 6);
    p.min_part_size = 1;
    p.max_part_size = rng.between(2, 4);
    p.links = rng.between(0, 3);
    p.crossing_permille = static_cast<std::uint32_t>(rng.between(50, 600));
    p.cap = rng.between(1, 3);
    if (auto inst = try_random_instance(p)) out.push_back(std::move(*inst));
  }
  return out;
}

std::vector<Formula> tiny_formulas() {
  std::vector<Formula> out;
  for (std::uint32_t n = 3; n <= 4; ++n) {
    std::vector<std::array<std::uint32_t, 3>> triples;
    for (std::uint32_t a = 1; a <= n; ++a)
      for (std::uint32_t b = a + 1; b <= n; ++b)
        for (std::uint32_t c = b + 1; c <= n; ++c) triples.push_back({a, b, c});
    for (const auto& t : triples) out.push_back({n, {t}});
    for (const auto& t : triples)
      for (const auto& u : triples) out.push_back({n, {t, u}});
  }
  return out;
}

std::vector<Formula> random_formulas(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Formula> out;
  while (out.size() < count) {
    const std::size_t clauses = rng.between(1, 3);
    // Every variable must appear, so at most 3 * clauses of them.
    const std::size_t nvars = rng.between(3, std::min<std::size_t>(5, 3 * clauses));
    out.push_back(random_formula(rng.next(), nvars, clauses));
  }
  return out;
}

std::vector<EdgeId> path_edges(const Instance& inst, const std::vector<VertexId>& order) {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) out.push_back(*inst.find_edge(order[i], order[i + 1]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace c2p::testing
