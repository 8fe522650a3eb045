#include "c2p/generator.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>

#include "c2p/error.hpp"

namespace c2p {
namespace {

constexpr PartId kNoPart = std::numeric_limits<PartId>::max();

std::uint64_t key(std::uint64_t a, std::uint64_t b) {
  if (a > b) std::swap(a, b);
  return (a << 32) | b;
}

void check_params(const GenParams& p) {
  auto conflict = [](const std::string& why) { throw Error(ErrorCode::ParamConflict, why); };
  if (p.parts == 0) conflict("at least one part is required");
  if (p.min_part_size < 1 || p.min_part_size > p.max_part_size) {
    conflict("part sizes must satisfy 1 <= min <= max");
  }
  if (p.max_part_size > kMaxEnumerablePart) {
    conflict("part size above " + std::to_string(kMaxEnumerablePart));
  }
  if (p.crossing_permille > 1000) conflict("crossing density above 1000 permille");
  if (p.cap == 0 && p.crossing_permille > 0) conflict("crossings requested with cap 0");
  if (p.cap == 1 && p.max_part_size > 6) conflict("1-plane output allows cliques of at most 6");
  if (p.realizable && p.cap != 1) conflict("realizable output is defined for cap 1 only");
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

Instance random_instance(const GenParams& params) {
  check_params(params);
  Rng rng(params.seed);

  std::vector<std::vector<VertexId>> parts(params.parts);
  std::vector<PartId> part_of;
  VertexId next = 0;
  for (PartId p = 0; p < params.parts; ++p) {
    const std::size_t size = rng.between(params.min_part_size, params.max_part_size);
    for (std::size_t i = 0; i < size; ++i) {
      parts[p].push_back(next++);
      part_of.push_back(p);
    }
  }
  const std::size_t n = next;

  std::vector<Edge> links;
  if (params.links > 0) {
    std::unordered_set<std::uint64_t> used;
    const std::uint64_t budget = 64 * params.links + 1024;
    for (std::uint64_t attempt = 0; links.size() < params.links; ++attempt) {
      if (attempt == budget) {
        throw Error(ErrorCode::ParamConflict,
                    "could not place " + std::to_string(params.links) + " link edges");
      }
      const auto u = static_cast<VertexId>(rng.below(n));
      const auto v = static_cast<VertexId>(rng.below(n));
      if (part_of[u] == part_of[v] || !used.insert(key(u, v)).second) continue;
      links.push_back(Edge{std::min(u, v), std::max(u, v)});
    }
  }

  std::vector<Edge> edges = canonical_edges(parts, links);
  const std::size_t m = edges.size();
  std::vector<PartId> clique_part(m, kNoPart);
  {
    std::size_t id = 0;
    for (PartId p = 0; p < parts.size(); ++p) {
      const std::size_t s = parts[p].size();
      for (std::size_t k = 0; k < s * (s - 1) / 2; ++k) clique_part[id++] = p;
    }
  }

  std::vector<std::uint64_t> degree(n, 0);
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::uint64_t non_adjacent = static_cast<std::uint64_t>(m) * (m ? m - 1 : 0) / 2;
  for (std::uint64_t d : degree) non_adjacent -= d * (d ? d - 1 : 0) / 2;
  const std::uint64_t capacity =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(params.cap) * m / 2, non_adjacent);
  const std::uint64_t target = capacity * params.crossing_permille / 1000;

  std::vector<CrossingPair> crossings;
  std::vector<std::size_t> load(m, 0);
  std::unordered_set<std::uint64_t> used;
  std::vector<PartId> partner(parts.size(), kNoPart);
  std::vector<bool> self_crossed(parts.size(), false);
  auto removable = [&](EdgeId e) {
    return clique_part[e] != kNoPart && parts[clique_part[e]].size() >= 3;
  };
  auto realizable_ok = [&](EdgeId e, EdgeId f) {
    if (!removable(e) || !removable(f)) return true;
    const PartId p = clique_part[e], q = clique_part[f];
    if (p == q) return partner[p] == kNoPart;
    if (parts[p].size() > 4 || parts[q].size() > 4) return false;
    if (self_crossed[p] || self_crossed[q]) return false;
    return (partner[p] == kNoPart || partner[p] == q) && (partner[q] == kNoPart || partner[q] == p);
  };

  const std::uint64_t budget = 64 * target + 4096;
  for (std::uint64_t attempt = 0; crossings.size() < target; ++attempt) {
    if (attempt == budget) {
      throw Error(ErrorCode::ParamConflict, "could not place " + std::to_string(target) +
                                                " crossings under cap " + std::to_string(params.cap));
    }
    const auto e = static_cast<EdgeId>(rng.below(m));
    const auto f = static_cast<EdgeId>(rng.below(m));
    if (e == f) continue;
    const Edge& a = edges[e];
    const Edge& b = edges[f];
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
    if (load[e] >= params.cap || load[f] >= params.cap) continue;
    if (params.realizable && !realizable_ok(e, f)) continue;
    if (!used.insert(key(e, f)).second) continue;
    ++load[e];
    ++load[f];
    crossings.push_back(CrossingPair{std::min(e, f), std::max(e, f)});
    if (params.realizable && removable(e) && removable(f)) {
      const PartId p = clique_part[e], q = clique_part[f];
      if (p == q) {
        self_crossed[p] = true;
      } else {
        partner[p] = q;
        partner[q] = p;
      }
    }
  }
  return build_instance(n, std::move(edges), std::move(crossings), std::move(parts));
}

Formula random_formula(std::uint64_t seed, std::size_t nvars, std::size_t nclauses) {
  if (nvars < 3 || 3 * nclauses < nvars) {
    throw Error(ErrorCode::Underconstrained,
                std::to_string(nclauses) + " clauses cannot use all " + std::to_string(nvars) +
                    " variables (need nvars >= 3 and 3 * nclauses >= nvars)");
  }
  Rng rng(seed);
  constexpr int kRerolls = 10000;
  for (int attempt = 0; attempt < kRerolls; ++attempt) {
    Formula f;
    f.nvars = nvars;
    std::vector<bool> used(nvars + 1, false);
    for (std::size_t c = 0; c < nclauses; ++c) {
      std::array<std::uint32_t, 3> clause{};
      for (std::size_t k = 0; k < 3; ++k) {
        std::uint32_t v;
        do {
          v = static_cast<std::uint32_t>(rng.between(1, nvars));
        } while (std::find(clause.begin(), clause.begin() + static_cast<std::ptrdiff_t>(k), v) !=
                 clause.begin() + static_cast<std::ptrdiff_t>(k));
        clause[k] = v;
        used[v] = true;
      }
      std::sort(clause.begin(), clause.end());
      f.clauses.push_back(clause);
    }
    if (std::all_of(used.begin() + 1, used.end(), [](bool b) { return b; })) return f;
  }
  throw Error(ErrorCode::Underconstrained, "no formula using every variable after re-rolls");
}

}  // namespace c2p
