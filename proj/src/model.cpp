#include "c2p/model.hpp"

#include <algorithm>
#include <string>

#include "c2p/error.hpp"

namespace c2p {
namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::string edge_name(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

std::span<const EdgeId> Instance::crossing_partners(EdgeId e) const {
  return {partners_.data() + partner_offsets_[e], partners_.data() + partner_offsets_[e + 1]};
}

std::span<const EdgeId> Instance::part_edges(PartId p) const {
  return {part_edges_.data() + part_edge_offsets_[p],
          part_edges_.data() + part_edge_offsets_[p + 1]};
}

EdgeClass Instance::classify(EdgeId e) const { return classes_[e]; }

bool Instance::is_removable(EdgeId e) const {
  const EdgeClass c = classes_[e];
  return c.kind == EdgeKind::Clique && parts_[c.part].size() >= 3;
}

std::optional<EdgeId> Instance::find_edge(VertexId a, VertexId b) const {
  auto it = edge_index_.find(pair_key(a, b));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

bool operator==(const Instance& a, const Instance& b) {
  return a.n_ == b.n_ && a.edges_ == b.edges_ && a.crossings_ == b.crossings_ &&
         a.parts_ == b.parts_;
}

Instance build_instance(std::size_t n, std::vector<Edge> edges, std::vector<CrossingPair> crossings,
                        std::vector<std::vector<VertexId>> parts) {
  Instance inst;
  inst.n_ = n;

  inst.edge_index_.reserve(edges.size() * 2);
  for (std::size_t id = 0; id < edges.size(); ++id) {
    Edge& e = edges[id];
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge " + std::to_string(id) + " " + edge_name(e) + " with n=" + std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::SelfLoop, "edge " + std::to_string(id) + " " + edge_name(e));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    auto [it, inserted] = inst.edge_index_.emplace(pair_key(e.u, e.v), static_cast<EdgeId>(id));
    if (!inserted) {
      throw Error(ErrorCode::DuplicateEdge, "edge " + std::to_string(id) + " " + edge_name(e) +
                                                " repeats edge " + std::to_string(it->second));
    }
  }

  constexpr PartId kUnassigned = ~PartId{0};
  inst.part_of_.assign(n, kUnassigned);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    auto& part = parts[p];
    if (part.empty()) {
      throw Error(ErrorCode::PartitionNotCovering, "part " + std::to_string(p) + " is empty");
    }
    std::sort(part.begin(), part.end());
    for (VertexId v : part) {
      if (v >= n) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "part " + std::to_string(p) + " names vertex " + std::to_string(v));
      }
      if (inst.part_of_[v] != kUnassigned) {
        throw Error(ErrorCode::PartitionNotCovering,
                    "vertex " + std::to_string(v) + " is in parts " +
                        std::to_string(inst.part_of_[v]) + " and " + std::to_string(p));
      }
      inst.part_of_[v] = static_cast<PartId>(p);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (inst.part_of_[v] == kUnassigned) {
      throw Error(ErrorCode::PartitionNotCovering,
                  "vertex " + std::to_string(v) + " belongs to no part");
    }
  }

  inst.classes_.assign(edges.size(), EdgeClass{});
  inst.local_index_.assign(edges.size(), 0);
  inst.part_edge_offsets_.assign(parts.size() + 1, 0);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& part = parts[p];
    inst.max_part_size_ = std::max(inst.max_part_size_, part.size());
    std::uint32_t local = 0;
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (std::size_t j = i + 1; j < part.size(); ++j) {
        auto it = inst.edge_index_.find(pair_key(part[i], part[j]));
        if (it == inst.edge_index_.end()) {
          throw Error(ErrorCode::CliqueIncomplete,
                      "part " + std::to_string(p) + " lacks edge " +
                          edge_name(Edge{part[i], part[j]}));
        }
        inst.part_edges_.push_back(it->second);
        inst.classes_[it->second] = EdgeClass{EdgeKind::Clique, static_cast<PartId>(p)};
        inst.local_index_[it->second] = local++;
      }
    }
    inst.part_edge_offsets_[p + 1] = inst.part_edges_.size();
  }

  const std::size_t m = edges.size();
  std::vector<std::size_t> degree(m, 0);
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    CrossingPair& c = crossings[i];
    if (c.first >= m || c.second >= m) {
      throw Error(ErrorCode::UnknownEdgeInCrossing,
                  "crossing " + std::to_string(i) + " names edge " +
                      std::to_string(std::max(c.first, c.second)) + " of " + std::to_string(m));
    }
    if (c.first > c.second) std::swap(c.first, c.second);
    const Edge& a = edges[c.first];
    const Edge& b = edges[c.second];
    if (c.first == c.second || a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
      throw Error(ErrorCode::AdjacentCrossing,
                  "crossing " + std::to_string(i) + " between " + edge_name(a) + " and " +
                      edge_name(b));
    }
  }
  std::vector<std::size_t> order(crossings.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return crossings[x] < crossings[y]; });
  // Report the duplicate that appears later in the input.
  std::optional<std::size_t> dup;
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (crossings[order[k]] == crossings[order[k - 1]]) {
      const std::size_t later = std::max(order[k], order[k - 1]);
      if (!dup || later < *dup) dup = later;
    }
  }
  if (dup) {
    const CrossingPair& c = crossings[*dup];
    throw Error(ErrorCode::DuplicateCrossing,
                "crossing " + std::to_string(*dup) + " between " + edge_name(edges[c.first]) +
                    " and " + edge_name(edges[c.second]) + " listed twice");
  }
  std::sort(crossings.begin(), crossings.end());

  for (const CrossingPair& c : crossings) {
    ++degree[c.first];
    ++degree[c.second];
  }
  inst.partner_offsets_.assign(m + 1, 0);
  for (std::size_t e = 0; e < m; ++e) inst.partner_offsets_[e + 1] = inst.partner_offsets_[e] + degree[e];
  inst.partners_.assign(inst.partner_offsets_[m], 0);
  std::vector<std::size_t> fill(inst.partner_offsets_.begin(), inst.partner_offsets_.end() - 1);
  for (const CrossingPair& c : crossings) {
    inst.partners_[fill[c.first]++] = c.second;
    inst.partners_[fill[c.second]++] = c.first;
  }
  for (std::size_t e = 0; e < m; ++e) {
    std::sort(inst.partners_.begin() + static_cast<std::ptrdiff_t>(inst.partner_offsets_[e]),
              inst.partners_.begin() + static_cast<std::ptrdiff_t>(inst.partner_offsets_[e + 1]));
  }

  inst.edges_ = std::move(edges);
  inst.crossings_ = std::move(crossings);
  inst.parts_ = std::move(parts);
  return inst;
}

std::vector<Edge> canonical_edges(const std::vector<std::vector<VertexId>>& parts,
                                  std::span<const Edge> links) {
  std::vector<Edge> edges;
  for (auto part : parts) {
    std::sort(part.begin(), part.end());
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (std::size_t j = i + 1; j < part.size(); ++j) edges.push_back(Edge{part[i], part[j]});
    }
  }
  for (Edge e : links) {
    if (e.u > e.v) std::swap(e.u, e.v);
    edges.push_back(e);
  }
  return edges;
}

Instance assemble_instance(std::size_t n, std::vector<std::vector<VertexId>> parts,
                           std::span<const Edge> links,
                           std::span<const std::pair<Edge, Edge>> crossings) {
  std::vector<Edge> edges = canonical_edges(parts, links);
  std::unordered_map<std::uint64_t, EdgeId> index;
  index.reserve(edges.size() * 2);
  for (std::size_t id = 0; id < edges.size(); ++id) {
    index.emplace(pair_key(edges[id].u, edges[id].v), static_cast<EdgeId>(id));
  }
  auto lookup = [&](const Edge& e, std::size_t i) {
    auto it = index.find(pair_key(e.u, e.v));
    if (it == index.end()) {
      throw Error(ErrorCode::UnknownEdgeInCrossing,
                  "crossing " + std::to_string(i) + " names missing edge " + edge_name(e));
    }
    return it->second;
  };
  std::vector<CrossingPair> pairs;
  pairs.reserve(crossings.size());
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    pairs.push_back(CrossingPair{lookup(crossings[i].first, i), lookup(crossings[i].second, i)});
  }
  return build_instance(n, std::move(edges), std::move(pairs), std::move(parts));
}

bool has_canonical_edge_order(const Instance& inst) {
  std::vector<Edge> links;
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    if (inst.classify(e).kind == EdgeKind::Link) links.push_back(inst.edge(e));
  }
  const std::vector<Edge> expected = canonical_edges(inst.parts(), links);
  return std::equal(expected.begin(), expected.end(), inst.edges().begin(), inst.edges().end());
}

EdgeClass classify_edge(const Instance& inst, EdgeId e) { return inst.classify(e); }

std::size_t max_crossings_per_edge(const Instance& inst) {
  std::size_t k = 0;
  for (EdgeId e = 0; e < inst.edge_count(); ++e) k = std::max(k, inst.crossing_partners(e).size());
  return k;
}

std::vector<std::vector<VertexId>> spanning_paths(std::span<const VertexId> part) {
  if (part.size() < 2) {
    throw Error(ErrorCode::PartTooSmall,
                "spanning paths need at least two vertices, got " + std::to_string(part.size()));
  }
  if (part.size() > kMaxEnumerablePart) {
    throw Error(ErrorCode::TooLarge, "part of size " + std::to_string(part.size()) +
                                         " exceeds the enumeration limit of " +
                                         std::to_string(kMaxEnumerablePart));
  }
  std::vector<VertexId> perm(part.begin(), part.end());
  std::sort(perm.begin(), perm.end());
  std::vector<std::vector<VertexId>> paths;
  do {
    if (perm.front() < perm.back()) paths.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return paths;
}

}  // namespace c2p
