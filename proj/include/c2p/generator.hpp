#pragma once

// Seeded instance and formula generators for cross-solver testing.
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by the
// standard, and bounded draws use rejection sampling on its raw 64-bit output
// instead of std::uniform_int_distribution (whose algorithm is left to the
// implementation). Only integer arithmetic is used, so a seed produces the
// same corpus on every platform.

#include <cstdint>
#include <random>

#include "c2p/model.hpp"
#include "c2p/reduction.hpp"

namespace c2p {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 engine_;
};

struct GenParams {
  std::uint64_t seed = 1;
  std::size_t parts = 4;
  std::size_t min_part_size = 1;
  std::size_t max_part_size = 3;
  std::size_t links = 0;
  /// Target share of the crossing capacity, in thousandths (0..1000). The
  /// capacity is min(cap * |E| / 2, number of non-adjacent edge pairs).
  std::uint32_t crossing_permille = 200;
  /// Maximum crossings per edge.
  std::size_t cap = 1;
  /// Keep crossings compatible with a simple 1-plane drawing: cliques crossing
  /// other cliques come in pairs, have at most four vertices, and carry no
  /// internal crossing.
  bool realizable = false;
};

/// Throws ParamConflict for inconsistent parameters or when rejection sampling
/// cannot place the requested links or crossings.
Instance random_instance(const GenParams& params);

/// Clauses of three distinct variables (sorted), every variable used at least
/// once. Throws Underconstrained when nvars < 3 or 3 * nclauses < nvars, and
/// when no covering formula turns up after a bounded number of re-rolls.
Formula random_formula(std::uint64_t seed, std::size_t nvars, std::size_t nclauses);

}  // namespace c2p
