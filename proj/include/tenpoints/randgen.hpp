#pragma once

#include <cstdint>
#include <random>

#include "tenpoints/kpartite_graph.hpp"

namespace tenpoints {

/// Seeded stream used by every generator in this project: MT19937-64 with
/// hand-written mappings to integers and doubles, so draws do not depend on
/// the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }
  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on the inclusive range [lo, hi], unbiased by rejection.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  bool coin(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

struct GrunertParams {
  std::size_t k = 0;
  std::size_t min_part = 1;
  std::size_t max_part = 1;
  double a = 0;
  double b = 0;
  std::uint64_t seed = 0;
};

struct RareAttractionParams {
  std::size_t k = 0;
  std::size_t max_part = 1;
  double a = 0;
  std::uint64_t seed = 0;
};

/// Part sizes uniform in [min_part, max_part]; each vertex v gets p_v uniform
/// in [a, b]; each cross-part pair {v, w} is an edge with probability
/// (p_v + p_w) / 2. Draw order: sizes, then p_v by id, then pairs (u < v)
/// lexicographically.
KPartiteGraph gen_grunert(const GrunertParams& p);

/// Part i (1-based) has 1 + floor(i (max_part - 1) / k) vertices. A pair
/// between parts of sizes s and t is an edge with probability f(min(s, t)),
/// f affine with f(1) = 1 and f(max_part) = a.
KPartiteGraph gen_rare(const RareAttractionParams& p);

std::vector<std::size_t> rare_part_sizes(std::size_t k, std::size_t max_part);
double rare_edge_probability(std::size_t smaller_part, std::size_t max_part, double a);

}  // namespace tenpoints
