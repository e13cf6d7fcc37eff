#include "tenpoints/randgen.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tenpoints {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<std::int64_t>(x % span);
}

namespace {

template <class Prob>
KPartiteGraph sample_edges(const std::vector<std::size_t>& sizes, Rng& rng, Prob prob) {
  KPartiteGraphBuilder builder(sizes);
  const std::size_t n = builder.vertex_count();
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      if (builder.part_of(u) == builder.part_of(v)) continue;
      if (rng.coin(prob(u, v))) builder.add_edge(u, v);
    }
  return std::move(builder).finish();
}

}  // namespace

KPartiteGraph gen_grunert(const GrunertParams& p) {
  if (p.min_part > p.max_part) throw std::invalid_argument("grunert: min_part > max_part");
  if (!(0 <= p.a && p.a <= p.b && p.b <= 1)) throw std::invalid_argument("grunert: need 0 <= a <= b <= 1");
  Rng rng(p.seed);
  std::vector<std::size_t> sizes(p.k);
  for (auto& s : sizes)
    s = static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(p.min_part),
                                                 static_cast<std::int64_t>(p.max_part)));
  std::size_t n = 0;
  for (auto s : sizes) n += s;
  std::vector<double> weight(n);
  for (auto& w : weight) w = p.a + (p.b - p.a) * rng.uniform01();
  return sample_edges(sizes, rng, [&](VertexId u, VertexId v) { return (weight[u] + weight[v]) / 2; });
}

std::vector<std::size_t> rare_part_sizes(std::size_t k, std::size_t max_part) {
  std::vector<std::size_t> sizes(k);
  for (std::size_t i = 1; i <= k; ++i) sizes[i - 1] = 1 + (i * (max_part - 1)) / k;
  return sizes;
}

double rare_edge_probability(std::size_t smaller_part, std::size_t max_part, double a) {
  if (max_part <= 1) return 1.0;
  const double t = static_cast<double>(smaller_part - 1) / static_cast<double>(max_part - 1);
  return 1.0 + (a - 1.0) * t;
}

KPartiteGraph gen_rare(const RareAttractionParams& p) {
  if (p.max_part < 1) throw std::invalid_argument("rare: max_part must be at least 1");
  if (!(0 <= p.a && p.a <= 1)) throw std::invalid_argument("rare: need 0 <= a <= 1");
  Rng rng(p.seed);
  const auto sizes = rare_part_sizes(p.k, p.max_part);
  std::vector<std::size_t> size_of;
  for (std::size_t s : sizes) size_of.insert(size_of.end(), s, s);
  return sample_edges(sizes, rng, [&](VertexId u, VertexId v) {
    return rare_edge_probability(std::min(size_of[u], size_of[v]), p.max_part, p.a);
  });
}

}  // namespace tenpoints
