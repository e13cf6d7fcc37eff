#include <cmath>

#include "doctest.h"
#include "tenpoints/kpg_io.hpp"
#include "tenpoints/randgen.hpp"

using namespace tenpoints;

namespace {

std::size_t cross_pairs(const KPartiteGraph& g) {
  std::size_t n = g.vertex_count(), total = n * (n - 1) / 2;
  for (std::size_t p = 0; p < g.part_count(); ++p) total -= g.part_size(p) * (g.part_size(p) - 1) / 2;
  return total;
}

bool no_intra_part_edge(const KPartiteGraph& g) {
  for (const Edge& e : g.edges())
    if (g.part_of(e.u) == g.part_of(e.v)) return false;
  return true;
}

}  // namespace

TEST_CASE("Rng is reproducible and its integers stay in range") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.uniform_int(-3, 5);
    CHECK(x == b.uniform_int(-3, 5));
    CHECK(x >= -3);
    CHECK(x <= 5);
    const double u = a.uniform01();
    CHECK(u == b.uniform01());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(Rng(1).bits() != Rng(2).bits());
}

TEST_CASE("grunert: fixed part size and probability one") {
  const auto g = gen_grunert({5, 50, 50, 0.2, 0.2, 1});
  CHECK(g.part_sizes() == std::vector<std::size_t>(5, 50));
  const auto full = gen_grunert({4, 2, 5, 1.0, 1.0, 9});
  CHECK(full.edge_count() == cross_pairs(full));
}

TEST_CASE("grunert: part sizes within bounds") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = gen_grunert({7, 3, 6, 0.5, 0.5, seed});
    for (auto s : g.part_sizes()) {
      CHECK(s >= 3);
      CHECK(s <= 6);
    }
  }
}

TEST_CASE("grunert: edge density matches the binomial model") {
  // 30 graphs with 5 parts of 50 and p = 0.2 everywhere.
  std::size_t edges = 0, trials = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = gen_grunert({5, 50, 50, 0.2, 0.2, seed});
    edges += g.edge_count();
    trials += cross_pairs(g);
  }
  const double mean = 0.2 * static_cast<double>(trials);
  const double sd = std::sqrt(static_cast<double>(trials) * 0.2 * 0.8);
  CHECK(std::abs(static_cast<double>(edges) - mean) < 4 * sd);
}

TEST_CASE("rare attraction part sizes") {
  CHECK(rare_part_sizes(5, 10) == std::vector<std::size_t>{2, 4, 6, 8, 10});
  const auto sizes = rare_part_sizes(50, 50);
  CHECK(sizes.back() == 50);
  CHECK(std::is_sorted(sizes.begin(), sizes.end()));
  for (auto s : sizes) CHECK(s <= 50);
  CHECK(gen_rare({5, 10, 0.3, 2}).part_sizes() == rare_part_sizes(5, 10));
}

TEST_CASE("rare attraction edge probability is affine with f(1) = 1, f(max) = a") {
  CHECK(rare_edge_probability(1, 50, 0.1) == doctest::Approx(1.0));
  CHECK(rare_edge_probability(50, 50, 0.1) == doctest::Approx(0.1));
  CHECK(rare_edge_probability(25, 49, 0.5) == doctest::Approx(0.75));
  CHECK(rare_edge_probability(1, 1, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("rare attraction: a part of size one sees every other vertex") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = gen_rare({12, 30, 0.05, seed});
    for (std::size_t p = 0; p < g.part_count(); ++p)
      if (g.part_size(p) == 1) CHECK(g.degree(static_cast<VertexId>(g.part_begin(p))) == g.vertex_count() - 1);
  }
}

TEST_CASE("same seed, same bytes; generators never add intra-part edges") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const GrunertParams gp{6, 2, 9, 0.3, 0.9, seed};
    const RareAttractionParams rp{8, 9, 0.2, seed};
    CHECK(write_graph(gen_grunert(gp)) == write_graph(gen_grunert(gp)));
    CHECK(write_graph(gen_rare(rp)) == write_graph(gen_rare(rp)));
    CHECK(no_intra_part_edge(gen_grunert(gp)));
    CHECK(no_intra_part_edge(gen_rare(rp)));
  }
  CHECK(write_graph(gen_grunert({6, 2, 9, 0.5, 0.5, 1})) != write_graph(gen_grunert({6, 2, 9, 0.5, 0.5, 2})));
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS(gen_grunert({3, 5, 4, 0.1, 0.2, 0}));
  CHECK_THROWS(gen_grunert({3, 1, 4, 0.5, 0.2, 0}));
  CHECK_THROWS(gen_rare({3, 0, 0.5, 0}));
  CHECK_THROWS(gen_rare({3, 4, 1.5, 0}));
}
