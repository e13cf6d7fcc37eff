#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "tenpoints/kpg_io.hpp"
#include "tenpoints/randgen.hpp"

using namespace tenpoints;

namespace {

std::vector<Edge> all_cross_pairs(const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> part;
  for (std::size_t p = 0; p < sizes.size(); ++p) part.insert(part.end(), sizes[p], p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < part.size(); ++u)
    for (VertexId v = u + 1; v < part.size(); ++v)
      if (part[u] != part[v]) edges.push_back({u, v});
  return edges;
}

}  // namespace

TEST_CASE("VertexSet agrees with std::set under random operations") {
  std::mt19937 gen(7);
  for (std::size_t cap : {1u, 63u, 64u, 65u, 130u, 200u}) {
    VertexSet s(cap), t(cap);
    std::set<std::size_t> ref_s, ref_t;
    std::uniform_int_distribution<std::size_t> pick(0, cap - 1);
    for (int step = 0; step < 400; ++step) {
      const std::size_t v = pick(gen);
      switch (gen() % 4) {
        case 0: s.insert(v); ref_s.insert(v); break;
        case 1: s.erase(v); ref_s.erase(v); break;
        case 2: t.insert(v); ref_t.insert(v); break;
        default: t.erase(v); ref_t.erase(v); break;
      }
    }
    CHECK(s.count() == ref_s.size());
    std::vector<VertexId> members(ref_s.begin(), ref_s.end());
    CHECK(s.members() == members);
    std::size_t common = 0;
    for (auto v : ref_s) common += ref_t.count(v);
    CHECK(s.intersection_count(t) == common);
    CHECK(common <= std::min(s.count(), t.count()));

    const std::size_t lo = cap / 3, hi = cap - cap / 4;
    std::size_t in_range = 0, common_range = 0;
    for (auto v : ref_s)
      if (v >= lo && v < hi) {
        ++in_range;
        common_range += ref_t.count(v);
      }
    CHECK(s.count(lo, hi) == in_range);
    CHECK(s.intersection_count(t, lo, hi) == common_range);
    CHECK(s.intersects(t, lo, hi) == (common_range > 0));

    VertexSet both(cap);
    both.assign_intersection(s, t);
    CHECK(both.count() == common);
    std::size_t next_from_lo = cap;
    for (auto v : ref_s)
      if (v >= lo) {
        next_from_lo = v;
        break;
      }
    CHECK(s.next(lo) == next_from_lo);
  }
}

TEST_CASE("VertexSet fill keeps bits beyond the capacity clear") {
  VertexSet s(70, true);
  CHECK(s.count() == 70);
  s.clear();
  CHECK(s.empty());
}

TEST_CASE("build_graph small cases") {
  SUBCASE("complete bipartite 2,2") {
    const auto g = build_graph(std::vector<std::size_t>{2, 2}, all_cross_pairs({2, 2}));
    CHECK(g.edge_count() == 4);
    CHECK(g.part_count() == 2);
  }
  SUBCASE("single vertex") {
    const auto g = build_graph(std::vector<std::size_t>{1}, std::vector<Edge>{});
    CHECK(g.vertex_count() == 1);
    CHECK(g.part_count() == 1);
    CHECK(g.edge_count() == 0);
  }
  SUBCASE("complete tripartite 2,2,2") {
    const auto g = build_graph(std::vector<std::size_t>{2, 2, 2}, all_cross_pairs({2, 2, 2}));
    CHECK(g.edge_count() == 12);
    for (VertexId v = 0; v < 6; ++v) CHECK(g.degree(v) == 4);
  }
  SUBCASE("duplicates collapse, reversed pairs accepted") {
    const std::vector<Edge> edges = {{0, 2}, {2, 0}, {0, 2}};
    const auto g = build_graph(std::vector<std::size_t>{2, 2}, edges);
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(2, 0));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(build_graph(std::vector<std::size_t>{2, 2}, std::vector<Edge>{{0, 1}}), GraphError);
    CHECK_THROWS_AS(build_graph(std::vector<std::size_t>{2, 2}, std::vector<Edge>{{0, 4}}), GraphError);
    try {
      build_graph(std::vector<std::size_t>{2, 2}, std::vector<Edge>{{2, 3}});
    } catch (const GraphError& e) {
      CHECK(std::string(e.what()).find("(2, 3)") != std::string::npos);
    }
  }
}

TEST_CASE("part lookup matches the bounds") {
  const auto g = build_graph(std::vector<std::size_t>{3, 0, 2, 4}, std::vector<Edge>{});
  CHECK(g.part_count() == 4);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto p = g.part_of(v);
    CHECK(g.part_begin(p) <= v);
    CHECK(v < g.part_end(p));
  }
  CHECK(g.part_size(1) == 0);
}

TEST_CASE("random graphs: symmetric adjacency and handshake") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = gen_grunert({5, 1, 9, 0.2, 0.8, seed});
    std::size_t degree_sum = 0;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      degree_sum += g.degree(u);
      CHECK_FALSE(g.adjacent(u, u));
      for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("KPG write then parse is the identity") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = seed % 2 ? gen_rare({1 + seed % 7, 1 + seed % 6, 0.4, seed})
                            : gen_grunert({1 + seed % 6, 1, 7, 0.1, 0.9, seed});
    const std::string text = write_graph(g);
    CHECK(parse_graph(text) == g);
    CHECK(write_graph(parse_graph(text)) == text);
  }
}

TEST_CASE("KPG writer output is canonical") {
  const std::vector<Edge> edges = {{3, 1}, {0, 2}, {0, 3}};
  const auto g = build_graph(std::vector<std::size_t>{2, 2}, edges);
  CHECK(write_graph(g) == "p kpg 4 3 2\nq 2 2\ne 0 2\ne 0 3\ne 1 3\n");
}

TEST_CASE("KPG parse errors carry the line number") {
  const auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("p kpg 4 0 2\nq 2 3\n") == 2);             // sizes sum to 5
  CHECK(line_of("p kpg 4 1 2\np kpg 4 1 2\n") == 2);       // duplicate header
  CHECK(line_of("c hi\np kpg 4 1 2\nq 2 2\ne 0 1\n") == 4); // intra-part edge
  CHECK(line_of("p kpg 4 1 2\nq 2 2\ne 0 9\n") == 3);      // out of range
  CHECK(line_of("p kpg 4 2 2\nq 2 2\ne 0 2\n") != 0);      // too few edges
  CHECK(line_of("kpg 4 2 2\n") == 1);
  CHECK(line_of("p kpg 4 1 2\nq 2 2\ne 0 2 5\n") == 3);
}

TEST_CASE("KPG files, plain and gzip") {
  const auto dir = std::filesystem::temp_directory_path() / "tenpoints_kpg_test";
  std::filesystem::create_directories(dir);
  const auto g = gen_grunert({4, 3, 6, 0.5, 0.5, 11});
  for (const char* name : {"g.kpg", "g.kpg.gz"}) {
    const auto path = dir / name;
    write_graph_file(path, g);
    CHECK(read_graph_file(path) == g);
  }
  std::ifstream raw(dir / "g.kpg.gz", std::ios::binary);
  unsigned char magic[2] = {0, 0};
  raw.read(reinterpret_cast<char*>(magic), 2);
  CHECK(magic[0] == 0x1f);
  CHECK(magic[1] == 0x8b);
  std::filesystem::remove_all(dir);
}
