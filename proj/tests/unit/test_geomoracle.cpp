#include <set>
#include <vector>

#include "doctest.h"
#include "tenpoints/geomoracle.hpp"

using namespace tenpoints;

TEST_CASE("orientation of integer and rational points") {
  const Point o{0, 0}, e{1, 0}, f{0, 1};
  CHECK(orient(o, e, f) == 1);
  CHECK(orient(e, o, f) == -1);
  CHECK(orient(o, e, Point{5, 0}) == 0);
  const RationalPoint half{1, 1, 2};
  CHECK(orient(o, e, half) == 1);
  CHECK(orient(e, o, half) == -1);
  CHECK(orient(RationalPoint::from(o), RationalPoint::from(e), half) == 1);
  CHECK(orient(RationalPoint{2, 0, 4}, RationalPoint{3, 3, 3}, RationalPoint{0, 7, 7}) ==
        orient(Point{0, 0}, Point{1, 1}, Point{0, 1}));
  const Point big{kMaxCoordinate, -kMaxCoordinate};
  CHECK(orient(big, Point{-kMaxCoordinate, kMaxCoordinate}, Point{kMaxCoordinate, kMaxCoordinate}) == -1);
}

TEST_CASE("line intersections") {
  const auto y = line_intersection({-1, -1}, {1, 1}, {-1, 1}, {1, -1});
  REQUIRE(y);
  CHECK(y->x == 0);
  CHECK(y->y == 0);
  CHECK_FALSE(line_intersection({0, 0}, {1, 0}, {0, 1}, {1, 1}));
  const auto z = line_intersection({0, 0}, {3, 0}, {1, -1}, {2, 2});
  REQUIRE(z);
  // x = 4/3 on the x-axis.
  CHECK(z->y == 0);
  CHECK(3 * z->x == 4 * z->den);
  CHECK(orient(Point{0, 0}, Point{3, 0}, *z) == 0);
  CHECK(orient(Point{1, -1}, Point{2, 2}, *z) == 0);
}

TEST_CASE("strong general position") {
  CHECK_FALSE(strong_general_position(std::vector<Point>{{0, 0}, {1, 1}, {2, 2}, {5, 0}}));
  // Lines through (1,0)(-1,0), (0,1)(0,-1) and (1,1)(-1,-1) all pass the origin.
  CHECK_FALSE(strong_general_position(std::vector<Point>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}));
  CHECK(strong_general_position(std::vector<Point>{{0, 0}, {4, 1}, {1, 5}, {7, 3}}));
}

TEST_CASE("sampled configurations") {
  std::set<std::array<Point, kTenPoints>> seen;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto pts = sample_config(s);
    CHECK(pts == sample_config(s));
    seen.insert(pts);
    CHECK(strong_general_position(pts));
    for (const auto& p : pts) {
      CHECK(std::abs(p.x) <= kSampleBox);
      CHECK(std::abs(p.y) <= kSampleBox);
    }
    const auto chi = Chirotope::from_points(pts);
    CHECK(chi.is_uniform());
    for (int i = 0; i < 10; ++i)
      for (int j = i + 1; j < 10; ++j)
        for (int k = j + 1; k < 10; ++k) CHECK(chi(i, j, k) == orient(pts[i], pts[j], pts[k]));
  }
  CHECK(seen.size() == 50);
}

TEST_CASE("true orientation vertex") {
  const auto pts = sample_config(3);
  const auto chi = Chirotope::from_points(pts);
  for (const auto& q : valid_quads(chi)) {
    const auto v = true_orientation_vertex(pts, q);
    CHECK(v.quad == IntersectionQuad::canonical(q.a, q.b, q.c, q.d));
    CHECK(v.pairs == opposite_pairs(chi, q));
    const auto y = *line_intersection(pts[q.a], pts[q.b], pts[q.c], pts[q.d]);
    for (std::size_t x = 0; x < v.pairs.size(); ++x)
      CHECK(v.signs[x] == orient(pts[v.pairs[x].first], pts[v.pairs[x].second], y));
    for (const auto& n : q.notations()) CHECK(true_orientation_vertex(pts, {n[0], n[1], n[2], n[3]}) == v);
  }
}

TEST_CASE("geometric Tverberg partitions") {
  std::vector<Point> parabola;
  for (std::int64_t i = 0; i < 10; ++i) parabola.push_back({i, i * i});
  const auto parts = geometric_tverberg_partitions(parabola);
  CHECK_FALSE(parts.empty());
  for (const auto& tp : parts) {
    CHECK_FALSE(tp.is_3331());
    const auto q = tp.quad();
    REQUIRE(q);
    // The two segments must cross.
    CHECK(orient(parabola[q->a], parabola[q->b], parabola[q->c]) != orient(parabola[q->a], parabola[q->b], parabola[q->d]));
    CHECK(orient(parabola[q->c], parabola[q->d], parabola[q->a]) != orient(parabola[q->c], parabola[q->d], parabola[q->b]));
    CHECK(is_geometric_tverberg(parabola, tp));
  }
  const auto r = check_theorem_for_config(parabola);
  CHECK(r.ok);
  CHECK_FALSE(r.counterexample);
  for (std::uint64_t s = 0; s < 5; ++s) CHECK(check_theorem_for_config(sample_config(s)).ok);
}

TEST_CASE("rainbow witness") {
  const auto tp = TverbergPartition::make(0b0000000111, 0b0000111000, 0b0011000000, 0b1100000000);
  const PartitionSet one{tp};
  const ColorPartition good{{0b0001001001, 0b0010010010, 0b0100100100, 0b1000000000}};
  const ColorPartition bad{{0b0000000011, 0b0010010100, 0b0100101000, 0b1001000000}};
  CHECK(rainbow_witness(one, good) == tp);
  CHECK_FALSE(rainbow_witness(one, bad));
  CHECK_FALSE(rainbow_witness({}, good));
}

TEST_CASE("soundness harness") {
  for (std::uint64_t s = 0; s < 3; ++s) {
    const auto r = check_soundness(sample_config(s));
    CHECK(r.ok());
    CHECK(r.detail.empty());
  }
}
