#include "tenpoints/geomoracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

#include "tenpoints/randgen.hpp"

namespace tenpoints {

namespace {

using boost::multiprecision::checked_int256_t;

// Coordinate bounds behind the fixed-width arithmetic, with C = kMaxCoordinate:
// differences are below 2^17, the intersection denominator below 2^35 and its
// numerators below 2^53, so one cross product of a difference with a
// rescaled difference stays below 2^72.
constexpr int kCoordBits = 16;
static_assert(kMaxCoordinate == (std::int64_t{1} << kCoordBits));
constexpr int kDenBits = 2 * (kCoordBits + 1) + 1;            // 35
constexpr int kNumBits = kCoordBits + kDenBits + 2;           // 53
static_assert(kNumBits < 63, "intersection numerators must fit in 64 bits");
static_assert((kCoordBits + 1) + (kNumBits + 1) + 1 < 127, "orient of points and an intersection must fit in 128 bits");
static_assert(2 * kNumBits + kDenBits + 3 < 255, "generic rational orient must fit in 256 bits");

int sgn(__int128 v) { return (v > 0) - (v < 0); }

void check_range(const Point& p) {
  if (p.x < -kMaxCoordinate || p.x > kMaxCoordinate || p.y < -kMaxCoordinate || p.y > kMaxCoordinate)
    throw std::out_of_range("point coordinate exceeds 2^16 in absolute value");
}

std::int64_t cross(std::int64_t ux, std::int64_t uy, std::int64_t vx, std::int64_t vy) { return ux * vy - uy * vx; }

// Non-strict: z in the closed triangle efg.
bool closed_triangle_contains(const Point& e, const Point& f, const Point& g, const RationalPoint& z) {
  const int s1 = orient(e, f, z), s2 = orient(f, g, z), s3 = orient(g, e, z);
  const bool pos = s1 > 0 || s2 > 0 || s3 > 0;
  const bool neg = s1 < 0 || s2 < 0 || s3 < 0;
  return !(pos && neg);
}

bool open_triangle_contains(const Point& e, const Point& f, const Point& g, const RationalPoint& z) {
  const int s = orient(e, f, z);
  return s != 0 && orient(f, g, z) == s && orient(g, e, z) == s;
}

PointMask bit(int i) { return static_cast<PointMask>(1U << i); }

}  // namespace

int orient(const RationalPoint& p, const RationalPoint& q, const RationalPoint& r) {
  if (p.den <= 0 || q.den <= 0 || r.den <= 0) throw std::invalid_argument("rational denominators must be positive");
  const checked_int256_t px = p.x, py = p.y, pw = p.den;
  const checked_int256_t qx = q.x, qy = q.y, qw = q.den;
  const checked_int256_t rx = r.x, ry = r.y, rw = r.den;
  const checked_int256_t det = px * (qy * rw - qw * ry) - py * (qx * rw - qw * rx) + pw * (qx * ry - qy * rx);
  return det.sign();
}

int orient(const Point& p, const Point& q, const RationalPoint& r) {
  if (r.den <= 0) throw std::invalid_argument("rational denominators must be positive");
  const __int128 ux = q.x - p.x, uy = q.y - p.y;
  const __int128 vx = static_cast<__int128>(r.x) - static_cast<__int128>(p.x) * r.den;
  const __int128 vy = static_cast<__int128>(r.y) - static_cast<__int128>(p.y) * r.den;
  return sgn(ux * vy - uy * vx);
}

int orient(const Point& p, const Point& q, const Point& r) {
  const std::int64_t det = cross(q.x - p.x, q.y - p.y, r.x - p.x, r.y - p.y);
  return (det > 0) - (det < 0);
}

std::optional<RationalPoint> line_intersection(const Point& a, const Point& b, const Point& c, const Point& d) {
  for (const Point* p : {&a, &b, &c, &d}) check_range(*p);
  const std::int64_t ux = b.x - a.x, uy = b.y - a.y;
  const std::int64_t wx = d.x - c.x, wy = d.y - c.y;
  std::int64_t den = cross(ux, uy, wx, wy);
  if (den == 0) return std::nullopt;
  std::int64_t t = cross(c.x - a.x, c.y - a.y, wx, wy);
  if (den < 0) {
    den = -den;
    t = -t;
  }
  return RationalPoint{a.x * den + t * ux, a.y * den + t * uy, den};
}

bool strong_general_position(std::span<const Point> points) {
  const int n = static_cast<int>(points.size());
  for (const auto& p : points) check_range(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orient(points[i], points[j], points[k]) == 0) return false;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const auto disjoint = [](std::pair<int, int> x, std::pair<int, int> y) {
    return x.first != y.first && x.first != y.second && x.second != y.first && x.second != y.second;
  };
  for (std::size_t p1 = 0; p1 < pairs.size(); ++p1)
    for (std::size_t p2 = p1 + 1; p2 < pairs.size(); ++p2) {
      if (!disjoint(pairs[p1], pairs[p2])) continue;
      const auto y = line_intersection(points[pairs[p1].first], points[pairs[p1].second], points[pairs[p2].first],
                                       points[pairs[p2].second]);
      if (!y) continue;
      for (std::size_t p3 = p2 + 1; p3 < pairs.size(); ++p3) {
        if (!disjoint(pairs[p1], pairs[p3]) || !disjoint(pairs[p2], pairs[p3])) continue;
        if (orient(points[pairs[p3].first], points[pairs[p3].second], *y) == 0) return false;
      }
    }
  return true;
}

std::array<Point, kTenPoints> sample_config(std::uint64_t seed) {
  Rng rng(seed);
  std::array<Point, kTenPoints> pts;
  for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
    for (auto& p : pts) {
      p.x = rng.uniform_int(-kSampleBox, kSampleBox);
      p.y = rng.uniform_int(-kSampleBox, kSampleBox);
    }
    bool parallel = false;
    for (int a = 0; a < kTenPoints && !parallel; ++a)
      for (int b = a + 1; b < kTenPoints && !parallel; ++b)
        for (int c = a + 1; c < kTenPoints && !parallel; ++c)
          for (int d = c + 1; d < kTenPoints && !parallel; ++d) {
            if (c == b || d == b) continue;
            parallel = cross(pts[b].x - pts[a].x, pts[b].y - pts[a].y, pts[d].x - pts[c].x, pts[d].y - pts[c].y) == 0;
          }
    if (!parallel && strong_general_position(pts)) return pts;
  }
  throw std::runtime_error("sample_config: no configuration in strong general position after 10^4 draws");
}

OrientationVertex true_orientation_vertex(std::span<const Point> points, const IntersectionQuad& q) {
  if (points.size() != static_cast<std::size_t>(kTenPoints)) throw std::invalid_argument("need ten points");
  const auto y = line_intersection(points[q.a], points[q.b], points[q.c], points[q.d]);
  if (!y) throw std::domain_error("lines of the quad are parallel");
  const Chirotope chi = Chirotope::from_points(points);
  OrientationVertex v{IntersectionQuad::canonical(q.a, q.b, q.c, q.d), opposite_pairs(chi, q), {}};
  for (const auto& [i, j] : v.pairs) v.signs.push_back(static_cast<std::int8_t>(orient(points[i], points[j], *y)));
  return v;
}

PartitionSet geometric_tverberg_partitions(std::span<const Point> points) {
  if (points.size() != static_cast<std::size_t>(kTenPoints)) throw std::invalid_argument("need ten points");
  PartitionSet out;
  std::vector<PointMask> triangles;
  for (int i = 0; i < kTenPoints; ++i)
    for (int j = i + 1; j < kTenPoints; ++j)
      for (int k = j + 1; k < kTenPoints; ++k) triangles.push_back(bit(i) | bit(j) | bit(k));
  const auto corners = [&](PointMask t) {
    std::array<Point, 3> c;
    int n = 0;
    for (int i = 0; i < kTenPoints; ++i)
      if (t & bit(i)) c[n++] = points[i];
    return c;
  };
  const auto inside = [&](PointMask t, const RationalPoint& z) {
    const auto c = corners(t);
    return open_triangle_contains(c[0], c[1], c[2], z);
  };

  // Three triangles around a point.
  for (int p = 0; p < kTenPoints; ++p) {
    const RationalPoint z = RationalPoint::from(points[p]);
    std::vector<PointMask> around;
    for (PointMask t : triangles)
      if (!(t & bit(p)) && inside(t, z)) around.push_back(t);
    for (std::size_t x = 0; x < around.size(); ++x)
      for (std::size_t y = x + 1; y < around.size(); ++y)
        for (std::size_t w = y + 1; w < around.size(); ++w)
          if ((around[x] & around[y]) == 0 && (around[x] & around[w]) == 0 && (around[y] & around[w]) == 0)
            out.insert(TverbergPartition::make(around[x], around[y], around[w], bit(p)));
  }

  // Two triangles around a crossing of two segments.
  for (int a = 0; a < kTenPoints; ++a)
    for (int b = a + 1; b < kTenPoints; ++b)
      for (int c = a + 1; c < kTenPoints; ++c)
        for (int d = c + 1; d < kTenPoints; ++d) {
          if (c == b || d == b) continue;
          const auto &A = points[a], &B = points[b], &C = points[c], &D = points[d];
          if (orient(A, B, C) * orient(A, B, D) >= 0 || orient(C, D, A) * orient(C, D, B) >= 0) continue;
          const RationalPoint y = *line_intersection(A, B, C, D);
          const PointMask used = bit(a) | bit(b) | bit(c) | bit(d);
          std::vector<PointMask> around;
          for (PointMask t : triangles)
            if (!(t & used) && inside(t, y)) around.push_back(t);
          for (std::size_t x = 0; x < around.size(); ++x)
            for (std::size_t w = x + 1; w < around.size(); ++w)
              if ((around[x] & around[w]) == 0)
                out.insert(TverbergPartition::make(around[x], around[w], bit(a) | bit(b), bit(c) | bit(d)));
        }

  for (const auto& tp : out)
    if (!is_geometric_tverberg(points, tp)) throw std::logic_error("geometric search produced a non-Tverberg partition");
  return out;
}

bool is_geometric_tverberg(std::span<const Point> points, const TverbergPartition& tp) {
  PointMask all = 0;
  for (PointMask piece : tp.pieces) {
    if (all & piece) return false;
    all |= piece;
  }
  if (all != (1U << kTenPoints) - 1) return false;
  const auto members = [&](PointMask m) { return mask_members(m); };
  const auto s0 = members(tp.pieces[0]), s1 = members(tp.pieces[1]);
  if (s0.size() != 3 || s1.size() != 3) return false;
  const auto in_both = [&](const RationalPoint& z) {
    return closed_triangle_contains(points[s0[0]], points[s0[1]], points[s0[2]], z) &&
           closed_triangle_contains(points[s1[0]], points[s1[1]], points[s1[2]], z);
  };
  const auto s2 = members(tp.pieces[2]), s3 = members(tp.pieces[3]);
  if (s2.size() == 3 && s3.size() == 1) {
    const RationalPoint z = RationalPoint::from(points[s3[0]]);
    return in_both(z) && closed_triangle_contains(points[s2[0]], points[s2[1]], points[s2[2]], z);
  }
  if (s2.size() == 2 && s3.size() == 2) {
    const auto &A = points[s2[0]], &B = points[s2[1]], &C = points[s3[0]], &D = points[s3[1]];
    if (orient(A, B, C) * orient(A, B, D) > 0 || orient(C, D, A) * orient(C, D, B) > 0) return false;
    const auto y = line_intersection(A, B, C, D);
    return y && in_both(*y);
  }
  return false;
}

std::optional<TverbergPartition> rainbow_witness(const PartitionSet& partitions, const ColorPartition& cp) {
  for (const auto& tp : partitions)
    if (is_rainbow(tp, cp)) return tp;
  return std::nullopt;
}

TheoremCheck check_theorem_for_config(std::span<const Point> points) {
  const PartitionSet parts = geometric_tverberg_partitions(points);
  for (const auto& cp : enumerate_color_partitions())
    if (!rainbow_witness(parts, cp)) return {false, cp};
  return {};
}

SoundnessReport check_soundness(std::span<const Point> points) {
  SoundnessReport r;
  const auto fail = [&r](bool& flag, std::string what) {
    if (r.ok()) r.detail = std::move(what);
    flag = false;
  };
  const Chirotope chi = Chirotope::from_points(points);
  const TverbergGraph h = build_H(chi);

  PartitionSet pipeline = tverberg_3331(chi);
  std::vector<VertexId> truth;
  for (std::size_t p = 0; p < h.quads.size(); ++p) {
    const IntersectionQuad& q = h.quads[p];
    const OrientationVertex tv = true_orientation_vertex(points, q);
    const auto parts = tverberg_3322_at(chi, tv);
    pipeline.insert(parts.begin(), parts.end());

    const auto y = *line_intersection(points[q.a], points[q.b], points[q.c], points[q.d]);
    for (int i = 0; i < kTenPoints; ++i)
      for (int j = 0; j < kTenPoints; ++j) {
        const auto d = determined_sign(chi, tv, i, j);
        if (d && *d != orient(points[i], points[j], y))
          fail(r.signs, "sign of (" + std::to_string(i) + "," + std::to_string(j) + ") at quad " + std::to_string(p));
      }

    bool found = false;
    for (std::size_t v = h.graph.part_begin(p); v < h.graph.part_end(p) && !found; ++v)
      if (h.vertices[v] == tv) {
        truth.push_back(static_cast<VertexId>(v));
        found = true;
      }
    if (!found) fail(r.enumerated, "true vertex of quad " + std::to_string(p) + " missing");
  }
  if (pipeline != geometric_tverberg_partitions(points)) fail(r.partitions, "partition sets differ");
  for (std::size_t x = 0; x < truth.size(); ++x)
    for (std::size_t z = x + 1; z < truth.size(); ++z)
      if (!h.graph.adjacent(truth[x], truth[z]))
        fail(r.adjacent, "true vertices " + std::to_string(truth[x]) + " and " + std::to_string(truth[z]) + " not adjacent");
  return r;
}

}  // namespace tenpoints
