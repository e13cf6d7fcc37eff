#include "tenpoints/tverberg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace tenpoints {

namespace {

constexpr auto make_pair_table() {
  std::array<std::array<std::int8_t, kTenPoints>, kTenPoints> t{};
  int next = 0;
  for (int i = 0; i < kTenPoints; ++i) {
    t[i][i] = -1;
    for (int j = i + 1; j < kTenPoints; ++j) {
      t[i][j] = static_cast<std::int8_t>(next);
      t[j][i] = static_cast<std::int8_t>(next);
      ++next;
    }
  }
  return t;
}

constexpr auto kPairTable = make_pair_table();

PointMask bit(int i) { return static_cast<PointMask>(1U << i); }

int lowest(PointMask m) { return std::countr_zero(static_cast<unsigned>(m)); }

// Orders pieces and colour classes: larger first, then by smallest element.
bool piece_before(PointMask x, PointMask y) {
  const int px = std::popcount(static_cast<unsigned>(x));
  const int py = std::popcount(static_cast<unsigned>(y));
  if (px != py) return px > py;
  return lowest(x) < lowest(y);
}

// Calls f(first, second) for the ten splits of six points into two triples.
template <class F>
void for_each_triangle_split(const std::array<int, 6>& pts, F&& f) {
  for (int x = 1; x < 6; ++x)
    for (int y = x + 1; y < 6; ++y) {
      const PointMask t1 = bit(pts[0]) | bit(pts[x]) | bit(pts[y]);
      PointMask t2 = 0;
      for (int z = 1; z < 6; ++z)
        if (z != x && z != y) t2 |= bit(pts[z]);
      f(t1, t2);
    }
}

}  // namespace

int pair_index(int i, int j) {
  if (i < 0 || j < 0 || i >= kTenPoints || j >= kTenPoints || i == j)
    throw std::out_of_range("pair_index needs two distinct points below 10");
  return kPairTable[i][j];
}

PairMask inner_pairs(std::span<const PointMask> pieces) {
  PairMask m = 0;
  for (PointMask piece : pieces)
    for (int i = 0; i < kTenPoints; ++i)
      if (piece & bit(i))
        for (int j = i + 1; j < kTenPoints; ++j)
          if (piece & bit(j)) m |= PairMask{1} << kPairTable[i][j];
  return m;
}

std::vector<int> mask_members(PointMask m) {
  std::vector<int> out;
  for (int i = 0; i < 16; ++i)
    if (m & (1U << i)) out.push_back(i);
  return out;
}

std::vector<std::size_t> ColorPartition::profile() const {
  std::vector<std::size_t> p;
  for (PointMask c : classes) p.push_back(static_cast<std::size_t>(std::popcount(static_cast<unsigned>(c))));
  return p;
}

const std::vector<ColorPartition>& enumerate_color_partitions() {
  static const std::vector<ColorPartition> all = [] {
    const std::vector<std::vector<std::size_t>> profiles = {{3, 3, 3, 1}, {3, 3, 2, 2}, {2, 2, 2, 2, 2}};
    std::vector<std::vector<ColorPartition>> by_profile(profiles.size());
    // Restricted growth strings with blocks of at most three points.
    std::vector<PointMask> blocks;
    auto rec = [&](auto& self, int point) -> void {
      if (point == kTenPoints) {
        ColorPartition cp{blocks};
        std::sort(cp.classes.begin(), cp.classes.end(), piece_before);
        const auto prof = cp.profile();
        for (std::size_t p = 0; p < profiles.size(); ++p)
          if (prof == profiles[p]) by_profile[p].push_back(std::move(cp));
        return;
      }
      for (std::size_t b = 0; b < blocks.size(); ++b)
        if (std::popcount(static_cast<unsigned>(blocks[b])) < 3) {
          blocks[b] |= bit(point);
          self(self, point + 1);
          blocks[b] &= static_cast<PointMask>(~bit(point));
        }
      if (blocks.size() < 5) {
        blocks.push_back(bit(point));
        self(self, point + 1);
        blocks.pop_back();
      }
    };
    rec(rec, 0);
    std::vector<ColorPartition> out;
    for (auto& group : by_profile) {
      std::sort(group.begin(), group.end(), [](const ColorPartition& x, const ColorPartition& y) {
        for (std::size_t c = 0; c < x.classes.size(); ++c) {
          const auto mx = mask_members(x.classes[c]), my = mask_members(y.classes[c]);
          if (mx != my) return mx < my;
        }
        return false;
      });
      out.insert(out.end(), group.begin(), group.end());
    }
    return out;
  }();
  return all;
}

TverbergPartition TverbergPartition::make(PointMask p0, PointMask p1, PointMask p2, PointMask p3) {
  TverbergPartition tp{{p0, p1, p2, p3}};
  std::sort(tp.pieces.begin(), tp.pieces.end(), piece_before);
  return tp;
}

std::optional<IntersectionQuad> TverbergPartition::quad() const {
  if (is_3331()) return std::nullopt;
  const auto l1 = mask_members(pieces[2]), l2 = mask_members(pieces[3]);
  if (l1.size() != 2 || l2.size() != 2) return std::nullopt;
  return IntersectionQuad::canonical(l1[0], l1[1], l2[0], l2[1]);
}

bool TverbergPartition::is_3331() const { return std::popcount(static_cast<unsigned>(pieces[3])) == 1; }

std::string TverbergPartition::str() const {
  std::string s;
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    if (p) s += '|';
    s += '{';
    bool first = true;
    for (int i : mask_members(pieces[p])) {
      if (!first) s += ',';
      s += std::to_string(i);
      first = false;
    }
    s += '}';
  }
  return s;
}

bool is_rainbow(const TverbergPartition& tp, const ColorPartition& cp) {
  for (PointMask piece : tp.pieces)
    for (PointMask cls : cp.classes)
      if (std::popcount(static_cast<unsigned>(piece & cls)) > 1) return false;
  return true;
}

PartitionSet tverberg_3331(const Chirotope& chi) {
  PartitionSet out;
  for (int p = 0; p < kTenPoints; ++p) {
    std::array<int, 9> rest{};
    int n = 0;
    for (int i = 0; i < kTenPoints; ++i)
      if (i != p) rest[n++] = i;
    const auto inside = [&](PointMask t) {
      const auto m = mask_members(t);
      return triangle_contains(chi, m[0], m[1], m[2], p);
    };
    for (int x = 1; x < 9; ++x)
      for (int y = x + 1; y < 9; ++y) {
        const PointMask t1 = bit(rest[0]) | bit(rest[x]) | bit(rest[y]);
        if (!inside(t1)) continue;
        std::array<int, 6> six{};
        int m = 0;
        for (int z = 1; z < 9; ++z)
          if (z != x && z != y) six[m++] = rest[z];
        for_each_triangle_split(six, [&](PointMask t2, PointMask t3) {
          if (inside(t2) && inside(t3)) out.insert(TverbergPartition::make(t1, t2, t3, bit(p)));
        });
      }
  }
  return out;
}

std::optional<int> OrientationVertex::stored(int i, int j) const {
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if (pairs[p].first == i && pairs[p].second == j) return flip ? -signs[p] : signs[p];
  return std::nullopt;
}

std::vector<std::pair<int, int>> opposite_pairs(const Chirotope& chi, const IntersectionQuad& q) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < chi.size(); ++i)
    for (int j = i + 1; j < chi.size(); ++j) {
      if (q.contains(i) || q.contains(j)) continue;
      if (pair_class(chi, q, i, j).kind == PairClass::opposite) out.emplace_back(i, j);
    }
  return out;
}

std::optional<int> determined_sign(const Chirotope& chi, const OrientationVertex& v, int i, int j) {
  const auto [a, b, c, d] = v.quad;
  if (i == j) return 0;
  const auto same_pair = [](int x, int y, int p, int q) { return (x == p && y == q) || (x == q && y == p); };
  if (same_pair(i, j, a, b) || same_pair(i, j, c, d)) return 0;
  // y lies on both lines, strictly between the quad points.
  const auto through = [&](int p, int h) {
    if (p == a) return -chi(a, b, h);
    if (p == b) return chi(a, b, h);
    if (p == c) return -chi(c, d, h);
    return chi(c, d, h);
  };
  if (v.quad.contains(i)) return through(i, j);
  if (v.quad.contains(j)) return -through(j, i);
  const Region ri = region_of(chi, v.quad, i), rj = region_of(chi, v.quad, j);
  const bool same_ab = ri.ab == rj.ab, same_cd = ri.cd == rj.cd;
  if (same_ab && same_cd) return std::nullopt;
  if (!same_ab && !same_cd) return v.stored(i, j);
  if (same_ab) return chi(c, d, a) * chi(c, d, j) * chi(a, b, i);
  return chi(a, b, c) * chi(a, b, j) * chi(c, d, i);
}

YSignTable y_sign_table(const Chirotope& chi, const OrientationVertex& v) {
  YSignTable t;
  t.fill(kUnknownSign);
  for (int i = 0; i < kTenPoints; ++i)
    for (int j = 0; j < kTenPoints; ++j)
      if (const auto s = determined_sign(chi, v, i, j)) t[i * kTenPoints + j] = static_cast<std::int8_t>(*s);
  return t;
}

bool triangle_contains_y(const Chirotope& chi, const OrientationVertex& v, int i, int j, int k) {
  const auto& q = v.quad;
  if (q.contains(i) || q.contains(j) || q.contains(k))
    throw std::invalid_argument("triangle must avoid the quad");
  const auto opposite = [&](int x, int y) { return pair_class(chi, q, x, y).kind == PairClass::opposite; };
  if (opposite(j, k)) std::swap(i, k);
  else if (opposite(i, k)) std::swap(j, k);
  else if (!opposite(i, j)) return false;
  // Now i and j are opposite.
  const auto sign = [&](int x, int y) {
    const auto s = determined_sign(chi, v, x, y);
    if (!s) throw std::logic_error("triangle test needs an undetermined sign");
    return *s;
  };
  const Region ri = region_of(chi, q, i), rj = region_of(chi, q, j), rk = region_of(chi, q, k);
  if (rk == rj) return sign(i, j) != sign(i, k);
  if (rk == ri) return sign(j, i) != sign(j, k);
  if (rk.ab != ri.ab) std::swap(i, j);  // i shares its side of ab with k
  return sign(i, j) == -chi(q.a, q.b, q.c) * chi(q.c, q.d, i) * chi(q.a, q.b, i);
}

PartitionSet tverberg_3322_at(const Chirotope& chi, const OrientationVertex& v) {
  const auto& q = v.quad;
  std::array<int, 6> six{};
  int n = 0;
  for (int h = 0; h < kTenPoints; ++h)
    if (!q.contains(h)) six[n++] = h;
  PartitionSet out;
  for_each_triangle_split(six, [&](PointMask t1, PointMask t2) {
    const auto m1 = mask_members(t1), m2 = mask_members(t2);
    if (triangle_contains_y(chi, v, m1[0], m1[1], m1[2]) && triangle_contains_y(chi, v, m2[0], m2[1], m2[2]))
      out.insert(TverbergPartition::make(t1, t2, bit(q.a) | bit(q.b), bit(q.c) | bit(q.d)));
  });
  return out;
}

std::vector<OrientationVertex> enumerate_orientation_vertices(const Chirotope& chi, const IntersectionQuad& q,
                                                              VertexRules rules) {
  const auto pairs = opposite_pairs(chi, q);
  const std::size_t m = pairs.size();
  std::array<std::array<int, kTenPoints>, kTenPoints> pos{};
  for (auto& row : pos) row.fill(-1);
  for (std::size_t p = 0; p < m; ++p) {
    pos[pairs[p].first][pairs[p].second] = static_cast<int>(p);
    pos[pairs[p].second][pairs[p].first] = static_cast<int>(p);
  }

  // An assignment is a bit vector, bit set = +1, first pair most significant.
  // Each rule forbids a conjunction of at most two literals "chi(x, y, y) = s".
  struct Forbidden {
    std::uint32_t care = 0, pattern = 0;
  };
  std::vector<Forbidden> forbidden;
  const auto literal = [&](Forbidden& f, int x, int y, int s) {
    const int p = pos[x][y];
    const std::uint32_t b = 1U << (m - 1 - static_cast<std::size_t>(p));
    const int stored = x < y ? s : -s;
    if ((f.care & b) && ((f.pattern & b) != 0) != (stored > 0)) return false;  // contradictory, never holds
    f.care |= b;
    if (stored > 0) f.pattern |= b;
    return true;
  };
  const auto forbid = [&](std::initializer_list<std::array<int, 3>> lits) {
    Forbidden f;
    for (const auto& l : lits)
      if (!literal(f, l[0], l[1], l[2])) return;
    forbidden.push_back(f);
  };

  std::vector<int> rest;
  for (int h = 0; h < kTenPoints; ++h)
    if (!q.contains(h)) rest.push_back(h);
  std::array<Region, kTenPoints> region{};
  for (int h : rest) region[h] = region_of(chi, q, h);
  const auto is_opp = [&](int x, int y) { return region[x].ab != region[y].ab && region[x].cd != region[y].cd; };
  const int abc = chi(q.a, q.b, q.c);

  for (int i : rest)
    for (int j : rest)
      for (int k : rest) {
        if (i == j || j == k || i == k || !rules.triangle) continue;
        if (!is_opp(i, j)) continue;
        if (region[j] == region[k]) {
          // chi(i,j,y) != chi(i,k,y) forces chi(i,j,y) = chi(i,j,k).
          const int t = chi(i, j, k);
          forbid({{i, j, -t}, {i, k, t}});
        } else if (region[k].ab == region[i].ab && region[k].cd == region[j].cd) {
          const int f = -abc * chi(q.c, q.d, i) * chi(q.a, q.b, i);
          if (chi(i, j, k) != f) forbid({{i, j, f}});
        }
      }

  if (rules.noncrossing)
    for (const auto& [i, j] : pairs)
      for (const auto& [u, w] : {std::pair{q.a, q.b}, std::pair{q.c, q.d}})
        if (chi(i, j, u) == chi(i, j, w)) forbid({{i, j, -chi(i, j, u)}});

  if (rules.transfer)
    for (int i1 : rest)
      for (int j1 : rest) {
        if (!is_opp(i1, j1)) continue;
        for (int i2 : rest)
          for (int j2 : rest) {
            if (i2 == i1 || j2 == j1 || !(region[i2] == region[i1]) || !(region[j2] == region[j1])) continue;
            const int t = chi(i1, j1, i2);
            if (chi(i1, j1, j2) != t) continue;
            for (const auto& [u, w] : {std::pair{q.a, q.b}, std::pair{q.c, q.d}}) {
              if (chi(i1, j1, u) == chi(i1, j1, w) || chi(i2, j2, u) == chi(i2, j2, w)) continue;
              // chi(i1,j1,y) = -t forces chi(i2,j2,y) = -t.
              forbid({{i1, j1, -t}, {i2, j2, t}});
            }
          }
      }

  std::vector<OrientationVertex> out;
  const std::uint32_t total = 1U << m;
  for (std::uint32_t assign = 0; assign < total; ++assign) {
    const bool ok = std::none_of(forbidden.begin(), forbidden.end(),
                                 [&](const Forbidden& f) { return (assign & f.care) == f.pattern; });
    if (!ok) continue;
    OrientationVertex v{q, pairs, std::vector<std::int8_t>(m)};
    for (std::size_t p = 0; p < m; ++p) v.signs[p] = (assign >> (m - 1 - p)) & 1U ? 1 : -1;
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

struct Line {
  int p, q;
};

// The quad's two lines as (shared, other) when `line` is one of them.
std::optional<std::pair<Line, Line>> split_on(const IntersectionQuad& quad, int p, int q) {
  const auto is = [&](int x, int y) { return (x == p && y == q) || (x == q && y == p); };
  if (is(quad.a, quad.b)) return std::pair{Line{p, q}, Line{quad.c, quad.d}};
  if (is(quad.c, quad.d)) return std::pair{Line{p, q}, Line{quad.a, quad.b}};
  return std::nullopt;
}

// v's quad is (p, q, r, s), w's quad is (p, q, r2, s2) with r and r2 on the
// same side of pq. Returns false when w contradicts what v forces.
bool shared_line_certificate(const Chirotope& chi, const YSignTable& tv, const YSignTable& tw, int p, int q,
                             int r, int s, int r2, int s2) {
  const int sc = tv[r2 * kTenPoints + s2];
  if (sc == kUnknownSign) return true;
  const int side_c = chi(p, q, r), side_d = chi(p, q, s);
  const int cdw = tw[r * kTenPoints + s];
  for (int i = 0; i < kTenPoints; ++i) {
    if (i == p || i == q || i == r2 || i == s2 || chi(p, q, i) != side_c) continue;
    for (int j = 0; j < kTenPoints; ++j) {
      if (j == p || j == q || j == r2 || j == s2 || j == i || chi(p, q, j) != side_d) continue;
      const int sv = tv[i * kTenPoints + j];
      if (sv == kUnknownSign || sv == sc) continue;
      const int sw = tw[i * kTenPoints + j];
      if (sw == kUnknownSign || sw == 0) continue;
      if (sw != -sc) return false;
      if (cdw != kUnknownSign && cdw != -sc) return false;
    }
  }
  return true;
}

bool ip_edge_tables(const Chirotope& chi, const IntersectionQuad& qv, const YSignTable& tv,
                    const IntersectionQuad& qw, const YSignTable& tw, EdgeCheck mode) {
  std::optional<std::pair<Line, Line>> sv, sw;
  for (const Line l : {Line{qv.a, qv.b}, Line{qv.c, qv.d}}) {
    if (auto x = split_on(qw, l.p, l.q)) {
      sv = split_on(qv, l.p, l.q);
      sw = x;
      break;
    }
  }
  if (!sv) return true;
  const int p = sv->first.p, q = sv->first.q;
  const int r = sv->second.p, s = sv->second.q;
  int r2 = sw->second.p, s2 = sw->second.q;
  if (chi(p, q, r) != chi(p, q, r2)) std::swap(r2, s2);
  if (!shared_line_certificate(chi, tv, tw, p, q, r, s, r2, s2)) return false;
  if (mode == EdgeCheck::both && !shared_line_certificate(chi, tw, tv, p, q, r2, s2, r, s)) return false;
  return true;
}

}  // namespace

bool ip_edge(const Chirotope& chi, const OrientationVertex& v, const OrientationVertex& w, EdgeCheck mode) {
  if (v.quad == w.quad) throw std::invalid_argument("ip_edge needs vertices of two different quads");
  return ip_edge_tables(chi, v.quad, y_sign_table(chi, v), w.quad, y_sign_table(chi, w), mode);
}

bool color_edge(const Chirotope& chi, const OrientationVertex& v, const ColorPartition& cp,
                const PartitionSet& cached_3331) {
  for (const auto& tp : cached_3331)
    if (is_rainbow(tp, cp)) return false;
  for (const auto& tp : tverberg_3322_at(chi, v))
    if (is_rainbow(tp, cp)) return false;
  return true;
}

const ColorPartition& TverbergGraph::color(VertexId v) const {
  if (v < color_offset) throw std::out_of_range("not a colour vertex");
  return enumerate_color_partitions().at(v - color_offset);
}

TverbergGraph build_H(const Chirotope& chi, EdgeCheck mode) {
  if (chi.size() != kTenPoints) throw std::invalid_argument("build_H needs a chirotope on 10 elements");
  if (!chi.is_uniform()) throw std::invalid_argument("build_H needs a uniform chirotope");
  TverbergGraph h;
  h.quads = valid_quads(chi);
  std::vector<std::size_t> sizes;
  for (std::size_t p = 0; p < h.quads.size(); ++p) {
    auto vs = enumerate_orientation_vertices(chi, h.quads[p]);
    if (vs.empty()) h.empty_parts.push_back(p);
    sizes.push_back(vs.size());
    for (auto& v : vs) h.vertices.push_back(std::move(v));
  }
  const auto& colors = enumerate_color_partitions();
  h.color_offset = h.vertices.size();
  sizes.push_back(colors.size());

  KPartiteGraphBuilder builder(sizes);
  const std::size_t nv = h.vertices.size();
  std::vector<YSignTable> tables(nv);
  std::vector<std::vector<PairMask>> local(nv);
  for (std::size_t x = 0; x < nv; ++x) {
    tables[x] = y_sign_table(chi, h.vertices[x]);
    for (const auto& tp : tverberg_3322_at(chi, h.vertices[x])) local[x].push_back(inner_pairs(tp.pieces));
  }

  for (VertexId x = 0; x < nv; ++x)
    for (VertexId y = x + 1; y < nv; ++y) {
      if (builder.part_of(x) == builder.part_of(y)) continue;
      if (ip_edge_tables(chi, h.vertices[x].quad, tables[x], h.vertices[y].quad, tables[y], mode))
        builder.add_edge(x, y);
    }

  std::vector<PairMask> global;
  for (const auto& tp : tverberg_3331(chi)) global.push_back(inner_pairs(tp.pieces));
  for (std::size_t c = 0; c < colors.size(); ++c) {
    const PairMask cm = inner_pairs(colors[c].classes);
    const auto rainbow = [cm](PairMask tm) { return (tm & cm) == 0; };
    if (std::any_of(global.begin(), global.end(), rainbow)) continue;
    const auto cv = static_cast<VertexId>(h.color_offset + c);
    for (VertexId x = 0; x < nv; ++x)
      if (std::none_of(local[x].begin(), local[x].end(), rainbow)) builder.add_edge(x, cv);
  }
  h.graph = std::move(builder).finish();
  return h;
}

std::string to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::verified: return "verified";
    case VerifyStatus::counterexample: return "counterexample";
    case VerifyStatus::timeout: return "timeout";
  }
  return "?";
}

VerifyResult verify_chirotope(const Chirotope& chi, Algorithm alg, std::optional<std::chrono::milliseconds> timeout,
                              TverbergGraph* keep_graph) {
  using ms = std::chrono::duration<double, std::milli>;
  VerifyResult r;
  const auto t0 = SteadyClock::now();
  TverbergGraph h = build_H(chi);
  const auto t1 = SteadyClock::now();
  r.build_ms = ms(t1 - t0).count();
  r.parts = h.graph.part_count();
  r.vertices = h.graph.vertex_count();
  r.edges = h.graph.edge_count();
  r.empty_parts = h.empty_parts.size();
  const auto answer = has_kclique(h.graph, alg, timeout);
  r.search_ms = ms(SteadyClock::now() - t1).count();
  if (const auto* found = std::get_if<CliqueFound>(&answer)) {
    r.status = VerifyStatus::counterexample;
    r.clique = found->witness;
  } else if (std::holds_alternative<NoClique>(answer)) {
    r.status = VerifyStatus::verified;
  } else {
    r.status = VerifyStatus::timeout;
  }
  if (keep_graph) *keep_graph = std::move(h);
  return r;
}

}  // namespace tenpoints
