#include "tenpoints/chirotope.hpp"

#include <algorithm>
#include <utility>

namespace tenpoints {

namespace {

struct TripleSlot {
  std::uint16_t index = 0;
  std::int8_t parity = 0;  // 0 when two indices coincide
};

constexpr int colex_index(int a, int b, int c) {  // a < b < c
  return a + b * (b - 1) / 2 + c * (c - 1) * (c - 2) / 6;
}

constexpr int kN = Chirotope::kMaxElements;

constexpr std::array<TripleSlot, kN * kN * kN> make_slots() {
  std::array<TripleSlot, kN * kN * kN> t{};
  for (int i = 0; i < kN; ++i)
    for (int j = 0; j < kN; ++j)
      for (int k = 0; k < kN; ++k) {
        if (i == j || j == k || i == k) continue;
        int v[3] = {i, j, k};
        int parity = 1;
        for (int p = 0; p < 3; ++p)
          for (int q = 0; q + 1 < 3 - p; ++q)
            if (v[q] > v[q + 1]) {
              std::swap(v[q], v[q + 1]);
              parity = -parity;
            }
        t[(i * kN + j) * kN + k] = {static_cast<std::uint16_t>(colex_index(v[0], v[1], v[2])),
                                    static_cast<std::int8_t>(parity)};
      }
  return t;
}

constexpr auto kSlots = make_slots();

const TripleSlot& slot(int i, int j, int k) { return kSlots[(i * kN + j) * kN + k]; }

int binom3(int n) { return n * (n - 1) * (n - 2) / 6; }

}  // namespace

Chirotope::Chirotope(int n) : n_(n) {
  if (n < 0 || n > kMaxElements) throw std::invalid_argument("chirotope size must be in [0, 16]");
}

Chirotope Chirotope::convex(int n) {
  Chirotope chi(n);
  std::fill_n(chi.signs_.begin(), binom3(n), std::int8_t{1});
  return chi;
}

Chirotope Chirotope::from_points(std::span<const Point> points) {
  if (points.size() > static_cast<std::size_t>(kMaxElements))
    throw std::invalid_argument("at most 16 points are supported");
  for (const auto& p : points)
    if (p.x < -kMaxCoordinate || p.x > kMaxCoordinate || p.y < -kMaxCoordinate || p.y > kMaxCoordinate)
      throw std::out_of_range("point coordinate exceeds 2^16 in absolute value");
  const int n = static_cast<int>(points.size());
  Chirotope chi(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const auto& p = points[a];
        const auto& q = points[b];
        const auto& r = points[c];
        const std::int64_t det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
        chi.signs_[colex_index(a, b, c)] = static_cast<std::int8_t>((det > 0) - (det < 0));
      }
  return chi;
}

Chirotope Chirotope::from_lex_signs(int n, std::span<const std::int8_t> signs) {
  Chirotope chi(n);
  if (signs.size() != static_cast<std::size_t>(binom3(n)))
    throw std::invalid_argument("expected C(n, 3) signs");
  std::size_t pos = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const int s = signs[pos++];
        if (s < -1 || s > 1) throw std::invalid_argument("sign must be -1, 0 or +1");
        chi.signs_[colex_index(a, b, c)] = static_cast<std::int8_t>(s);
      }
  return chi;
}

int Chirotope::sign(int i, int j, int k) const {
  if (i < 0 || j < 0 || k < 0 || i >= n_ || j >= n_ || k >= n_)
    throw std::out_of_range("chirotope index out of range");
  return (*this)(i, j, k);
}

int Chirotope::operator()(int i, int j, int k) const {
  const auto& s = slot(i, j, k);
  return s.parity * signs_[s.index];
}

void Chirotope::set(int i, int j, int k, int s) {
  if (i < 0 || j < 0 || k < 0 || i >= n_ || j >= n_ || k >= n_)
    throw std::out_of_range("chirotope index out of range");
  const auto& sl = slot(i, j, k);
  if (sl.parity == 0) throw std::invalid_argument("chirotope indices must be distinct");
  if (s < -1 || s > 1) throw std::invalid_argument("sign must be -1, 0 or +1");
  signs_[sl.index] = static_cast<std::int8_t>(sl.parity * s);
}

std::vector<std::int8_t> Chirotope::lex_signs() const {
  std::vector<std::int8_t> out;
  out.reserve(binom3(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      for (int c = b + 1; c < n_; ++c) out.push_back(signs_[colex_index(a, b, c)]);
  return out;
}

bool Chirotope::is_uniform() const {
  return std::none_of(signs_.begin(), signs_.begin() + binom3(n_), [](std::int8_t s) { return s == 0; });
}

bool Chirotope::is_zero() const {
  return std::all_of(signs_.begin(), signs_.begin() + binom3(n_), [](std::int8_t s) { return s == 0; });
}

AxiomReport check_axioms(const Chirotope& chi) {
  AxiomReport r;
  const int n = chi.size();
  if (n >= 3 && chi.is_zero()) {
    r.ok = false;
    r.message = "identically zero";
    return r;
  }
  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (i != j && j != k && i != k && chi(i, j, k) != 0) triples.push_back({i, j, k});
  for (const auto& x : triples) {
    const int sx = chi(x[0], x[1], x[2]);
    for (const auto& y : triples) {
      const int target = sx * chi(y[0], y[1], y[2]);
      bool balanced = false;
      for (int i = 0; i < 3 && !balanced; ++i) {
        auto yy = y;
        yy[i] = x[0];
        balanced = chi(y[i], x[1], x[2]) * chi(yy[0], yy[1], yy[2]) == target;
      }
      if (!balanced) {
        r.ok = false;
        r.message = "exchange condition fails";
        r.x = x;
        r.y = y;
        return r;
      }
    }
  }
  return r;
}

bool is_acyclic(const Chirotope& chi) {
  const int n = chi.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int s = chi(a, b, c);
        if (s == 0) continue;
        for (int d = 0; d < n; ++d) {
          if (d == a || d == b || d == c) continue;
          if (chi(a, b, d) != s && chi(b, c, d) != s && chi(c, a, d) != s) return false;
        }
      }
  return true;
}

bool triangle_contains(const Chirotope& chi, int e, int f, int g, int h) {
  const int s = chi(e, f, h);
  return s != 0 && chi(f, g, h) == s && chi(g, e, h) == s;
}

bool in_convex_position(const Chirotope& chi) {
  const int n = chi.size();
  for (int h = 0; h < n; ++h)
    for (int e = 0; e < n; ++e)
      for (int f = e + 1; f < n; ++f)
        for (int g = f + 1; g < n; ++g) {
          if (h == e || h == f || h == g) continue;
          if (triangle_contains(chi, e, f, g, h)) return false;
        }
  return true;
}

IntersectionQuad IntersectionQuad::canonical(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (std::pair(a, b) > std::pair(c, d)) {
    std::swap(a, c);
    std::swap(b, d);
  }
  return {a, b, c, d};
}

std::array<std::array<int, 4>, 8> IntersectionQuad::notations() const {
  return {{{a, b, c, d}, {b, a, c, d}, {a, b, d, c}, {b, a, d, c},
           {c, d, a, b}, {d, c, a, b}, {c, d, b, a}, {d, c, b, a}}};
}

QuadKind classify_quad(const Chirotope& chi, const IntersectionQuad& q) {
  const auto [a, b, c, d] = q;
  const int abc = chi(a, b, c), abd = chi(a, b, d), cda = chi(c, d, a), cdb = chi(c, d, b);
  if (abc == 0 || abd == 0 || cda == 0 || cdb == 0) throw DegenerateQuad("quad has a zero triple");
  if (abc * abd != -1 || cda * cdb != -1) return QuadKind::not_crossing;
  int pos_ab = 0, pos_cd = 0;
  for (int h = 0; h < chi.size(); ++h) {
    if (q.contains(h)) continue;
    const int s1 = chi(a, b, h), s2 = chi(c, d, h);
    if (s1 == 0 || s2 == 0) throw DegenerateQuad("element on a line of the quad");
    pos_ab += s1 > 0;
    pos_cd += s2 > 0;
  }
  const auto balanced = [](int k) { return 2 <= k && k <= 4; };
  return balanced(pos_ab) && balanced(pos_cd) ? QuadKind::valid : QuadKind::crossing_invalid;
}

std::vector<IntersectionQuad> valid_quads(const Chirotope& chi) {
  std::vector<IntersectionQuad> out;
  const int n = chi.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = a + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          if (c == b || d == b) continue;
          const IntersectionQuad q{a, b, c, d};
          if (classify_quad(chi, q) == QuadKind::valid) out.push_back(q);
        }
  return out;
}

Region region_of(const Chirotope& chi, const IntersectionQuad& q, int h) {
  return {chi(q.a, q.b, h), chi(q.c, q.d, h)};
}

PairRelation pair_class(const Chirotope& chi, const IntersectionQuad& q, int i, int j) {
  if (q.contains(i) || q.contains(j) || i == j)
    throw std::invalid_argument("pair must be two distinct elements outside the quad");
  const Region ri = region_of(chi, q, i), rj = region_of(chi, q, j);
  const int differ = (ri.ab != rj.ab) + (ri.cd != rj.cd);
  const PairClass k = differ == 0 ? PairClass::same : differ == 1 ? PairClass::neighboring : PairClass::opposite;
  return {k, ri, rj};
}

std::string to_string(QuadKind k) {
  switch (k) {
    case QuadKind::not_crossing: return "not_crossing";
    case QuadKind::crossing_invalid: return "crossing_invalid";
    case QuadKind::valid: return "valid";
  }
  return "?";
}

std::string to_string(PairClass k) {
  switch (k) {
    case PairClass::same: return "same";
    case PairClass::neighboring: return "neighboring";
    case PairClass::opposite: return "opposite";
  }
  return "?";
}

}  // namespace tenpoints
