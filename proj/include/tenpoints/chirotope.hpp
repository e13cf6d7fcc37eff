#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tenpoints {

/// Integer point in the plane.
struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Largest |coordinate| accepted by Chirotope::from_points and the exact
/// geometric predicates.
inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 16;

/// Rank-3 chirotope on up to 16 elements.
///
/// One sign per sorted triple i < j < k; any other ordered triple is
/// answered by the alternating rule, and repeated indices give 0.
class Chirotope {
 public:
  static constexpr int kMaxElements = 16;
  static constexpr std::size_t kMaxTriples = 560;  // C(16, 3)

  /// The identically zero map on n elements (not a chirotope until signs are set).
  explicit Chirotope(int n);

  /// Every sorted triple positive: n points in convex position, counterclockwise.
  static Chirotope convex(int n);
  /// Orientation signs of an integer point configuration, computed exactly.
  static Chirotope from_points(std::span<const Point> points);
  /// Signs of the sorted triples in lexicographic order (i < j < k).
  static Chirotope from_lex_signs(int n, std::span<const std::int8_t> signs);

  int size() const { return n_; }

  /// Alternating sign of (i, j, k); throws std::out_of_range for bad indices.
  int sign(int i, int j, int k) const;
  /// Unchecked variant of sign() for inner loops.
  int operator()(int i, int j, int k) const;

  /// Sets the sign so that sign(i, j, k) == s afterwards (indices distinct).
  void set(int i, int j, int k, int s);

  /// Sorted-triple signs in lexicographic order.
  std::vector<std::int8_t> lex_signs() const;
  /// No sorted triple has sign 0.
  bool is_uniform() const;
  bool is_zero() const;

  friend bool operator==(const Chirotope&, const Chirotope&) = default;

 private:
  int n_;
  std::array<std::int8_t, kMaxTriples> signs_{};  // colex order of sorted triples
};

struct AxiomReport {
  bool ok = true;
  std::string message;
  /// When a (B2) exchange failure is found: the ordered triples x and y.
  std::optional<std::array<int, 3>> x, y;
};

/// Checks (B0) and the exchange condition in its "some i balances the
/// product" form over all ordered triple pairs. (B1) holds by construction.
AxiomReport check_axioms(const Chirotope& chi);

/// For every ordered 4-tuple with chi(x1,x2,x3) != 0, one of chi(x1,x2,x4),
/// chi(x2,x3,x4), chi(x3,x1,x4) equals chi(x1,x2,x3).
bool is_acyclic(const Chirotope& chi);

/// No element lies in the triangle spanned by three others (uniform chirotopes).
bool in_convex_position(const Chirotope& chi);

/// Whether h lies in the triangle e, f, g: chi(e,f,h) = chi(f,g,h) = chi(g,e,h) != 0.
bool triangle_contains(const Chirotope& chi, int e, int f, int g, int h);

/// The intersection of lines ab and cd, named by its canonical notation:
/// a < b, c < d and (a, b) < (c, d).
struct IntersectionQuad {
  int a = 0, b = 0, c = 0, d = 0;

  /// Canonical form of any of the eight notations of the same point.
  static IntersectionQuad canonical(int a, int b, int c, int d);
  /// The eight notations, canonical one first.
  std::array<std::array<int, 4>, 8> notations() const;
  bool contains(int h) const { return h == a || h == b || h == c || h == d; }

  friend auto operator<=>(const IntersectionQuad&, const IntersectionQuad&) = default;
};

class DegenerateQuad : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class QuadKind { not_crossing, crossing_invalid, valid };

/// Crossing iff chi(a,b,c) chi(a,b,d) = -1 = chi(c,d,a) chi(c,d,b). Valid
/// iff crossing and both lines have between 2 and 4 of the other six
/// elements on their positive side. Throws DegenerateQuad when a triple of
/// the quad has sign 0.
QuadKind classify_quad(const Chirotope& chi, const IntersectionQuad& q);

/// All valid quads of a 10-element chirotope in canonical order.
std::vector<IntersectionQuad> valid_quads(const Chirotope& chi);

/// Side of h with respect to the lines ab and cd of a quad.
struct Region {
  int ab = 0;
  int cd = 0;
  friend bool operator==(const Region&, const Region&) = default;
};

Region region_of(const Chirotope& chi, const IntersectionQuad& q, int h);

enum class PairClass { same, neighboring, opposite };

struct PairRelation {
  PairClass kind;
  Region first;
  Region second;
};

/// Same region: both sides agree; opposite: both differ; neighboring: one
/// differs. Throws std::invalid_argument if i or j belongs to the quad.
PairRelation pair_class(const Chirotope& chi, const IntersectionQuad& q, int i, int j);

std::string to_string(QuadKind k);
std::string to_string(PairClass k);

}  // namespace tenpoints
