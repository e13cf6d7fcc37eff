#pragma once

#include <array>
#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tenpoints/chirotope.hpp"
#include "tenpoints/clique.hpp"
#include "tenpoints/kpartite_graph.hpp"

namespace tenpoints {

inline constexpr int kTenPoints = 10;

/// Subsets of {0..9} as bitmasks.
using PointMask = std::uint16_t;
/// Subsets of the 45 unordered pairs of {0..9}, bit pair_index(i, j).
using PairMask = std::uint64_t;

int pair_index(int i, int j);
/// All pairs inside one of the given pieces.
PairMask inner_pairs(std::span<const PointMask> pieces);
std::vector<int> mask_members(PointMask m);

/// Partition of the ten points into colour classes of size at most 3.
/// Classes are ordered by size (largest first), then by smallest element.
struct ColorPartition {
  std::vector<PointMask> classes;

  std::vector<std::size_t> profile() const;
  friend auto operator<=>(const ColorPartition&, const ColorPartition&) = default;
};

/// Every colour partition with profile 3,3,3,1, then 3,3,2,2, then
/// 2,2,2,2,2; lexicographic by class member lists within a profile.
const std::vector<ColorPartition>& enumerate_color_partitions();

/// Four pieces covering {0..9}, ordered by size (largest first) and then by
/// smallest element.
struct TverbergPartition {
  std::array<PointMask, 4> pieces{};

  static TverbergPartition make(PointMask p0, PointMask p1, PointMask p2, PointMask p3);
  /// For a 3,3,2,2 partition, the quad formed by its two 2-pieces.
  std::optional<IntersectionQuad> quad() const;
  bool is_3331() const;
  std::string str() const;

  friend auto operator<=>(const TverbergPartition&, const TverbergPartition&) = default;
};

using PartitionSet = std::set<TverbergPartition>;

/// Every piece meets every colour class in at most one point.
bool is_rainbow(const TverbergPartition& tp, const ColorPartition& cp);

/// Partitions into three triangles and a point lying inside all three.
PartitionSet tverberg_3331(const Chirotope& chi);

/// Sign choices chi(i, j, y) for the pairs i < j that lie in opposite
/// regions of the quad, y being the crossing of its two lines.
struct OrientationVertex {
  IntersectionQuad quad;
  std::vector<std::pair<int, int>> pairs;  // lexicographic
  std::vector<std::int8_t> signs;

  std::optional<int> stored(int i, int j) const;
  friend bool operator==(const OrientationVertex&, const OrientationVertex&) = default;
};

/// The opposite-region pairs of a quad, i < j, lexicographic.
std::vector<std::pair<int, int>> opposite_pairs(const Chirotope& chi, const IntersectionQuad& q);

/// chi(i, j, y) where it follows from the vertex: 0 on either line's own
/// pair, the side rule for pairs through a quad point, the stored value for
/// opposite pairs and the product rule for neighbouring pairs. Pairs in a
/// common region give nullopt.
std::optional<int> determined_sign(const Chirotope& chi, const OrientationVertex& v, int i, int j);

/// determined_sign for all ordered pairs, indexed 10 * i + j; kUnknownSign
/// marks pairs with no determined value.
inline constexpr std::int8_t kUnknownSign = 2;
using YSignTable = std::array<std::int8_t, kTenPoints * kTenPoints>;
YSignTable y_sign_table(const Chirotope& chi, const OrientationVertex& v);

/// Whether y lies in the triangle {i, j, k} (disjoint from the quad).
bool triangle_contains_y(const Chirotope& chi, const OrientationVertex& v, int i, int j, int k);

/// The 3,3,2,2 partitions through y: both triangles on the other six points
/// contain y, and the two lines of the quad form the 2-pieces.
PartitionSet tverberg_3322_at(const Chirotope& chi, const OrientationVertex& v);

/// Which constraint families prune the sign assignments. All on by default;
/// switching one off exists for tests.
struct VertexRules {
  bool triangle = true;    // opposite apex against a same-region or neighbouring pair
  bool noncrossing = true; // both points of a line on one side of ij fixes chi(i, j, y)
  bool transfer = true;    // parallel opposite pairs across one line share their sign
};

/// All sign assignments on the opposite pairs that pass the rules, in
/// lexicographic order of their sign vectors (-1 before +1).
std::vector<OrientationVertex> enumerate_orientation_vertices(const Chirotope& chi, const IntersectionQuad& q,
                                                              VertexRules rules = {});

/// Which way round the shared-line certificate is tested between two vertices.
enum class EdgeCheck { forward, both };

/// False iff v and w sit on quads sharing a line and the shared-line
/// certificate finds a contradiction. Quads without a common line are
/// always adjacent.
bool ip_edge(const Chirotope& chi, const OrientationVertex& v, const OrientationVertex& w,
             EdgeCheck mode = EdgeCheck::both);

/// True iff no partition in cached_3331 or at v is rainbow for cp.
bool color_edge(const Chirotope& chi, const OrientationVertex& v, const ColorPartition& cp,
                const PartitionSet& cached_3331);

/// The graph whose cliques stand for colourings without rainbow partitions:
/// one part per valid quad with its orientation vertices, then one part with
/// all colour partitions.
struct TverbergGraph {
  KPartiteGraph graph;
  std::vector<IntersectionQuad> quads;       // part p < quads.size()
  std::vector<OrientationVertex> vertices;   // graph ids below color_offset
  std::size_t color_offset = 0;              // first id of the colour part
  std::vector<std::size_t> empty_parts;      // quads without any vertex

  bool is_color_vertex(VertexId v) const { return v >= color_offset; }
  const ColorPartition& color(VertexId v) const;
};

TverbergGraph build_H(const Chirotope& chi, EdgeCheck mode = EdgeCheck::both);

enum class VerifyStatus { verified, counterexample, timeout };
std::string to_string(VerifyStatus s);

struct VerifyResult {
  VerifyStatus status = VerifyStatus::timeout;
  std::optional<Clique> clique;
  std::size_t parts = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t empty_parts = 0;
  double build_ms = 0;
  double search_ms = 0;
};

/// Builds H and searches it for a clique with one vertex in every part.
VerifyResult verify_chirotope(const Chirotope& chi, Algorithm alg,
                              std::optional<std::chrono::milliseconds> timeout = std::nullopt,
                              TverbergGraph* keep_graph = nullptr);

}  // namespace tenpoints
