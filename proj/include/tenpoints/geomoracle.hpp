#pragma once

// Exact planar geometry on integer points and line intersections, used as
// ground truth for the chirotope pipeline. No floating point.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "tenpoints/chirotope.hpp"
#include "tenpoints/tverberg.hpp"

namespace tenpoints {

/// (x / den, y / den) with den > 0, not necessarily reduced.
struct RationalPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t den = 1;

  static RationalPoint from(const Point& p) { return {p.x, p.y, 1}; }
};

/// Orientation sign of three rational points.
int orient(const RationalPoint& p, const RationalPoint& q, const RationalPoint& r);
/// Orientation of two input points and a line intersection (128-bit path).
int orient(const Point& p, const Point& q, const RationalPoint& r);
int orient(const Point& p, const Point& q, const Point& r);

/// Intersection of lines ab and cd; nullopt when they are parallel.
/// All coordinates must satisfy |x| <= kMaxCoordinate.
std::optional<RationalPoint> line_intersection(const Point& a, const Point& b, const Point& c, const Point& d);

/// No three points collinear and no three lines through pairwise disjoint
/// point pairs meeting in one point.
bool strong_general_position(std::span<const Point> points);

/// Half-width of the box sample_config draws coordinates from.
inline constexpr std::int64_t kSampleBox = 4096;
inline constexpr int kSampleRetries = 10000;

/// Ten points drawn uniformly from the box, redrawn until they are in strong
/// general position and no two lines through disjoint pairs are parallel.
std::array<Point, kTenPoints> sample_config(std::uint64_t seed);

/// The actual signs orient(p_i, p_j, y) on the opposite pairs of a quad.
OrientationVertex true_orientation_vertex(std::span<const Point> points, const IntersectionQuad& q);

/// All Tverberg partitions of ten points by exhaustive search.
PartitionSet geometric_tverberg_partitions(std::span<const Point> points);

/// Whether the convex hulls of the four pieces share a point.
bool is_geometric_tverberg(std::span<const Point> points, const TverbergPartition& tp);

std::optional<TverbergPartition> rainbow_witness(const PartitionSet& partitions, const ColorPartition& cp);

struct TheoremCheck {
  bool ok = true;
  std::optional<ColorPartition> counterexample;
};

/// Every colour partition admits a rainbow Tverberg partition.
TheoremCheck check_theorem_for_config(std::span<const Point> points);

/// Chirotope pipeline against exact geometry on one configuration.
struct SoundnessReport {
  bool partitions = true;  // 3,3,3,1 plus 3,3,2,2 at true vertices equals the geometric set
  bool enumerated = true;  // every true orientation vertex is a vertex of H
  bool adjacent = true;    // true vertices are pairwise adjacent in H
  bool signs = true;       // determined_sign agrees with orient wherever it answers
  std::string detail;      // first failure, empty when ok()

  bool ok() const { return partitions && enumerated && adjacent && signs; }
};

SoundnessReport check_soundness(std::span<const Point> points);

}  // namespace tenpoints
