#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tenpoints/vertex_set.hpp"

namespace tenpoints {

struct Edge {
  VertexId u;
  VertexId v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph whose vertices are split into k contiguous id ranges (parts) with
/// no edge inside a part. Immutable once built; adjacency rows are bitsets.
class KPartiteGraph {
 public:
  KPartiteGraph() = default;

  std::size_t vertex_count() const { return bounds_.empty() ? 0 : bounds_.back(); }
  std::size_t part_count() const { return bounds_.empty() ? 0 : bounds_.size() - 1; }
  std::size_t edge_count() const { return edge_count_; }

  std::size_t part_begin(std::size_t p) const { return bounds_[p]; }
  std::size_t part_end(std::size_t p) const { return bounds_[p + 1]; }
  std::size_t part_size(std::size_t p) const { return bounds_[p + 1] - bounds_[p]; }
  std::size_t part_of(VertexId v) const { return part_index_[v]; }
  std::span<const std::size_t> part_bounds() const { return bounds_; }
  std::vector<std::size_t> part_sizes() const;

  const VertexSet& neighbors(VertexId v) const { return rows_[v]; }
  bool adjacent(VertexId u, VertexId v) const { return rows_[u].contains(v); }
  std::size_t degree(VertexId v) const { return rows_[v].count(); }

  /// All edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const KPartiteGraph&, const KPartiteGraph&) = default;

 private:
  friend class KPartiteGraphBuilder;

  std::vector<std::size_t> bounds_;
  std::vector<std::uint32_t> part_index_;
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

/// Incremental construction; validates every edge as it is added.
class KPartiteGraphBuilder {
 public:
  explicit KPartiteGraphBuilder(std::span<const std::size_t> part_sizes);

  std::size_t vertex_count() const { return graph_.vertex_count(); }
  std::size_t part_of(VertexId v) const { return graph_.part_of(v); }

  /// Adds {u, v}; repeated edges are collapsed. Throws GraphError for ids out
  /// of range or endpoints in the same part.
  void add_edge(VertexId u, VertexId v);

  KPartiteGraph finish() &&;

 private:
  KPartiteGraph graph_;
};

/// Builds a graph from part sizes and an edge list (see KPartiteGraphBuilder).
KPartiteGraph build_graph(std::span<const std::size_t> part_sizes, std::span<const Edge> edges);

}  // namespace tenpoints
