#include "tenpoints/kpartite_graph.hpp"

#include <string>

namespace tenpoints {

std::vector<std::size_t> KPartiteGraph::part_sizes() const {
  std::vector<std::size_t> sizes(part_count());
  for (std::size_t p = 0; p < sizes.size(); ++p) sizes[p] = part_size(p);
  return sizes;
}

std::vector<Edge> KPartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u) {
    const VertexSet& row = rows_[u];
    for (std::size_t v = row.next(u + 1); v < row.capacity(); v = row.next(v + 1))
      out.push_back({u, static_cast<VertexId>(v)});
  }
  return out;
}

KPartiteGraphBuilder::KPartiteGraphBuilder(std::span<const std::size_t> part_sizes) {
  graph_.bounds_.reserve(part_sizes.size() + 1);
  graph_.bounds_.push_back(0);
  for (std::size_t s : part_sizes) graph_.bounds_.push_back(graph_.bounds_.back() + s);
  const std::size_t n = graph_.bounds_.back();
  graph_.part_index_.resize(n);
  for (std::size_t p = 0; p + 1 < graph_.bounds_.size(); ++p)
    for (std::size_t v = graph_.bounds_[p]; v < graph_.bounds_[p + 1]; ++v)
      graph_.part_index_[v] = static_cast<std::uint32_t>(p);
  graph_.rows_.assign(n, VertexSet(n));
}

void KPartiteGraphBuilder::add_edge(VertexId u, VertexId v) {
  const std::size_t n = graph_.vertex_count();
  if (u >= n || v >= n)
    throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                     ") has an id outside [0, " + std::to_string(n) + ")");
  if (graph_.part_index_[u] == graph_.part_index_[v])
    throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                     ") joins two vertices of part " + std::to_string(graph_.part_index_[u]));
  if (graph_.rows_[u].contains(v)) return;
  graph_.rows_[u].insert(v);
  graph_.rows_[v].insert(u);
  ++graph_.edge_count_;
}

KPartiteGraph KPartiteGraphBuilder::finish() && { return std::move(graph_); }

KPartiteGraph build_graph(std::span<const std::size_t> part_sizes, std::span<const Edge> edges) {
  KPartiteGraphBuilder builder(part_sizes);
  for (const Edge& e : edges) builder.add_edge(e.u, e.v);
  return std::move(builder).finish();
}

}  // namespace tenpoints
