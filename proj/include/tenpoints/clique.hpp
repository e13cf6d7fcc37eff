#pragma once

#include <chrono>
#include <compare>
#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "tenpoints/kpartite_graph.hpp"

namespace tenpoints {

/// One vertex per part, listed in part order.
struct Clique {
  std::vector<VertexId> vertices;
  friend auto operator<=>(const Clique&, const Clique&) = default;
};

/// True iff `c` picks exactly one vertex of every part and all picks are
/// pairwise adjacent in `g`.
bool is_clique_of(const KPartiteGraph& g, const Clique& c);

using SteadyClock = std::chrono::steady_clock;
using Deadline = std::optional<SteadyClock::time_point>;

enum class Algorithm { kpkc, findclique, brute };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// The k-partite k-clique iterator that orders vertices by how few
/// neighbours they keep in the current subgraph.
///
/// At each of the first `prec_depth` recursion levels the surviving vertices
/// are re-weighted (popcount of their adjacency row against the survivors)
/// and sorted ascending, ties by id; vertices without a neighbour in some
/// other unfinished part are dropped while weighting. The top level repeats
/// this until nothing more is dropped. After a vertex's subtree is done it
/// is removed: a part left with one survivor triggers a re-sort, a part left
/// with none ends the level. Scratch for every level is allocated up front.
class KpkcIterator {
 public:
  explicit KpkcIterator(const KPartiteGraph& g, int prec_depth = 5, Deadline deadline = std::nullopt);
  KpkcIterator(KPartiteGraph&&, int = 5, Deadline = std::nullopt) = delete;

  /// Advances to the next clique. False when the search is exhausted or the
  /// deadline passed (see timed_out()).
  bool next();
  const Clique& current() const { return current_; }
  bool timed_out() const { return timed_out_; }

  /// Times the per-level scratch had to grow after construction. Stays zero.
  std::size_t scratch_growth() const { return scratch_growth_; }
  /// Search-tree nodes entered so far.
  std::size_t nodes() const { return nodes_; }

 private:
  struct Level {
    VertexSet active;
    std::vector<VertexId> order;
    std::vector<std::uint32_t> weight;
    std::vector<std::uint32_t> survivors;  // per part, meaningful for open parts
    std::size_t cursor = 0;
    std::size_t open_parts = 0;
    int budget = 0;
    VertexId chosen = 0;
  };

  bool enter(std::size_t depth);
  bool reweigh(Level& level);
  bool remove_vertex(Level& level, VertexId v);
  bool advance(std::size_t depth, VertexId& out);
  void emit();
  bool check_deadline();

  const KPartiteGraph* g_;
  Deadline deadline_;
  std::vector<Level> levels_;
  std::vector<char> part_taken_;
  std::vector<VertexId> picked_;  // picked_[part]
  std::vector<std::size_t> stack_parts_;
  std::size_t depth_ = 0;
  bool started_ = false;
  bool finished_ = false;
  bool timed_out_ = false;
  std::size_t scratch_growth_ = 0;
  std::size_t nodes_ = 0;
  Clique current_;
};

/// Depth-first k-clique iterator that always branches on a smallest
/// surviving part (ties to the lowest part index) and recurses into the
/// subgraph induced by the chosen vertex's neighbours.
class FindCliqueIterator {
 public:
  explicit FindCliqueIterator(const KPartiteGraph& g, Deadline deadline = std::nullopt);
  FindCliqueIterator(KPartiteGraph&&, Deadline = std::nullopt) = delete;

  bool next();
  const Clique& current() const { return current_; }
  bool timed_out() const { return timed_out_; }
  std::size_t nodes() const { return nodes_; }

 private:
  struct Level {
    VertexSet active;
    std::size_t pivot_part = 0;
    std::size_t cursor = 0;
    std::size_t open_parts = 0;
  };

  bool enter(std::size_t depth);
  bool check_deadline();

  const KPartiteGraph* g_;
  Deadline deadline_;
  std::vector<Level> levels_;
  std::vector<char> part_taken_;
  std::vector<VertexId> picked_;
  std::size_t depth_ = 0;
  bool started_ = false;
  bool finished_ = false;
  bool timed_out_ = false;
  std::size_t nodes_ = 0;
  Clique current_;
};

/// Largest product of part sizes brute_cliques accepts.
inline constexpr double kBruteProductLimit = 1e7;

/// Exhaustive oracle: walks the cartesian product of the parts and keeps the
/// tuples whose pairs are all adjacent. Sorted output. Throws
/// std::length_error when the product exceeds kBruteProductLimit.
std::vector<Clique> brute_cliques(const KPartiteGraph& g);

/// All cliques found by `alg`, sorted. Intended for tests and small graphs.
std::vector<Clique> all_cliques(const KPartiteGraph& g, Algorithm alg, int prec_depth = 5);

struct CliqueFound {
  Clique witness;
};
struct NoClique {};
struct SearchTimeout {};
using CliqueAnswer = std::variant<CliqueFound, NoClique, SearchTimeout>;

/// Existence check. A returned witness has been re-verified edge by edge.
CliqueAnswer has_kclique(const KPartiteGraph& g, Algorithm alg,
                         std::optional<std::chrono::milliseconds> timeout = std::nullopt,
                         int prec_depth = 5);

}  // namespace tenpoints
