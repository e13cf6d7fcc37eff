#include "tenpoints/clique.hpp"

#include <algorithm>
#include <stdexcept>

namespace tenpoints {

bool is_clique_of(const KPartiteGraph& g, const Clique& c) {
  if (c.vertices.size() != g.part_count()) return false;
  for (std::size_t p = 0; p < c.vertices.size(); ++p) {
    const VertexId v = c.vertices[p];
    if (v >= g.vertex_count() || g.part_of(v) != p) return false;
  }
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < c.vertices.size(); ++j)
      if (!g.adjacent(c.vertices[i], c.vertices[j])) return false;
  return true;
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kpkc: return "kpkc";
    case Algorithm::findclique: return "findclique";
    case Algorithm::brute: return "brute";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "kpkc") return Algorithm::kpkc;
  if (name == "findclique") return Algorithm::findclique;
  if (name == "brute") return Algorithm::brute;
  return std::nullopt;
}

namespace {
constexpr std::size_t kDeadlineStride = 1024;
}

// ---------------------------------------------------------------------------
// kpkc

KpkcIterator::KpkcIterator(const KPartiteGraph& g, int prec_depth, Deadline deadline)
    : g_(&g), deadline_(deadline) {
  const std::size_t n = g.vertex_count();
  const std::size_t k = g.part_count();
  levels_.resize(k + 1);
  for (std::size_t d = 0; d <= k; ++d) {
    Level& L = levels_[d];
    L.active = VertexSet(n);
    L.order.reserve(n);
    L.weight.assign(n, 0);
    L.survivors.assign(k, 0);
    L.open_parts = k - d;
  }
  levels_[0].active.fill();
  levels_[0].budget = std::max(prec_depth, 0);
  part_taken_.assign(k, 0);
  picked_.assign(k, 0);
}

bool KpkcIterator::check_deadline() {
  if (!deadline_ || nodes_ % kDeadlineStride != 0) return false;
  if (SteadyClock::now() < *deadline_) return false;
  timed_out_ = true;
  finished_ = true;
  return true;
}

// Recomputes weights and the candidate order of `level`, dropping vertices
// that lost every neighbour in some other open part. Returns the number of
// dropped vertices, or -1 if a part ran empty.
bool KpkcIterator::reweigh(Level& level) {
  const KPartiteGraph& g = *g_;
  const std::size_t k = g.part_count();
  const std::size_t cap_before = level.order.capacity();
  bool dropped_any = true;
  bool first_pass = true;
  // Only the top level repeats until nothing more drops out.
  const bool repeat = (&level == &levels_.front());
  while (dropped_any && (first_pass || repeat)) {
    dropped_any = false;
    first_pass = false;
    level.order.clear();
    bool dead = false;
    level.active.for_each([&](VertexId u) {
      if (dead) return;
      const std::size_t own = g.part_of(u);
      const VertexSet& row = g.neighbors(u);
      std::uint32_t total = 0;
      bool connected = true;
      for (std::size_t p = 0; p < k; ++p) {
        if (p == own || part_taken_[p]) continue;
        const std::size_t c = row.intersection_count(level.active, g.part_begin(p), g.part_end(p));
        if (c == 0) {
          connected = false;
          break;
        }
        total += static_cast<std::uint32_t>(c);
      }
      if (!connected) {
        level.active.erase(u);
        dropped_any = true;
        if (--level.survivors[own] == 0) dead = true;
        return;
      }
      level.weight[u] = total;
      level.order.push_back(u);
    });
    if (dead) return false;
  }
  std::sort(level.order.begin(), level.order.end(), [&](VertexId a, VertexId b) {
    return level.weight[a] != level.weight[b] ? level.weight[a] < level.weight[b] : a < b;
  });
  if (level.order.capacity() != cap_before) ++scratch_growth_;
  level.cursor = 0;
  return true;
}

bool KpkcIterator::enter(std::size_t depth) {
  ++nodes_;
  const KPartiteGraph& g = *g_;
  Level& L = levels_[depth];
  for (std::size_t p = 0; p < g.part_count(); ++p) {
    if (part_taken_[p]) continue;
    const std::size_t s = L.active.count(g.part_begin(p), g.part_end(p));
    if (s == 0) return false;
    L.survivors[p] = static_cast<std::uint32_t>(s);
  }
  if (L.budget > 0 && L.open_parts > 1) return reweigh(L);

  const std::size_t cap_before = L.order.capacity();
  L.order.clear();
  if (depth == 0) {
    L.active.for_each([&](VertexId v) { L.order.push_back(v); });
  } else {
    for (VertexId v : levels_[depth - 1].order)
      if (L.active.contains(v)) L.order.push_back(v);
  }
  if (L.order.capacity() != cap_before) ++scratch_growth_;
  L.cursor = 0;
  return true;
}

bool KpkcIterator::remove_vertex(Level& level, VertexId v) {
  level.active.erase(v);
  const std::size_t p = g_->part_of(v);
  if (--level.survivors[p] == 0) return false;
  if (level.survivors[p] == 1 && level.open_parts > 1) return reweigh(level);
  return true;
}

bool KpkcIterator::advance(std::size_t depth, VertexId& out) {
  Level& L = levels_[depth];
  while (L.cursor < L.order.size()) {
    const VertexId v = L.order[L.cursor];
    if (L.active.contains(v)) {
      out = v;
      return true;
    }
    ++L.cursor;
  }
  return false;
}

void KpkcIterator::emit() { current_.vertices = picked_; }

bool KpkcIterator::next() {
  if (finished_) return false;

  // Pops exhausted levels, removing the vertex each parent had branched on.
  auto backtrack = [this]() {
    while (depth_ > 0) {
      --depth_;
      Level& parent = levels_[depth_];
      part_taken_[g_->part_of(parent.chosen)] = 0;
      if (remove_vertex(parent, parent.chosen)) return true;
    }
    finished_ = true;
    return false;
  };

  if (!started_) {
    started_ = true;
    if (!enter(0)) {
      finished_ = true;
      return false;
    }
    if (levels_[0].open_parts == 0) {
      emit();
      finished_ = true;
      return true;
    }
  } else {
    Level& leaf = levels_[depth_];
    if (!remove_vertex(leaf, leaf.chosen) && !backtrack()) return false;
  }

  while (true) {
    if (check_deadline()) return false;
    Level& L = levels_[depth_];
    VertexId v = 0;
    if (!advance(depth_, v)) {
      if (!backtrack()) return false;
      continue;
    }
    L.chosen = v;
    const std::size_t part = g_->part_of(v);
    picked_[part] = v;
    if (L.open_parts == 1) {
      emit();
      return true;
    }
    part_taken_[part] = 1;
    Level& child = levels_[depth_ + 1];
    child.active.assign_intersection(L.active, g_->neighbors(v));
    child.budget = L.budget > 0 ? L.budget - 1 : 0;
    if (enter(depth_ + 1)) {
      ++depth_;
      continue;
    }
    part_taken_[part] = 0;
    if (!remove_vertex(L, v) && !backtrack()) return false;
  }
}

// ---------------------------------------------------------------------------
// FindClique

FindCliqueIterator::FindCliqueIterator(const KPartiteGraph& g, Deadline deadline)
    : g_(&g), deadline_(deadline) {
  const std::size_t k = g.part_count();
  levels_.resize(k + 1);
  for (std::size_t d = 0; d <= k; ++d) {
    levels_[d].active = VertexSet(g.vertex_count());
    levels_[d].open_parts = k - d;
  }
  levels_[0].active.fill();
  part_taken_.assign(k, 0);
  picked_.assign(k, 0);
}

bool FindCliqueIterator::check_deadline() {
  if (!deadline_ || nodes_ % kDeadlineStride != 0) return false;
  if (SteadyClock::now() < *deadline_) return false;
  timed_out_ = true;
  finished_ = true;
  return true;
}

bool FindCliqueIterator::enter(std::size_t depth) {
  ++nodes_;
  const KPartiteGraph& g = *g_;
  Level& L = levels_[depth];
  std::size_t best = g.part_count();
  std::size_t best_size = 0;
  for (std::size_t p = 0; p < g.part_count(); ++p) {
    if (part_taken_[p]) continue;
    const std::size_t s = L.active.count(g.part_begin(p), g.part_end(p));
    if (s == 0) return false;
    if (best == g.part_count() || s < best_size) {
      best = p;
      best_size = s;
    }
  }
  L.pivot_part = best;
  L.cursor = best < g.part_count() ? g.part_begin(best) : 0;
  return true;
}

bool FindCliqueIterator::next() {
  if (finished_) return false;
  const KPartiteGraph& g = *g_;
  if (!started_) {
    started_ = true;
    if (!enter(0)) {
      finished_ = true;
      return false;
    }
    if (levels_[0].open_parts == 0) {
      current_.vertices.clear();
      finished_ = true;
      return true;
    }
  }
  while (true) {
    if (check_deadline()) return false;
    Level& L = levels_[depth_];
    const std::size_t v = L.active.next(L.cursor);
    if (v >= g.part_end(L.pivot_part)) {
      if (depth_ == 0) {
        finished_ = true;
        return false;
      }
      --depth_;
      part_taken_[levels_[depth_].pivot_part] = 0;
      continue;
    }
    L.cursor = v + 1;
    picked_[L.pivot_part] = static_cast<VertexId>(v);
    if (L.open_parts == 1) {
      current_.vertices = picked_;
      return true;
    }
    part_taken_[L.pivot_part] = 1;
    levels_[depth_ + 1].active.assign_intersection(L.active, g.neighbors(static_cast<VertexId>(v)));
    if (enter(depth_ + 1)) {
      ++depth_;
    } else {
      part_taken_[L.pivot_part] = 0;
    }
  }
}

// ---------------------------------------------------------------------------
// Brute force

std::vector<Clique> brute_cliques(const KPartiteGraph& g) {
  const std::size_t k = g.part_count();
  double product = 1;
  for (std::size_t p = 0; p < k; ++p) product *= static_cast<double>(g.part_size(p));
  if (product > kBruteProductLimit)
    throw std::length_error("brute force refused: product of part sizes exceeds 1e7");

  std::vector<Clique> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  if (product == 0) return out;

  std::vector<VertexId> tuple(k);
  for (std::size_t p = 0; p < k; ++p) tuple[p] = static_cast<VertexId>(g.part_begin(p));
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = i + 1; j < k && ok; ++j) ok = g.adjacent(tuple[i], tuple[j]);
    if (ok) out.push_back({tuple});

    // Odometer step, last part fastest.
    std::size_t p = k;
    while (p > 0) {
      --p;
      if (++tuple[p] < g.part_end(p)) break;
      tuple[p] = static_cast<VertexId>(g.part_begin(p));
      if (p == 0) return out;
    }
  }
}

std::vector<Clique> all_cliques(const KPartiteGraph& g, Algorithm alg, int prec_depth) {
  std::vector<Clique> out;
  switch (alg) {
    case Algorithm::kpkc: {
      KpkcIterator it(g, prec_depth);
      while (it.next()) out.push_back(it.current());
      break;
    }
    case Algorithm::findclique: {
      FindCliqueIterator it(g);
      while (it.next()) out.push_back(it.current());
      break;
    }
    case Algorithm::brute:
      out = brute_cliques(g);
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

CliqueAnswer has_kclique(const KPartiteGraph& g, Algorithm alg,
                         std::optional<std::chrono::milliseconds> timeout, int prec_depth) {
  Deadline deadline;
  if (timeout) deadline = SteadyClock::now() + *timeout;

  auto conclude = [&g](auto& it) -> CliqueAnswer {
    if (it.next()) {
      if (!is_clique_of(g, it.current()))
        throw std::logic_error("clique search returned a witness that fails verification");
      return CliqueFound{it.current()};
    }
    if (it.timed_out()) return SearchTimeout{};
    return NoClique{};
  };

  switch (alg) {
    case Algorithm::kpkc: {
      KpkcIterator it(g, prec_depth, deadline);
      return conclude(it);
    }
    case Algorithm::findclique: {
      FindCliqueIterator it(g, deadline);
      return conclude(it);
    }
    case Algorithm::brute: {
      auto all = brute_cliques(g);
      if (all.empty()) return NoClique{};
      if (!is_clique_of(g, all.front()))
        throw std::logic_error("brute force returned a witness that fails verification");
      return CliqueFound{all.front()};
    }
  }
  return NoClique{};
}

}  // namespace tenpoints
