#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tenpoints {

using VertexId = std::uint32_t;

/// Fixed-capacity set of vertex ids in [0, capacity), one bit per id.
///
/// Bits past `capacity` in the last word are always zero, so word-wise
/// popcounts never need a tail mask.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t capacity, bool filled = false)
      : capacity_(capacity), words_(word_count(capacity), 0) {
    if (filled) fill();
  }

  static constexpr std::size_t word_count(std::size_t capacity) {
    return (capacity + kWordBits - 1) / kWordBits;
  }

  std::size_t capacity() const { return capacity_; }
  std::span<const Word> words() const { return words_; }

  bool contains(std::size_t v) const {
    assert(v < capacity_);
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(std::size_t v) {
    assert(v < capacity_);
    words_[v / kWordBits] |= Word{1} << (v % kWordBits);
  }
  void erase(std::size_t v) {
    assert(v < capacity_);
    words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }

  void clear() { std::fill(words_.begin(), words_.end(), Word{0}); }
  void fill() {
    std::fill(words_.begin(), words_.end(), ~Word{0});
    trim();
  }

  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Number of members in [lo, hi).
  std::size_t count(std::size_t lo, std::size_t hi) const {
    return masked_sum(lo, hi, [this](std::size_t i) { return words_[i]; });
  }

  /// |this ∩ other|; both sets must share a capacity.
  std::size_t intersection_count(const VertexSet& other) const {
    assert(other.capacity_ == capacity_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  /// |this ∩ other ∩ [lo, hi)|.
  std::size_t intersection_count(const VertexSet& other, std::size_t lo, std::size_t hi) const {
    assert(other.capacity_ == capacity_);
    return masked_sum(lo, hi, [&](std::size_t i) { return words_[i] & other.words_[i]; });
  }

  /// Whether this ∩ other ∩ [lo, hi) is non-empty.
  bool intersects(const VertexSet& other, std::size_t lo, std::size_t hi) const {
    assert(other.capacity_ == capacity_);
    if (lo >= hi) return false;
    const std::size_t first = lo / kWordBits;
    const std::size_t last = (hi - 1) / kWordBits;
    for (std::size_t i = first; i <= last; ++i) {
      Word w = words_[i] & other.words_[i] & range_mask(i, lo, hi);
      if (w) return true;
    }
    return false;
  }

  /// this = a ∩ b.
  void assign_intersection(const VertexSet& a, const VertexSet& b) {
    assert(a.capacity_ == capacity_ && b.capacity_ == capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = a.words_[i] & b.words_[i];
  }

  VertexSet& operator&=(const VertexSet& other) {
    assert(other.capacity_ == capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  /// Smallest member ≥ from, or capacity() if there is none.
  std::size_t next(std::size_t from) const {
    if (from >= capacity_) return capacity_;
    std::size_t i = from / kWordBits;
    Word w = words_[i] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++i == words_.size()) return capacity_;
      w = words_[i];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w) {
        f(static_cast<VertexId>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    out.reserve(count());
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  static Word range_mask(std::size_t word, std::size_t lo, std::size_t hi) {
    const std::size_t base = word * kWordBits;
    Word m = ~Word{0};
    if (lo > base) m &= ~Word{0} << (lo - base);
    if (hi < base + kWordBits) m &= (Word{1} << (hi - base)) - 1;
    return m;
  }

  template <class Get>
  std::size_t masked_sum(std::size_t lo, std::size_t hi, Get get) const {
    if (lo >= hi) return 0;
    const std::size_t first = lo / kWordBits;
    const std::size_t last = (hi - 1) / kWordBits;
    std::size_t c = 0;
    for (std::size_t i = first; i <= last; ++i)
      c += static_cast<std::size_t>(std::popcount(get(i) & range_mask(i, lo, hi)));
    return c;
  }

  void trim() {
    if (const std::size_t tail = capacity_ % kWordBits; tail != 0 && !words_.empty())
      words_.back() &= (Word{1} << tail) - 1;
  }

  std::size_t capacity_ = 0;
  std::vector<Word> words_;
};

}  // namespace tenpoints
