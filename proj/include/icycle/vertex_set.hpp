#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace icycle {

using Vertex = int;

/// Subset of the dense vertex range 0..universe-1, stored as a bitset.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((static_cast<std::size_t>(universe) + kWordBits - 1) / kWordBits, 0) {}

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  /// Vertices strictly greater than `v`.
  static VertexSet above(int universe, Vertex v) {
    VertexSet s = full(universe);
    for (Vertex x = 0; x <= v && x < universe; ++x) s.erase(x);
    return s;
  }

  template <class Range>
  static VertexSet of(int universe, const Range& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(Vertex v) const {
    return v >= 0 && v < universe_ && ((words_[word(v)] >> bit(v)) & 1U);
  }

  void insert(Vertex v) {
    check(v);
    words_[word(v)] |= Word{1} << bit(v);
  }

  void erase(Vertex v) {
    check(v);
    words_[word(v)] &= ~(Word{1} << bit(v));
  }

  int size() const {
    int total = 0;
    for (Word w : words_) total += std::popcount(w);
    return total;
  }

  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  /// Smallest member, or -1 when empty.
  Vertex first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
    }
    return -1;
  }

  bool intersects(const VertexSet& other) const {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (words_[i] & other.words_[i]) return true;
    }
    return false;
  }

  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const Word o = i < other.words_.size() ? other.words_[i] : 0;
      if (words_[i] & ~o) return false;
    }
    return true;
  }

  VertexSet& operator&=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
    return *this;
  }

  VertexSet& operator|=(const VertexSet& other) {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  /// Set difference.
  VertexSet& operator-=(const VertexSet& other) {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w != 0) {
        f(static_cast<Vertex>(i * kWordBits + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  std::span<const Word> words() const { return words_; }

 private:
  static std::size_t word(Vertex v) { return static_cast<std::size_t>(v) / kWordBits; }
  static unsigned bit(Vertex v) { return static_cast<unsigned>(v) % kWordBits; }

  void check(Vertex v) const {
    if (v < 0 || v >= universe_) throw std::out_of_range("vertex outside the set universe");
  }

  void same_universe(const VertexSet& other) const {
    if (other.universe_ != universe_) throw std::invalid_argument("vertex sets over different universes");
  }

  void trim() {
    const int tail = universe_ % kWordBits;
    if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
  }

  int universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace icycle
