#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace oddhole {

using Vertex = int;

/// Fixed-universe bitset over vertex ids 0..n-1.
///
/// Doubles as the vertex mask type: a graph operation given a VertexSet treats
/// every vertex outside the set as deleted, without renumbering anything.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}
  VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
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
    return (words_[static_cast<std::size_t>(v) / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(Vertex v) { words_[static_cast<std::size_t>(v) / kWordBits] |= Word{1} << (v % kWordBits); }
  void erase(Vertex v) { words_[static_cast<std::size_t>(v) / kWordBits] &= ~(Word{1} << (v % kWordBits)); }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  int size() const {
    int total = 0;
    for (Word w : words_) total += std::popcount(w);
    return total;
  }
  bool empty() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  bool intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Smallest member >= from, or -1.
  Vertex next(Vertex from) const {
    if (from >= universe_) return -1;
    std::size_t wi = static_cast<std::size_t>(from) / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w != 0) return static_cast<Vertex>(wi * kWordBits + std::countr_zero(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }
  Vertex first() const { return universe_ == 0 ? -1 : next(0); }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w != 0) {
        fn(static_cast<Vertex>(wi * kWordBits + std::countr_zero(w)));
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

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(universe_);
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  static std::size_t word_count(int universe) {
    return (static_cast<std::size_t>(universe) + kWordBits - 1) / kWordBits;
  }
  void trim() {
    if (universe_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
  }

  int universe_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

using VertexMask = VertexSet;

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace oddhole
