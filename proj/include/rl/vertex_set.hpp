#ifndef RL_VERTEX_SET_HPP
#define RL_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "rl/errors.hpp"

namespace rl {

// Set of vertices out of {1,...,n}, backed by a word array.  Vertex v is
// stored as bit v-1.  Immutable sharing across threads is safe; mutation is
// only done while building a set.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

  static VertexSet full(int n) {
    VertexSet s(n);
    for (int v = 1; v <= n; ++v) s.add(v);
    return s;
  }

  static VertexSet of(int n, std::initializer_list<int> vs) {
    VertexSet s(n);
    for (int v : vs) s.add(v);
    return s;
  }

  static VertexSet of(int n, const std::vector<int>& vs) {
    VertexSet s(n);
    for (int v : vs) s.add(v);
    return s;
  }

  int universe() const { return n_; }

  bool contains(int v) const {
    if (v < 1 || v > n_) return false;
    return (words_[(v - 1) >> 6] >> ((v - 1) & 63)) & 1;
  }

  void add(int v) {
    check(v);
    words_[(v - 1) >> 6] |= std::uint64_t{1} << ((v - 1) & 63);
  }

  void remove(int v) {
    check(v);
    words_[(v - 1) >> 6] &= ~(std::uint64_t{1} << ((v - 1) & 63));
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  // Smallest member, or 0 when empty.
  int min() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]) + 1);
    return 0;
  }

  bool subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& o) const = default;
  auto operator<=>(const VertexSet& o) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v : *this) out.push_back(v);
    return out;
  }

  std::size_t hash() const {
    std::size_t h = std::size_t(n_) * 0x9e3779b97f4a7c15ull;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

  // Forward iteration over members in increasing order.
  class iterator {
   public:
    iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = s_->next(v_);
      return *this;
    }
    bool operator!=(const iterator& o) const { return v_ != o.v_; }

   private:
    const VertexSet* s_;
    int v_;
  };

  iterator begin() const { return iterator(this, min()); }
  iterator end() const { return iterator(this, 0); }

  // Smallest member greater than v, or 0.  Member x > v has bit index
  // x-1 >= v.
  int next(int v) const {
    if (v < 0 || v >= n_) return 0;
    std::size_t i = std::size_t(v) >> 6;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (v & 63));
    if (w) return int(i * 64 + std::countr_zero(w) + 1);
    for (std::size_t j = i + 1; j < words_.size(); ++j)
      if (words_[j]) return int(j * 64 + std::countr_zero(words_[j]) + 1);
    return 0;
  }

 private:
  void check(int v) const {
    if (v < 1 || v > n_) throw invalid_input("vertex out of range");
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace rl

#endif
