#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sunspot {

// Subset of the vertices 0..n-1 of a fixed universe, packed one bit per
// vertex. A single word covers graphs up to 64 vertices; larger universes
// spill into more words transparently.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.set(v);
    return s;
  }
  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.set(v);
    return s;
  }

  int universe() const { return n_; }

  bool test(int v) const {
    assert(v >= 0 && v < n_);
    return (w_[v >> 6] >> (v & 63)) & 1;
  }
  void set(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void reset(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  bool empty() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }

  bool is_subset_of(const VertexSet& other) const {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~other.w_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& other) const {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & other.w_[i]) return true;
    return false;
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // Set difference: removes the members of o.
  VertexSet& operator-=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }

  // Least member, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }
  // Least member strictly greater than v, or -1.
  int next(int v) const {
    if (v + 1 >= n_) return -1;
    std::size_t i = std::size_t(v + 1) >> 6;
    std::uint64_t word = w_[i] & (~std::uint64_t{0} << ((v + 1) & 63));
    while (true) {
      if (word) return int(i * 64 + std::countr_zero(word));
      if (++i >= w_.size()) return -1;
      word = w_[i];
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (int v = first(); v >= 0; v = next(v)) f(v);
  }

private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

} // namespace sunspot
