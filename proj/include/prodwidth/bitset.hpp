#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace prodwidth {

/// Fixed-universe dynamic bitset used for neighbour rows and vertex sets.
/// The universe size is set at construction; all binary operations require
/// both operands to share the same universe.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; v++) s.set(v);
    return s;
  }

  int universe() const { return n_; }

  bool test(int v) const {
    assert(v >= 0 && v < n_);
    return (w_[v >> 6] >> (v & 63)) & 1u;
  }
  void set(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] |= uint64_t(1) << (v & 63);
  }
  void reset(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] &= ~(uint64_t(1) << (v & 63));
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); i++)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); i++)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); i++) w_[i] |= o.w_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); i++) w_[i] &= o.w_[i];
    return *this;
  }
  VertexSet& subtract(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); i++) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet minus(VertexSet a, const VertexSet& b) { return a.subtract(b); }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }
  bool operator<(const VertexSet& o) const {  // lexicographic, for ordered containers
    if (n_ != o.n_) return n_ < o.n_;
    return w_ < o.w_;
  }

  /// First set bit, or -1 when empty.
  int first() const {
    for (size_t i = 0; i < w_.size(); i++)
      if (w_[i]) return int(i * 64) + std::countr_zero(w_[i]);
    return -1;
  }
  /// Next set bit strictly after v, or -1.
  int next(int v) const {
    v++;
    if (v >= n_) return -1;
    size_t i = size_t(v) >> 6;
    uint64_t w = w_[i] & (~uint64_t(0) << (v & 63));
    while (true) {
      if (w) return int(i * 64) + std::countr_zero(w);
      if (++i >= w_.size()) return -1;
      w = w_[i];
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace prodwidth
