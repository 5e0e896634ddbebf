#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace groupcx {

// Bit-indexed subset of a fixed universe 0..n-1. Element sets over a group
// are always of this form (identity is index 0 group-wide).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet single(int universe, int index) {
    ElementSet s(universe);
    s.set(index);
    return s;
  }
  static ElementSet from_indices(int universe, const std::vector<int>& idx) {
    ElementSet s(universe);
    for (int i : idx) s.set(i);
    return s;
  }
  static ElementSet full(int universe) {
    ElementSet s(universe);
    for (int i = 0; i < universe; ++i) s.set(i);
    return s;
  }

  int universe() const { return n_; }
  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  void set(int i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  // true iff other is a subset of *this
  bool contains_all(const ElementSet& other) const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (other.words_[k] & ~words_[k]) return false;
    return true;
  }

  bool intersects(const ElementSet& other) const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (other.words_[k] & words_[k]) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t k = 0; k < words_.size(); ++k) {
      uint64_t w = words_[k];
      while (w) {
        int b = __builtin_ctzll(w);
        f(int(k * 64 + b));
        w &= w - 1;
      }
    }
  }

  size_t hash() const {
    size_t h = std::hash<int>()(n_);
    for (uint64_t w : words_)
      h ^= std::hash<uint64_t>()(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> words_;
};

struct ElementSetHash {
  size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace groupcx
