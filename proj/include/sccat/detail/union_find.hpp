#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace sccat::detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) { resize(n); }

  void resize(std::size_t n) {
    const std::size_t old = parent_.size();
    parent_.resize(n);
    for (std::size_t i = old; i < n; ++i) parent_[i] = i;
  }

  std::size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }

  std::size_t size() const { return parent_.size(); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns true when two distinct classes were merged.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace sccat::detail
