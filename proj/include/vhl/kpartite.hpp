#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vhl {

/// Complete k-partite graph with positive integer edge weights. Every pair
/// of vertices from different parts carries a weight >= 1; parts have no
/// internal edges.
class KPartiteGraph {
 public:
  explicit KPartiteGraph(std::vector<int> part_sizes)
      : sizes_(std::move(part_sizes)) {
    if (sizes_.size() < 2) {
      throw std::invalid_argument("graph needs at least two parts");
    }
    for (int s : sizes_) {
      if (s < 1) throw std::invalid_argument("every part needs at least one vertex");
    }
    int k = parts();
    pair_offset_.assign(static_cast<std::size_t>(k) * k, -1);
    std::size_t total = 0;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        pair_offset_[static_cast<std::size_t>(i) * k + j] = static_cast<std::int64_t>(total);
        total += static_cast<std::size_t>(sizes_[i]) * sizes_[j];
      }
    }
    weights_.assign(total, 1);
  }

  [[nodiscard]] int parts() const { return static_cast<int>(sizes_.size()); }
  [[nodiscard]] int part_size(int i) const { return sizes_.at(i); }
  [[nodiscard]] const std::vector<int>& part_sizes() const { return sizes_; }

  [[nodiscard]] std::int64_t weight(int pi, int vi, int pj, int vj) const {
    if (pi > pj) {
      std::swap(pi, pj);
      std::swap(vi, vj);
    }
    return weights_[slot(pi, vi, pj, vj)];
  }

  void set_weight(int pi, int vi, int pj, int vj, std::int64_t w) {
    if (w < 1) throw std::invalid_argument("edge weights must be at least 1");
    if (pi > pj) {
      std::swap(pi, pj);
      std::swap(vi, vj);
    }
    weights_[slot(pi, vi, pj, vj)] = w;
  }

  /// Largest edge weight in the graph.
  [[nodiscard]] std::int64_t max_weight() const {
    std::int64_t best = 1;
    for (std::int64_t w : weights_) {
      if (w > best) best = w;
    }
    return best;
  }

 private:
  [[nodiscard]] std::size_t slot(int pi, int vi, int pj, int vj) const {
    if (pi < 0 || pj >= parts() || pi == pj) {
      throw std::out_of_range("part index out of range");
    }
    if (vi < 0 || vi >= sizes_[pi] || vj < 0 || vj >= sizes_[pj]) {
      throw std::out_of_range("vertex index out of range");
    }
    std::int64_t base = pair_offset_[static_cast<std::size_t>(pi) * parts() + pj];
    return static_cast<std::size_t>(base) +
           static_cast<std::size_t>(vi) * sizes_[pj] + vj;
  }

  std::vector<int> sizes_;
  std::vector<std::int64_t> pair_offset_;
  std::vector<std::int64_t> weights_;
};

/// Complete graph on n vertices with symmetric positive integer weights.
class CompleteGraph {
 public:
  explicit CompleteGraph(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("complete graph needs at least two vertices");
    w_.assign(static_cast<std::size_t>(n) * n, 1);
  }

  [[nodiscard]] int size() const { return n_; }

  [[nodiscard]] std::int64_t weight(int a, int b) const {
    check(a, b);
    return w_[static_cast<std::size_t>(a) * n_ + b];
  }

  void set_weight(int a, int b, std::int64_t w) {
    check(a, b);
    if (w < 1) throw std::invalid_argument("edge weights must be at least 1");
    w_[static_cast<std::size_t>(a) * n_ + b] = w;
    w_[static_cast<std::size_t>(b) * n_ + a] = w;
  }

  [[nodiscard]] std::int64_t max_weight() const {
    std::int64_t best = 1;
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) {
        std::int64_t w = weight(a, b);
        if (w > best) best = w;
      }
    }
    return best;
  }

 private:
  void check(int a, int b) const {
    if (a < 0 || a >= n_ || b < 0 || b >= n_ || a == b) {
      throw std::out_of_range("vertex pair out of range");
    }
  }
  int n_;
  std::vector<std::int64_t> w_;
};

}  // namespace vhl
