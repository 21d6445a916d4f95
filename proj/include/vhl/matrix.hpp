#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "vhl/ext_cost.hpp"

namespace vhl {

/// Dense row-major matrix of cost values. Storage is raw doubles so that
/// inner loops and SIMD kernels can work on contiguous rows; the checked
/// ExtCost interface guards every write that goes through set().
///
/// Deserialized or hand-filled raw data may violate the cost invariants
/// (negative or NaN entries); validate-style checks live with the types
/// that own the matrix.
class CostMatrix {
 public:
  CostMatrix() : rows_(0), cols_(0) {}
  CostMatrix(int rows, int cols, ExtCost fill = ExtCost::inf())
      : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) {
      throw std::invalid_argument("matrix dimensions must be non-negative");
    }
    data_.assign(static_cast<std::size_t>(rows) * cols, fill.raw());
  }

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }

  [[nodiscard]] ExtCost at(int r, int c) const {
    check_index(r, c);
    return ExtCost::from_raw(data_[idx(r, c)]);
  }
  void set(int r, int c, ExtCost v) {
    check_index(r, c);
    data_[idx(r, c)] = v.raw();
  }

  [[nodiscard]] double raw_at(int r, int c) const {
    check_index(r, c);
    return data_[idx(r, c)];
  }

  [[nodiscard]] const double* row(int r) const { return data_.data() + idx(r, 0); }
  [[nodiscard]] double* row(int r) { return data_.data() + idx(r, 0); }
  [[nodiscard]] const double* data() const { return data_.data(); }
  [[nodiscard]] double* data() { return data_.data(); }

  [[nodiscard]] CostMatrix transposed() const {
    CostMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c) t.data_[t.idx(c, r)] = data_[idx(r, c)];
    }
    return t;
  }

  friend bool operator==(const CostMatrix& a, const CostMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
      throw std::out_of_range("matrix index out of range");
    }
  }
  [[nodiscard]] std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  int rows_;
  int cols_;
  std::vector<double> data_;
};

/// Dense cost vector with the same raw-double storage convention.
class CostVector {
 public:
  CostVector() = default;
  explicit CostVector(int n, ExtCost fill = ExtCost::inf())
      : data_(check_size(n), fill.raw()) {}

  [[nodiscard]] int size() const { return static_cast<int>(data_.size()); }

  [[nodiscard]] ExtCost at(int i) const { return ExtCost::from_raw(data_.at(i)); }
  void set(int i, ExtCost v) { data_.at(i) = v.raw(); }

  [[nodiscard]] double raw_at(int i) const { return data_.at(i); }
  [[nodiscard]] const double* data() const { return data_.data(); }
  [[nodiscard]] double* data() { return data_.data(); }

  friend bool operator==(const CostVector& a, const CostVector& b) {
    return a.data_ == b.data_;
  }

 private:
  static std::size_t check_size(int n) {
    if (n < 0) throw std::invalid_argument("vector size must be non-negative");
    return static_cast<std::size_t>(n);
  }
  std::vector<double> data_;
};

}  // namespace vhl
