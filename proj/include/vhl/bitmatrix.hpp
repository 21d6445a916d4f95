#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace vhl {

/// Packed bit vector, 64 bits per word, little-endian bit order within a
/// word (bit j lives in word j/64 at position j%64). Padding bits in the
/// last word stay zero.
class BitVector {
 public:
  BitVector() : size_(0) {}
  explicit BitVector(int n)
      : size_(check(n)), words_(static_cast<std::size_t>((n + 63) / 64), 0) {}

  [[nodiscard]] int size() const { return size_; }
  [[nodiscard]] std::size_t word_count() const { return words_.size(); }

  void set(int i) { words_[word(i)] |= bit(i); }
  void clear(int i) { words_[word(i)] &= ~bit(i); }
  [[nodiscard]] bool get(int i) const { return (words_[word(i)] & bit(i)) != 0; }
  void reset() { std::fill(words_.begin(), words_.end(), 0); }

  [[nodiscard]] const std::uint64_t* words() const { return words_.data(); }
  [[nodiscard]] std::uint64_t* words() { return words_.data(); }

 private:
  static int check(int n) {
    if (n < 0) throw std::invalid_argument("bit vector size must be non-negative");
    return n;
  }
  [[nodiscard]] std::size_t word(int i) const {
    if (i < 0 || i >= size_) throw std::out_of_range("bit index out of range");
    return static_cast<std::size_t>(i) >> 6;
  }
  static std::uint64_t bit(int i) { return std::uint64_t{1} << (i & 63); }

  int size_;
  std::vector<std::uint64_t> words_;
};

/// Packed Boolean matrix with one BitVector-style row per matrix row.
/// Rows are contiguous, words_per_row() words each.
class BitMatrix {
 public:
  BitMatrix() : rows_(0), cols_(0), wpr_(0) {}
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64) {
    if (rows < 0 || cols < 0) {
      throw std::invalid_argument("bit matrix dimensions must be non-negative");
    }
    words_.assign(static_cast<std::size_t>(rows) * wpr_, 0);
  }

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }
  [[nodiscard]] std::size_t words_per_row() const { return wpr_; }

  void set(int r, int c) { words_[word(r, c)] |= bit(c); }
  [[nodiscard]] bool get(int r, int c) const {
    return (words_[word(r, c)] & bit(c)) != 0;
  }

  [[nodiscard]] const std::uint64_t* row(int r) const {
    return words_.data() + static_cast<std::size_t>(r) * wpr_;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.words_ == b.words_;
  }

 private:
  [[nodiscard]] std::size_t word(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
      throw std::out_of_range("bit matrix index out of range");
    }
    return static_cast<std::size_t>(r) * wpr_ + (static_cast<std::size_t>(c) >> 6);
  }
  static std::uint64_t bit(int c) { return std::uint64_t{1} << (c & 63); }

  int rows_;
  int cols_;
  std::size_t wpr_;
  std::vector<std::uint64_t> words_;
};

}  // namespace vhl
