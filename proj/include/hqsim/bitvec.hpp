#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace hqsim {

/// Fixed-length bit vector packed into 64-bit words, indexed LSB-first.
class BitVector {
public:
  BitVector() = default;
  explicit BitVector(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }
  std::size_t word_count() const { return words_.size(); }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v) {
    uint64_t mask = uint64_t(1) << (i & 63);
    if (v) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  /// Index of the lowest set bit, or -1 when empty.
  int first_set() const;

  std::size_t popcount() const;

  /// XOR-accumulate another vector of the same length.
  void operator^=(const BitVector& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
  }

  bool operator==(const BitVector& o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }

  /// Parity of the AND of two vectors (dot product over GF(2)).
  static bool dot(const BitVector& a, const BitVector& b);

  uint64_t word(std::size_t k) const { return words_[k]; }
  uint64_t& word(std::size_t k) { return words_[k]; }

  const uint64_t* data() const { return words_.data(); }
  uint64_t* data() { return words_.data(); }

private:
  std::size_t nbits_ = 0;
  std::vector<uint64_t> words_;
};

/// Dense bit matrix with row-major BitVector rows.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, BitVector(cols)) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  BitVector& row(std::size_t r) { return rows_[r]; }
  const BitVector& row(std::size_t r) const { return rows_[r]; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

  void append_row(const BitVector& v) { rows_.push_back(v); }

private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Rank over GF(2); the input is not modified.
std::size_t gf2_rank(const BitMatrix& m);

/// Basis of the left kernel {c : c * M = 0}, returned as a k x rows matrix.
BitMatrix gf2_left_kernel(const BitMatrix& m);

/// Solves c * M = target. Returns true and writes the combination into
/// `coeffs` (length rows) when the target lies in the row space.
bool gf2_solve_row(const BitMatrix& m, const BitVector& target,
                   BitVector& coeffs);

}  // namespace hqsim
