#include "hqsim/bitvec.hpp"

#include <bit>

namespace hqsim {

std::size_t BitVector::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

bool BitVector::dot(const BitVector& a, const BitVector& b) {
  uint64_t acc = 0;
  for (std::size_t k = 0; k < a.words_.size(); ++k)
    acc ^= a.words_[k] & b.words_[k];
  return std::popcount(acc) & 1u;
}

int BitVector::first_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k])
      return static_cast<int>(64 * k +
                              static_cast<std::size_t>(std::countr_zero(words_[k])));
  }
  return -1;
}

namespace {

// Row echelon over a scratch copy; pivots[j] = row index with leading bit j.
struct Echelon {
  std::vector<BitVector> rows;
  std::vector<int> pivot_col;  // per stored row

  // Reduces v against the echelon rows in place; returns true if v -> 0.
  bool reduce(BitVector& v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (v.get(static_cast<std::size_t>(pivot_col[r]))) v ^= rows[r];
    }
    return !v.any();
  }

  // Inserts v if independent; returns its pivot column or -1.
  int insert(BitVector v) {
    reduce(v);
    const int c = v.first_set();
    if (c >= 0) {
      rows.push_back(std::move(v));
      pivot_col.push_back(c);
    }
    return c;
  }
};

}  // namespace

std::size_t gf2_rank(const BitMatrix& m) {
  Echelon e;
  std::size_t rank = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (e.insert(m.row(r)) >= 0) ++rank;
  }
  return rank;
}

BitMatrix gf2_left_kernel(const BitMatrix& m) {
  const std::size_t n = m.rows();
  // Augment each row with its coefficient vector and echelonize; rows that
  // vanish expose kernel combinations.
  std::vector<BitVector> rows;
  std::vector<BitVector> coeffs;
  std::vector<int> pivot_col;
  BitMatrix kernel(0, n);
  for (std::size_t r = 0; r < n; ++r) {
    BitVector v = m.row(r);
    BitVector c(n);
    c.set(r, true);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (v.get(static_cast<std::size_t>(pivot_col[k]))) {
        v ^= rows[k];
        c ^= coeffs[k];
      }
    }
    const int pc = v.first_set();
    if (pc < 0) {
      kernel.append_row(c);
    } else {
      rows.push_back(std::move(v));
      coeffs.push_back(std::move(c));
      pivot_col.push_back(pc);
    }
  }
  return kernel;
}

bool gf2_solve_row(const BitMatrix& m, const BitVector& target,
                   BitVector& coeffs) {
  const std::size_t n = m.rows();
  std::vector<BitVector> rows;
  std::vector<BitVector> combos;
  std::vector<int> pivot_col;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    BitVector v = m.row(r);
    BitVector c(n);
    c.set(r, true);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (v.get(static_cast<std::size_t>(pivot_col[k]))) {
        v ^= rows[k];
        c ^= combos[k];
      }
    }
    const int pc = v.first_set();
    if (pc >= 0) {
      rows.push_back(std::move(v));
      combos.push_back(std::move(c));
      pivot_col.push_back(pc);
    }
  }
  BitVector v = target;
  coeffs = BitVector(n);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (v.get(static_cast<std::size_t>(pivot_col[k]))) {
      v ^= rows[k];
      coeffs ^= combos[k];
    }
  }
  return !v.any();
}

}  // namespace hqsim
