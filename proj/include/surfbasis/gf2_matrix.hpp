#pragma once

#include <cstddef>
#include <vector>

#include "surfbasis/bitvec.hpp"

namespace surfbasis {

/// Dense row-major matrix over GF(2); each row is a packed BitVec.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}
  /// All rows must have equal length.
  explicit BitMatrix(std::vector<BitVec> rows);

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value) { rows_[r].assign(c, value); }

  const BitVec& row(std::size_t r) const { return rows_[r]; }
  BitVec& row(std::size_t r) { return rows_[r]; }

  BitMatrix transpose() const;

  bool operator==(const BitMatrix& other) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

/// GF(2) product. Throws InputError on a dimension mismatch.
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

/// Inverse over GF(2) by Gauss-Jordan elimination, pivoting on the first
/// row with the needed bit set. Throws InputError if `a` is not square and
/// InternalError if it is singular.
BitMatrix mat_inverse(const BitMatrix& a);

/// Rank over GF(2).
std::size_t rank(std::vector<BitVec> rows);

/// Incremental row-echelon basis: answers "is v in the span so far?" and
/// inserts independent vectors. Pivot is each stored row's lowest set bit.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t nbits) : nbits_(nbits), pivot_row_(nbits, kNone) {}

  std::size_t dimension() const { return rows_.size(); }
  std::size_t nbits() const { return nbits_; }

  /// Reduces `v` against the basis in place; returns true if the remainder
  /// is zero (v was in the span).
  bool reduce(BitVec& v) const;
  bool contains(BitVec v) const { return reduce(v); }
  /// Inserts `v` if it is independent; returns whether it was inserted.
  bool insert(BitVec v);

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t nbits_;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivot_row_;
};

}  // namespace surfbasis
