#include "surfbasis/gf2_matrix.hpp"

#include <string>
#include <utility>

#include "surfbasis/errors.hpp"

namespace surfbasis {

BitMatrix::BitMatrix(std::vector<BitVec> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : rows_.front().size();
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw InputError("BitMatrix: rows have different lengths");
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].set(i);
  return m;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c : rows_[r].ones()) t.rows_[c].set(r);
  }
  return t;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InputError("mat_mul: inner dimensions " + std::to_string(a.cols()) + " and " +
                     std::to_string(b.rows()) + " disagree");
  }
  // Row i of the product is the XOR of the rows of b selected by row i of a.
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BitVec& dst = out.row(i);
    const BitVec& sel = a.row(i);
    for (std::size_t k = sel.find_first(); k < sel.size(); k = sel.find_next(k + 1)) {
      dst ^= b.row(k);
    }
  }
  return out;
}

BitMatrix mat_inverse(const BitMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) {
    throw InputError("mat_inverse: matrix is " + std::to_string(n) + "x" + std::to_string(a.cols()));
  }
  BitMatrix work = a;
  BitMatrix inv = BitMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !work.get(pivot, col)) ++pivot;
    if (pivot == n) throw InternalError("mat_inverse: singular matrix");
    if (pivot != col) {
      std::swap(work.row(pivot), work.row(col));
      std::swap(inv.row(pivot), inv.row(col));
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && work.get(r, col)) {
        work.row(r) ^= work.row(col);
        inv.row(r) ^= inv.row(col);
      }
    }
  }
  return inv;
}

std::size_t rank(std::vector<BitVec> rows) {
  if (rows.empty()) return 0;
  EchelonBasis basis(rows.front().size());
  for (auto& r : rows) basis.insert(std::move(r));
  return basis.dimension();
}

bool EchelonBasis::reduce(BitVec& v) const {
  if (v.size() != nbits_) throw InputError("EchelonBasis: length mismatch");
  for (std::size_t i = v.find_first(); i < nbits_; i = v.find_next(i + 1)) {
    if (pivot_row_[i] != kNone) v ^= rows_[pivot_row_[i]];
  }
  return v.none();
}

bool EchelonBasis::insert(BitVec v) {
  if (reduce(v)) return false;
  // XOR with a row only touches bits at or above its pivot, so the scan in
  // reduce() never has to revisit a lower bit.
  std::size_t p = v.find_first();
  pivot_row_[p] = rows_.size();
  rows_.push_back(std::move(v));
  return true;
}

}  // namespace surfbasis
