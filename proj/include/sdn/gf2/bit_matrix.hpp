#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sdn/error.hpp"
#include "sdn/gf2/bit_vector.hpp"

namespace sdn {

/// A k x n matrix over GF(2), stored as a list of row vectors.
///
/// A matrix may have zero rows (e.g. the null space of a full-column-rank
/// matrix); the column count is carried separately.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t num_cols) : num_cols_(num_cols) {
    if (num_cols == 0 || num_cols > BitVector::kMaxLength)
      throw LengthError("matrix width " + std::to_string(num_cols) + " outside supported range");
  }

  BitMatrix(std::size_t num_cols, std::vector<BitVector> rows) : BitMatrix(num_cols) {
    rows_.reserve(rows.size());
    for (auto& r : rows) append_row(std::move(r));
  }

  /// Builds a matrix from a nonempty row list; the width is taken from the rows.
  static BitMatrix from_rows(std::vector<BitVector> rows) {
    if (rows.empty()) throw DimensionError("from_rows needs at least one row");
    const std::size_t cols = rows.front().size();
    return BitMatrix(cols, std::move(rows));
  }

  static BitMatrix from_strings(const std::vector<std::string>& rows) {
    std::vector<BitVector> vs;
    vs.reserve(rows.size());
    for (const auto& r : rows) vs.push_back(BitVector::from_string(r));
    return from_rows(std::move(vs));
  }

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      BitVector r(n);
      r.set(i);
      m.append_row(std::move(r));
    }
    return m;
  }

  void append_row(BitVector row) {
    if (row.size() != num_cols_)
      throw DimensionError("row of length " + std::to_string(row.size()) + " does not match width " +
                           std::to_string(num_cols_));
    rows_.push_back(std::move(row));
  }

  std::size_t num_rows() const noexcept { return rows_.size(); }
  std::size_t num_cols() const noexcept { return num_cols_; }
  bool empty() const noexcept { return rows_.empty(); }

  const BitVector& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<BitVector>& rows() const noexcept { return rows_; }

  auto begin() const noexcept { return rows_.begin(); }
  auto end() const noexcept { return rows_.end(); }

  /// Vertical concatenation [top; bottom].
  static BitMatrix stack(const BitMatrix& top, const BitMatrix& bottom) {
    if (top.num_cols_ != bottom.num_cols_)
      throw DimensionError("stack: width mismatch (" + std::to_string(top.num_cols_) + " vs " +
                           std::to_string(bottom.num_cols_) + ")");
    BitMatrix out = top;
    out.rows_.insert(out.rows_.end(), bottom.rows_.begin(), bottom.rows_.end());
    return out;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t num_cols_;
  std::vector<BitVector> rows_;
};

struct RowEchelon {
  BitMatrix matrix;                 // nonzero rows only
  std::vector<std::size_t> pivots;  // 0-based pivot column of each row, increasing
};

/// Reduced row echelon form with leftmost pivots and zero rows dropped.
inline RowEchelon rref(const BitMatrix& m) {
  std::vector<BitVector> rows = m.rows();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.num_cols() && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && !rows[sel].get(col)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank, BitVector(m.num_cols()));
  return {BitMatrix(m.num_cols(), std::move(rows)), std::move(pivots)};
}

inline std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

/// Basis (as rows) of { v : <v, r> = 0 for every row r of m }.
inline BitMatrix nullspace(const BitMatrix& m) {
  const RowEchelon e = rref(m);
  const std::size_t n = m.num_cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  BitMatrix basis(n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    BitVector v(n);
    v.set(free);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      if (e.matrix.row(i).get(free)) v.set(e.pivots[i]);
    basis.append_row(std::move(v));
  }
  return basis;
}

/// dim(rowspace(a) + rowspace(b)).
inline std::size_t row_space_sum_rank(const BitMatrix& a, const BitMatrix& b) {
  return rank(BitMatrix::stack(a, b));
}

/// Reduces v against an echelon form; the result is zero iff v is in the row space.
inline BitVector reduce(const RowEchelon& e, BitVector v) {
  if (v.size() != e.matrix.num_cols())
    throw DimensionError("reduce: vector length " + std::to_string(v.size()) + " vs width " +
                         std::to_string(e.matrix.num_cols()));
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    if (v.get(e.pivots[i])) v ^= e.matrix.row(i);
  return v;
}

inline bool row_space_contains(const RowEchelon& e, const BitVector& v) { return reduce(e, v).is_zero(); }

inline bool row_space_contains(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.num_cols())
    throw DimensionError("row_space_contains: vector length " + std::to_string(v.size()) + " vs width " +
                         std::to_string(m.num_cols()));
  return row_space_contains(rref(m), v);
}

inline bool same_row_space(const BitMatrix& a, const BitMatrix& b) {
  if (a.num_cols() != b.num_cols()) return false;
  return rref(a).matrix == rref(b).matrix;
}

/// Coordinate j of the result is coordinate order[j] of v.
inline BitVector permute(const BitVector& v, const std::vector<std::size_t>& order) {
  if (order.size() != v.size())
    throw DimensionError("permute: order of size " + std::to_string(order.size()) + " for length " +
                         std::to_string(v.size()));
  BitVector out(v.size());
  for (std::size_t j = 0; j < order.size(); ++j)
    if (v.get(order.at(j))) out.set(j);
  return out;
}

/// Inverse of permute: coordinate order[j] of the result is coordinate j of v.
inline BitVector unpermute(const BitVector& v, const std::vector<std::size_t>& order) {
  if (order.size() != v.size())
    throw DimensionError("unpermute: order of size " + std::to_string(order.size()) + " for length " +
                         std::to_string(v.size()));
  BitVector out(v.size());
  for (std::size_t j = 0; j < order.size(); ++j)
    if (v.get(j)) out.set(order.at(j));
  return out;
}

inline BitMatrix permute_columns(const BitMatrix& m, const std::vector<std::size_t>& order) {
  BitMatrix out(m.num_cols());
  for (const auto& r : m) out.append_row(permute(r, order));
  return out;
}

}  // namespace sdn
