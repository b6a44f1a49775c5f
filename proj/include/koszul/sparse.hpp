#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "koszul/rational.hpp"

namespace koszul {

/// Sparse row: (column, nonzero value) pairs, strictly increasing columns.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

/// y += a * x
void axpy(SparseVec& y, Rational const& a, SparseVec const& x);
void scale(SparseVec& v, Rational const& a);
Rational coefficient(SparseVec const& v, std::size_t col);
SparseVec sparse_from_dense(std::vector<Rational> const& dense);
std::vector<Rational> dense_from_sparse(SparseVec const& v, std::size_t size);

/// Incremental row echelon form over sparse rows.
///
/// The leading entry of a row is its smallest column. `insert` performs top
/// reduction only, which is enough to track rank and the pivot set; `rref`
/// back-substitutes to the unique reduced row echelon form.
class Echelon {
 public:
  explicit Echelon(std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true if `v` was independent of the rows inserted so far.
  bool insert(SparseVec v);

  /// Fully reduces `v` against the current rows. The result has no entry in
  /// any pivot column; it is zero iff `v` lies in the row space.
  SparseVec reduce(SparseVec v) const;

  bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }

  /// Pivot columns in increasing order.
  std::vector<std::size_t> pivots() const;

  /// Reduced rows sorted by pivot column.
  std::vector<SparseVec> rref() const;

  /// Rows as inserted: top-reduced, leading coefficient 1.
  std::vector<SparseVec> const& rows() const { return rows_; }

 private:
  std::size_t cols_;
  std::vector<SparseVec> rows_;
  std::vector<std::int32_t> pivot_row_;
};

}  // namespace koszul

namespace koszul {

/// Coordinates of vectors in the span of a fixed, linearly independent list.
class SpanSolver {
 public:
  /// Throws DegenerateRelations if the vectors are linearly dependent.
  SpanSolver(std::size_t ambient_dim, std::vector<SparseVec> const& vectors);

  std::size_t size() const { return count_; }

  /// c with target = sum_i c_i vectors[i], or nullopt if target is outside
  /// the span.
  std::optional<std::vector<Rational>> solve(SparseVec target) const;

 private:
  std::size_t count_;
  std::vector<std::vector<Rational>> combos_;  // indexed by echelon row order
  std::vector<std::int32_t> row_of_pivot_;
  std::vector<SparseVec> rows_;
};

}  // namespace koszul
