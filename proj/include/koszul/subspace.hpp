#pragma once

#include <cstddef>
#include <vector>

#include "koszul/matrix.hpp"
#include "koszul/sparse.hpp"

namespace koszul {

/// Linear subspace of k^ambient, held in canonical reduced row echelon form
/// (leftmost pivots) so that equal subspaces compare equal structurally.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, std::vector<SparseVec> vectors);
  static Subspace span(Matrix const& rows);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }

  /// Canonical basis rows, sorted by pivot; each pivot entry is 1.
  std::vector<SparseVec> const& rows() const { return rows_; }
  std::vector<std::size_t> const& pivots() const { return pivots_; }

  /// Dense copy of the basis (dim x ambient).
  Matrix basis() const;

  /// Remainder of v after elimination against the basis; zero iff v is in
  /// the subspace.
  SparseVec reduce(SparseVec v) const;
  bool contains(SparseVec const& v) const;
  bool contains(Subspace const& other) const;

  friend bool operator==(Subspace const&, Subspace const&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<SparseVec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Right null space.
Subspace kernel(Matrix const& m);

Subspace sum(Subspace const& a, Subspace const& b);
Subspace intersect(Subspace const& a, Subspace const& b);

/// Annihilator under the standard pairing of a basis with its dual basis.
Subspace orthogonal_complement(Subspace const& s);

}  // namespace koszul
