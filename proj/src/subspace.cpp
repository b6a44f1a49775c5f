#include "koszul/subspace.hpp"

#include <algorithm>

#include "koszul/error.hpp"

namespace koszul {

Subspace Subspace::span(std::size_t ambient_dim, std::vector<SparseVec> vectors) {
  Echelon ech(ambient_dim);
  for (auto& v : vectors) ech.insert(std::move(v));
  Subspace s(ambient_dim);
  s.rows_ = ech.rref();
  s.pivots_.reserve(s.rows_.size());
  for (auto const& r : s.rows_) s.pivots_.push_back(r.front().first);
  return s;
}

Subspace Subspace::span(Matrix const& rows) {
  std::vector<SparseVec> vs;
  vs.reserve(rows.rows());
  for (std::size_t r = 0; r < rows.rows(); ++r) vs.push_back(sparse_from_dense(rows.row(r)));
  return span(rows.cols(), std::move(vs));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.rows_.push_back(SparseVec{{i, Rational(1)}});
    s.pivots_.push_back(i);
  }
  return s;
}

Matrix Subspace::basis() const {
  Matrix m(rows_.size(), ambient_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (auto const& [c, x] : rows_[r]) m(r, c) = x;
  return m;
}

SparseVec Subspace::reduce(SparseVec v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    std::size_t col = v[pos].first;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col);
    if (it != pivots_.end() && *it == col) {
      Rational c = -v[pos].second;
      axpy(v, c, rows_[static_cast<std::size_t>(it - pivots_.begin())]);
    } else {
      ++pos;
    }
  }
  return v;
}

bool Subspace::contains(SparseVec const& v) const {
  if (!v.empty() && v.back().first >= ambient_) return false;
  return reduce(v).empty();
}

bool Subspace::contains(Subspace const& other) const {
  if (other.ambient_ != ambient_) fail(ErrorCode::DimensionMismatch, "subspace containment across ambients");
  for (auto const& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

Subspace kernel(Matrix const& m) { return orthogonal_complement(Subspace::span(m)); }

Subspace sum(Subspace const& a, Subspace const& b) {
  if (a.ambient_dim() != b.ambient_dim()) fail(ErrorCode::DimensionMismatch, "sum of subspaces");
  std::vector<SparseVec> rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return Subspace::span(a.ambient_dim(), std::move(rows));
}

Subspace intersect(Subspace const& a, Subspace const& b) {
  if (a.ambient_dim() != b.ambient_dim()) fail(ErrorCode::DimensionMismatch, "intersection of subspaces");
  if (a.is_zero() || b.is_zero()) return Subspace(a.ambient_dim());
  if (a.dim() == a.ambient_dim()) return b;
  if (b.dim() == b.ambient_dim()) return a;
  return orthogonal_complement(sum(orthogonal_complement(a), orthogonal_complement(b)));
}

Subspace orthogonal_complement(Subspace const& s) {
  std::size_t n = s.ambient_dim();
  std::vector<char> is_pivot(n, 0);
  for (std::size_t p : s.pivots()) is_pivot[p] = 1;
  // For every free column f, e_f - sum_k row_k[f] e_{pivot_k} annihilates the
  // row space of an RREF basis.
  std::vector<SparseVec> free_vecs(n);
  for (std::size_t k = 0; k < s.dim(); ++k) {
    std::size_t p = s.pivots()[k];
    for (auto const& [c, x] : s.rows()[k]) {
      if (c != p) free_vecs[c].emplace_back(p, -x);
    }
  }
  std::vector<SparseVec> out;
  out.reserve(n - s.dim());
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    SparseVec v = std::move(free_vecs[f]);
    v.emplace_back(f, Rational(1));
    std::sort(v.begin(), v.end(), [](auto const& x, auto const& y) { return x.first < y.first; });
    out.push_back(std::move(v));
  }
  return Subspace::span(n, std::move(out));
}

}  // namespace koszul
