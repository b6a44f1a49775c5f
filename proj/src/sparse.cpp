#include "koszul/sparse.hpp"

#include <algorithm>

#include "koszul/error.hpp"

namespace koszul {

void axpy(SparseVec& y, Rational const& a, SparseVec const& x) {
  if (a.is_zero() || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy));
      ++iy;
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else {
      Rational v = iy->second + a * ix->second;
      if (!v.is_zero()) out.emplace_back(iy->first, std::move(v));
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

void scale(SparseVec& v, Rational const& a) {
  if (a.is_zero()) {
    v.clear();
    return;
  }
  for (auto& e : v) e.second *= a;
}

Rational coefficient(SparseVec const& v, std::size_t col) {
  auto it = std::lower_bound(v.begin(), v.end(), col,
                             [](auto const& e, std::size_t c) { return e.first < c; });
  if (it != v.end() && it->first == col) return it->second;
  return Rational{};
}

SparseVec sparse_from_dense(std::vector<Rational> const& dense) {
  SparseVec out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!dense[i].is_zero()) out.emplace_back(i, dense[i]);
  }
  return out;
}

std::vector<Rational> dense_from_sparse(SparseVec const& v, std::size_t size) {
  std::vector<Rational> out(size);
  for (auto const& [c, x] : v) {
    if (c >= size) fail(ErrorCode::DimensionMismatch, "sparse entry outside vector length");
    out[c] = x;
  }
  return out;
}

Echelon::Echelon(std::size_t cols) : cols_(cols), pivot_row_(cols, -1) {}

bool Echelon::insert(SparseVec v) {
  while (!v.empty()) {
    std::size_t lead = v.front().first;
    if (lead >= cols_) fail(ErrorCode::DimensionMismatch, "row entry outside ambient space");
    std::int32_t r = pivot_row_[lead];
    if (r < 0) {
      scale(v, v.front().second.inverse());
      pivot_row_[lead] = static_cast<std::int32_t>(rows_.size());
      rows_.push_back(std::move(v));
      return true;
    }
    Rational c = -v.front().second;
    axpy(v, c, rows_[static_cast<std::size_t>(r)]);
  }
  return false;
}

SparseVec Echelon::reduce(SparseVec v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    std::size_t col = v[pos].first;
    if (col < cols_ && pivot_row_[col] >= 0) {
      Rational c = -v[pos].second;
      axpy(v, c, rows_[static_cast<std::size_t>(pivot_row_[col])]);
    } else {
      ++pos;
    }
  }
  return v;
}

std::vector<std::size_t> Echelon::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (auto const& r : rows_) out.push_back(r.front().first);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SparseVec> Echelon::rref() const {
  std::vector<std::size_t> piv = pivots();
  std::vector<SparseVec> reduced(rows_.size());
  std::vector<std::int32_t> slot(cols_, -1);
  for (std::size_t k = piv.size(); k-- > 0;) {
    SparseVec row = rows_[static_cast<std::size_t>(pivot_row_[piv[k]])];
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (slot[row[i].first] >= 0) hits.emplace_back(row[i].first, row[i].second);
    }
    for (auto const& [q, c] : hits) axpy(row, -c, reduced[static_cast<std::size_t>(slot[q])]);
    slot[piv[k]] = static_cast<std::int32_t>(k);
    reduced[k] = std::move(row);
  }
  return reduced;
}

}  // namespace koszul

namespace koszul {

SpanSolver::SpanSolver(std::size_t ambient_dim, std::vector<SparseVec> const& vectors)
    : count_(vectors.size()), row_of_pivot_(ambient_dim, -1) {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    SparseVec v = vectors[i];
    std::vector<Rational> combo(count_);
    combo[i] = 1;
    while (!v.empty()) {
      std::size_t lead = v.front().first;
      if (lead >= ambient_dim) fail(ErrorCode::DimensionMismatch, "vector outside ambient space");
      std::int32_t r = row_of_pivot_[lead];
      if (r < 0) break;
      Rational c = -v.front().second;
      axpy(v, c, rows_[static_cast<std::size_t>(r)]);
      for (std::size_t k = 0; k < count_; ++k) combo[k] += c * combos_[static_cast<std::size_t>(r)][k];
    }
    if (v.empty()) fail(ErrorCode::DegenerateRelations, "vectors are linearly dependent");
    Rational inv = v.front().second.inverse();
    scale(v, inv);
    for (auto& x : combo) x *= inv;
    row_of_pivot_[v.front().first] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
  }
}

std::optional<std::vector<Rational>> SpanSolver::solve(SparseVec target) const {
  std::vector<Rational> out(count_);
  std::size_t pos = 0;
  while (pos < target.size()) {
    std::size_t col = target[pos].first;
    if (col >= row_of_pivot_.size()) return std::nullopt;
    std::int32_t r = row_of_pivot_[col];
    if (r < 0) return std::nullopt;  // leading entry cannot be cancelled
    Rational c = target[pos].second;
    axpy(target, -c, rows_[static_cast<std::size_t>(r)]);
    for (std::size_t k = 0; k < count_; ++k) out[k] += c * combos_[static_cast<std::size_t>(r)][k];
  }
  return out;
}

}  // namespace koszul
