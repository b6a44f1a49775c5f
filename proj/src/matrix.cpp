#include "koszul/matrix.hpp"

#include <ostream>

#include "koszul/error.hpp"

namespace koszul {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (auto const& r : rows) {
    if (r.size() != cols_) fail(ErrorCode::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::vector<Vector> const& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorCode::DimensionMismatch, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (auto const& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix operator*(Matrix const& a, Matrix const& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      Rational const& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

Matrix operator+(Matrix const& a, Matrix const& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix sum shape");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(Matrix const& a, Matrix const& b) { return a + (-b); }

Matrix operator*(Rational const& s, Matrix const& m) {
  Matrix out = m;
  for (auto& x : out.data_) x *= s;
  return out;
}

Matrix Matrix::operator-() const { return Rational(-1) * *this; }

std::ostream& operator<<(std::ostream& os, Matrix const& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

Vector operator*(Vector const& v, Matrix const& m) {
  if (v.size() != m.rows()) fail(ErrorCode::DimensionMismatch, "vector-matrix product shape");
  Vector out(m.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m(k, j);
  }
  return out;
}

Vector operator+(Vector const& a, Vector const& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "vector sum shape");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator*(Rational const& s, Vector const& v) {
  Vector out = v;
  for (auto& x : out) x *= s;
  return out;
}

bool is_zero(Vector const& v) {
  for (auto const& x : v)
    if (!x.is_zero()) return false;
  return true;
}

RrefResult rref(Matrix const& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(Matrix const& m) { return rref(m).rank(); }

Matrix inverse(Matrix const& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RrefResult red = rref(aug);
  if (red.rank() < n || red.pivots[n - 1] != n - 1)
    fail(ErrorCode::SingularMatrix, "matrix is singular");
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = red.reduced(i, n + j);
  return out;
}

std::optional<Vector> solve_left(Matrix const& a, Vector const& b) {
  if (b.size() != a.cols()) fail(ErrorCode::DimensionMismatch, "solve_left shape");
  // x a = b  <=>  a^t x^t = b^t: reduce [a^t | b^t].
  Matrix at = a.transpose();
  Matrix aug(at.rows(), at.cols() + 1);
  for (std::size_t i = 0; i < at.rows(); ++i) {
    for (std::size_t j = 0; j < at.cols(); ++j) aug(i, j) = at(i, j);
    aug(i, at.cols()) = b[i];
  }
  RrefResult red = rref(aug);
  Vector x(a.rows());
  for (std::size_t k = 0; k < red.rank(); ++k) {
    std::size_t p = red.pivots[k];
    if (p == at.cols()) return std::nullopt;
    x[p] = red.reduced(k, at.cols());
  }
  return x;
}

}  // namespace koszul
