#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <vector>

#include "koszul/rational.hpp"

namespace koszul {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::vector<Vector> const& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Rational const& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(Matrix const&, Matrix const&) = default;

  friend Matrix operator*(Matrix const& a, Matrix const& b);
  friend Matrix operator+(Matrix const& a, Matrix const& b);
  friend Matrix operator-(Matrix const& a, Matrix const& b);
  friend Matrix operator*(Rational const& s, Matrix const& m);
  Matrix operator-() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, Matrix const& m);

/// Row vector times matrix.
Vector operator*(Vector const& v, Matrix const& m);
Vector operator+(Vector const& a, Vector const& b);
Vector operator*(Rational const& s, Vector const& v);
bool is_zero(Vector const& v);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Canonical reduced row echelon form; pivots are the leftmost nonzero
/// columns of each nonzero row.
RrefResult rref(Matrix const& m);

std::size_t rank(Matrix const& m);

/// Inverse of a square matrix. Throws SingularMatrix.
Matrix inverse(Matrix const& m);

/// Solves x * a = b for a row vector x. Returns nullopt when b is not in the
/// row space of a. If the rows of a are dependent some solution is returned.
std::optional<Vector> solve_left(Matrix const& a, Vector const& b);

}  // namespace koszul
