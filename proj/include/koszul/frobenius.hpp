#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "koszul/homog.hpp"
#include "koszul/matrix.hpp"

namespace koszul {

/// Finite dimensional graded algebra B_0 + ... + B_d with B_0 = k, given by
/// structure constants on fixed bases (basis element 0 of B_0 is the unit).
class GradedFiniteAlgebra {
 public:
  GradedFiniteAlgebra() = default;
  /// products[i][j] has shape (dims[i]*dims[j]) x dims[i+j] for i + j <= d;
  /// row a*dims[j] + b holds the product e_a * e_b. Throws InvalidAlgebra if
  /// the unit or associativity fails on some basis triple.
  GradedFiniteAlgebra(std::vector<std::size_t> dims, std::vector<std::vector<Matrix>> products,
                      std::vector<std::vector<std::string>> labels = {});

  /// Truncation of a graded quotient to degrees 0..length.
  static GradedFiniteAlgebra from_quotient(GradedQuotient& q, std::size_t length);

  std::size_t length() const { return dims_.size() - 1; }
  std::size_t dim(std::size_t i) const { return i < dims_.size() ? dims_[i] : 0; }
  std::vector<std::size_t> const& dims() const { return dims_; }
  /// Basis labels per degree (may be empty).
  std::vector<std::vector<std::string>> const& labels() const { return labels_; }

  /// Product of basis elements; a zero vector of length dim(i+j) (empty past
  /// the top degree).
  Vector basis_product(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const;
  /// Product of arbitrary homogeneous elements given by coordinates.
  Vector multiply(std::size_t i, Vector const& x, std::size_t j, Vector const& y) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::vector<Matrix>> products_;
  std::vector<std::vector<std::string>> labels_;
};

struct FrobeniusData {
  std::size_t length = 0;
  /// The top class is varpi_scale times the basis vector of B_d.
  Rational varpi_scale{1};
  /// pairing[i](a, b) = coefficient of the top class in e_a e_b, e_a in B_i,
  /// e_b in B_{d-i}.
  std::vector<Matrix> pairing;
  /// nakayama[i]: matrix of phi on B_i acting on coordinate columns, so that
  /// phi(e_j) = sum_i nakayama[i](i, j) e_i; defined by <a,b> = <b,phi(a)>.
  std::vector<Matrix> nakayama;
};

/// Throws NotFrobenius when dim B_d != 1 or some pairing is degenerate.
FrobeniusData frobenius_detect(GradedFiniteAlgebra const& b, Rational varpi_scale = Rational(1));

/// <a,b> = (-1)^{i(d-i)} <b,a> for a in B_i, b in B_{d-i}.
bool is_graded_symmetric(FrobeniusData const& f);

/// k + E_1 + E_2 with x_a x_b = M(a,b) z; SingularMatrix if M is singular.
GradedFiniteAlgebra length2_from_matrix(Matrix const& m);

/// M^{-1} M^t, the Nakayama automorphism of length2_from_matrix(M) on E_1.
Matrix length2_nakayama(Matrix const& m);

}  // namespace koszul
