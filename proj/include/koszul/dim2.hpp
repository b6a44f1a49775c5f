#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "koszul/affine_map.hpp"
#include "koszul/homog.hpp"

namespace koszul {

/// A = T(V)/(f) with f = x Q x^t; the coefficient of word (i, j) in f is Q(i, j).
class Dim2Algebra {
 public:
  Dim2Algebra() = default;
  explicit Dim2Algebra(Matrix q);
  /// Reads Q off a presentation with a single quadratic relation.
  static Dim2Algebra from_presentation(HomogeneousAlgebra const& a);

  std::size_t n() const { return q_.rows(); }
  Matrix const& Q() const { return q_; }
  TensorElement relation() const;
  bool gorenstein() const;
  HomogeneousAlgebra presentation(std::vector<std::string> names = {}) const;

 private:
  Matrix q_;
};

/// U = T(V)/(f - v - c) with v = x s^t.
struct Dim2Deformation {
  Dim2Algebra base;
  Vector s;
  Rational c;

  static Dim2Deformation from_deformation(Deformation const& u);
  FilteredElement deformed_relation() const;
  Deformation to_deformation(std::vector<std::string> names = {}) const;
};

/// zeta(x) = -x Q^t Q^{-1}.
AffineMap nakayama_graded(Dim2Algebra const& a);
bool cy_graded(Dim2Algebra const& a);
/// xi(x) = -x Q^t Q^{-1} + s Q^{-1}.
AffineMap nakayama_deformed(Dim2Deformation const& u);
bool cy_deformed(Dim2Deformation const& u);

}  // namespace koszul
