#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "koszul/affine_map.hpp"
#include "koszul/frobenius.hpp"
#include "koszul/homog.hpp"

namespace koszul {

struct CurvedDualOptions {
  /// Reject deformations that fail the Jacobi conditions (NotPBW).
  bool require_pbw = true;
  /// Top class of A^! is varpi_scale times its basis vector.
  Rational varpi_scale{1};
  std::size_t cap = kDefaultAmbientCap;
};

/// (A^!, delta, theta) for an N = 2 deformation U of A, truncated at the
/// global dimension d.
///
/// delta(x_k^*) is the class of the functional r |-> x_k^*(nu(r)) on R, with
/// nu = -a_1, extended by delta(ab) = delta(a) b + (-1)^{|a|} a delta(b).
/// theta is the class of the functional r |-> a_2(r); with these conventions
/// delta^2(a) = theta a - a theta.
class CurvedDGDual {
 public:
  Deformation const& deformation() const { return u_; }
  std::size_t gldim() const { return d_; }
  GradedFiniteAlgebra const& dual() const { return dual_; }
  FrobeniusData const& frobenius() const { return frobenius_; }
  std::vector<Word> const& representatives(std::size_t m) const { return reps_.at(m); }

  /// Matrix of delta: A^!_m -> A^!_{m+1}; row a is delta(e_a).
  Matrix const& derivation(std::size_t m) const { return derivation_.at(m); }
  Vector apply_derivation(std::size_t m, Vector const& x) const;
  /// theta in A^!_2.
  Vector const& curvature() const { return theta_; }
  /// delta(x_k^*) for k = 0..n-1 as coordinates in A^!_2.
  std::vector<Vector> const& generator_images() const { return images_; }

 private:
  friend CurvedDGDual build_curved_dual(Deformation const&, std::size_t, CurvedDualOptions const&);

  Deformation u_;
  std::size_t d_ = 0;
  GradedFiniteAlgebra dual_;
  FrobeniusData frobenius_;
  std::vector<std::vector<Word>> reps_;
  std::vector<Matrix> derivation_;
  std::vector<Vector> images_;
  Vector theta_;
};

/// Throws WrongN, NotPBW (when required), NotFrobeniusDual when A^! does not
/// look like a Frobenius algebra of length d (dim A^!_d = 1, A^!_{d+1} =
/// A^!_{d+2} = 0, nondegenerate pairing).
CurvedDGDual build_curved_dual(Deformation const& u, std::size_t d, CurvedDualOptions const& options = {});

/// delta^2(a) = theta a - a theta on a basis of every A^!_m, m <= d-2.
bool curvature_check(CurvedDGDual const& c);

/// Leibniz rule delta(ab) = delta(a) b + (-1)^{|a|} a delta(b) on basis pairs.
bool derivation_check(CurvedDGDual const& c);

/// lambda_j with delta(w_j) = lambda_j varpi, where x_i^* w_j = delta_ij varpi.
Vector lambda_vector(CurvedDGDual const& c);

struct GeneralNakayama {
  AffineMap map;
  /// Nakayama automorphism of A^! on A^!_1: phi(x^*) = x^* P.
  Matrix P;
  Vector lambda;
  std::size_t gldim = 0;
};

/// chi(x) = (-1)^{d+1} x (P^{-1})^t + lambda, verified to preserve the span
/// of the deformed relations (AutomorphismCheckFailed otherwise).
GeneralNakayama nakayama_deformation_general(Deformation const& u, std::size_t d,
                                             CurvedDualOptions const& options = {});

struct CYVerdict {
  bool cy = false;
  std::string reason;
};

/// For augmented U over a Calabi-Yau base: CY iff delta(A^!_{d-1}) = 0.
/// Throws NotAugmented, BaseNotCY.
CYVerdict cy_check_augmented(Deformation const& u, std::size_t d, CurvedDualOptions const& options = {});

struct ThetaTransferReport {
  bool central = false;
  /// U' = T(V)/(r - nu(r)), present when theta is central.
  std::optional<Deformation> augmented;
  /// Nakayama map of U; also checked against U'.
  std::optional<AffineMap> nakayama;
  bool nakayama_shared = false;
  /// CY verdict for U' (absent when its base is not CY).
  std::optional<bool> augmented_cy;
  /// Forward transfer: U' CY implies U CY. Absent when nothing follows.
  std::optional<bool> cy;
  std::string caveat;
};

ThetaTransferReport theta_central_and_transfer(Deformation const& u, std::size_t d,
                                               CurvedDualOptions const& options = {});

}  // namespace koszul
