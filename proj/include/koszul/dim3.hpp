#pragma once

#include <cstddef>
#include <vector>

#include "koszul/affine_map.hpp"
#include "koszul/homog.hpp"

namespace koszul {

/// Global dimension 3 candidate: dim R = n and C_{-3} = R(x)V cap V(x)R is
/// spanned by z = r Q1 x^t = x Q2 r^t.
struct Dim3Algebra {
  HomogeneousAlgebra base;
  TensorElement z;
  Matrix Q1;
  Matrix Q2;
  /// For N = 2: P[i](a, b) is the coefficient of x_a x_b in r_i.
  std::vector<Matrix> P;
};

/// z is the canonical basis vector of C_{-3} (leading coefficient 1) times
/// z_scale. Throws NotGorensteinCandidate, SingularMatrix.
Dim3Algebra build_dim3(HomogeneousAlgebra const& a, Rational z_scale = Rational(1),
                       std::size_t cap = kDefaultAmbientCap);

struct YonedaProducts {
  /// gamma . alpha and alpha . gamma as multiples of z^*.
  Rational gamma_alpha;
  Rational alpha_gamma;
  /// alpha . beta in the basis r_i^* (zero for N >= 3).
  Vector alpha_beta;
};

/// gamma in E^2 (coordinates over r_i^*), alpha, beta in E^1 (over x_i^*).
YonedaProducts yoneda_products(Dim3Algebra const& a, Vector const& gamma, Vector const& alpha, Vector const& beta);

/// zeta(x) = x Q1^t Q2^{-1}, checked against the relations.
AffineMap nakayama_graded3(Dim3Algebra const& a);
/// Q1 = Q2^t.
bool cy_check3(Dim3Algebra const& a);

/// A potential is an element of T(V) with parts in degrees >= 1.
using Potential = FilteredElement;

/// [x_i^* t] = [t x_i^*] for every i.
bool is_superpotential(TensorElement const& t);
bool is_potential(Potential const& p);

/// T(V)/(d_{x_i^*} w) with d_{x_i^*} w = [x_i^* w]; the top part of w must have
/// degree N+1. Homogeneous w gives zero tails.
Deformation relations_from_potential(Potential const& w, std::size_t n, std::size_t N,
                                     std::vector<std::string> names = {});

struct Dim3Options {
  /// Run bg_check (N = 2) or a bounded pbw_check (N >= 3) first.
  bool require_pbw = true;
  std::size_t pbw_degree = 4;
  std::size_t cap = kDefaultAmbientCap;
};

/// k with psi(z) = (1(x)a_1)(z) - (a_1(x)1)(z) = sum k_i r_i; throws
/// DeformationIncompatible when psi(z) is not in R.
Vector psi_vector(Deformation const& u, Dim3Algebra const& a);

/// chi(x) = x Q1^t Q2^{-1} + k Q2^{-1}, checked against the deformed relations.
AffineMap nakayama_deformed3(Deformation const& u, Dim3Algebra const& a, Dim3Options const& options = {});

/// Entry k-1 tells whether (a_k(x)1)(z) = (1(x)a_k)(z), k = 1..N.
std::vector<bool> compat_check(Deformation const& u, Dim3Algebra const& a);

/// w = z + (a_1(x)1)(z) + ... + (a_N(x)1)(z) for a Calabi-Yau base; verifies
/// that w is a potential whose derivatives span the deformed relations.
Potential build_potential_cy(Deformation const& u, Dim3Algebra const& a);

}  // namespace koszul
