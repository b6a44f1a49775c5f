#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "koszul/dim2.hpp"
#include "koszul/error.hpp"
#include "koszul/dim3.hpp"
#include "koszul/homog.hpp"

namespace fixtures {

using koszul::Deformation;
using koszul::FilteredElement;
using koszul::HomogeneousAlgebra;
using koszul::Matrix;
using koszul::Rational;
using koszul::TensorElement;
using koszul::Word;

inline constexpr std::uint32_t X = 0, Y = 1, Z = 2;

/// Sum of coefficient * word terms; words of any length.
inline FilteredElement poly(std::size_t n, std::vector<std::pair<Word, Rational>> const& terms) {
  FilteredElement f(n);
  for (auto const& [w, c] : terms) f.add(TensorElement::word(n, w, c));
  return f;
}

inline TensorElement hom(std::size_t n, std::size_t degree, std::vector<std::pair<Word, Rational>> const& terms) {
  return TensorElement::from_terms(n, degree, terms);
}

inline TensorElement commutator(std::size_t n, std::uint32_t a, std::uint32_t b) {
  return hom(n, 2, {{{a, b}, 1}, {{b, a}, -1}});
}

inline HomogeneousAlgebra polynomial2() {
  return HomogeneousAlgebra::create(koszul::default_names(2), 2, {commutator(2, X, Y)});
}

/// r1 = yz - zy, r2 = zx - xz, r3 = xy - yx.
inline HomogeneousAlgebra polynomial3() {
  return HomogeneousAlgebra::create(koszul::default_names(3), 2,
                                    {commutator(3, Y, Z), commutator(3, Z, X), commutator(3, X, Y)});
}

inline HomogeneousAlgebra free_algebra(std::size_t n, std::size_t N = 2) {
  return HomogeneousAlgebra::free(koszul::default_names(n), N);
}

/// U(g) for a bracket given on the ordered pairs (y,z), (z,x), (x,y): the
/// relations are [a,b] - bracket(a,b).
inline Deformation lie_type(FilteredElement const& yz, FilteredElement const& zx, FilteredElement const& xy) {
  std::vector<FilteredElement> rel{FilteredElement(commutator(3, Y, Z)) - yz, FilteredElement(commutator(3, Z, X)) - zx,
                                   FilteredElement(commutator(3, X, Y)) - xy};
  return Deformation::from_relations(koszul::default_names(3), 2, rel);
}

inline FilteredElement zero3() { return FilteredElement(3); }
inline FilteredElement gen3(std::uint32_t i, Rational c = Rational(1)) { return poly(3, {{{i}, c}}); }
inline FilteredElement scalar3(Rational c) { return FilteredElement::scalar(3, c); }

/// [x,y] = z.
inline Deformation heisenberg() { return lie_type(zero3(), zero3(), gen3(Z)); }

/// Tails a_1(r2) = -z, a_1(r3) = y, i.e. relations zx - xz - z, xy - yx + y.
inline Deformation non_unimodular() { return lie_type(zero3(), gen3(Z), gen3(Y, Rational(-1))); }

/// [x,y] = y, [x,z] = z.
inline Deformation non_unimodular_opposite() { return lie_type(zero3(), gen3(Z, Rational(-1)), gen3(Y)); }

/// [x,y] = z, [y,z] = x, [z,x] = x (Jacobi identity fails).
inline Deformation pseudo_bracket() { return lie_type(gen3(X), gen3(X), gen3(Z)); }

/// sl2 in the basis [x,y] = z, [z,x] = 2x, [z,y] = -2y.
inline Deformation sl2() { return lie_type(gen3(Y, Rational(2)), gen3(X, Rational(2)), gen3(Z)); }

/// so3: [x,y] = z, [y,z] = x, [z,x] = y.
inline Deformation so3() { return lie_type(gen3(X), gen3(Y), gen3(Z)); }

/// Abelian Lie algebra with a central extension [x,y] = 1.
inline Deformation central_extension() { return lie_type(zero3(), zero3(), scalar3(Rational(1))); }

/// Skew polynomial base yx = xy, zx = 2xz, zy = yz with tails making theta
/// non-central in A^!: relations yx - xy, zx - 2xz - x, zy - yz + z + 1.
inline Deformation noncentral_theta() {
  std::vector<FilteredElement> rel{
      poly(3, {{{Y, X}, 1}, {{X, Y}, -1}}),
      poly(3, {{{Z, X}, 1}, {{X, Z}, -2}, {{X}, -1}}),
      poly(3, {{{Z, Y}, 1}, {{Y, Z}, -1}, {{Z}, 1}, {{}, 1}}),
  };
  return Deformation::from_relations(koszul::default_names(3), 2, rel);
}

/// Dim2 corpus: Q matrices with s and c.
inline koszul::Dim2Deformation dim2(Matrix q, koszul::Vector s = {}, Rational c = Rational(0)) {
  if (s.empty()) s = koszul::Vector(q.rows());
  return koszul::Dim2Deformation{koszul::Dim2Algebra(std::move(q)), std::move(s), std::move(c)};
}

inline Matrix q_polynomial() { return Matrix{{0, 1}, {-1, 0}}; }
inline Matrix q_quantum2() { return Matrix{{0, 1}, {-2, 0}}; }
inline Matrix q_jordan() { return Matrix{{-1, 1}, {-1, 0}}; }

/// Down-up algebra A(alpha, beta, gamma) on d = x, u = y:
/// d^2 u - alpha dud - beta ud^2 - gamma d, du^2 - alpha udu - beta u^2 d - gamma u.
inline Deformation down_up(Rational alpha, Rational beta, Rational gamma) {
  std::vector<FilteredElement> rel{
      poly(2, {{{X, X, Y}, 1}, {{X, Y, X}, -alpha}, {{Y, X, X}, -beta}, {{X}, -gamma}}),
      poly(2, {{{X, Y, Y}, 1}, {{Y, X, Y}, -alpha}, {{Y, Y, X}, -beta}, {{Y}, -gamma}}),
  };
  return Deformation::from_relations(koszul::default_names(2), 3, rel);
}

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  long long integer(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(engine);
  }
  Rational rational(long long lo, long long hi) { return Rational(integer(lo, hi)); }
  Matrix matrix(std::size_t r, std::size_t c, long long lo, long long hi) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rational(lo, hi);
    return m;
  }
  Matrix invertible(std::size_t n, long long lo, long long hi) {
    for (;;) {
      Matrix m = matrix(n, n, lo, hi);
      if (koszul::rank(m) == n) return m;
    }
  }
};

}  // namespace fixtures

#define CHECK_ERROR_CODE(expr, expected)            \
  do {                                              \
    bool thrown_ = false;                           \
    try {                                           \
      (void)(expr);                                 \
    } catch (koszul::Error const& e_) {             \
      thrown_ = true;                               \
      CHECK(e_.code() == (expected));               \
    }                                               \
    CHECK(thrown_);                                 \
  } while (0)
