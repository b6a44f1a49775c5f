#include "doctest.h"
#include "koszul/error.hpp"
#include "koszul/frobenius.hpp"
#include "support.hpp"

using namespace koszul;
using namespace fixtures;

namespace {

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

// Coefficient of the top basis vector in x*y, read straight off the products.
Rational top_coeff(GradedFiniteAlgebra const& b, std::size_t i, Vector const& x, Vector const& y) {
  std::size_t d = b.length();
  Vector p = b.multiply(i, x, d - i, y);
  return p.at(0);
}

Vector phi(FrobeniusData const& f, std::size_t i, Vector const& x) {
  Matrix const& m = f.nakayama.at(i);
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * x[c];
  return out;
}

// <a,b> = <b,phi(a)> and phi(ab) = phi(a)phi(b) on all basis pairs.
void check_nakayama_laws(GradedFiniteAlgebra const& b, FrobeniusData const& f) {
  std::size_t d = b.length();
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t a = 0; a < b.dim(i); ++a)
      for (std::size_t c = 0; c < b.dim(d - i); ++c) {
        Vector ea = unit_vector(b.dim(i), a), ec = unit_vector(b.dim(d - i), c);
        CHECK(top_coeff(b, i, ea, ec) == top_coeff(b, d - i, ec, phi(f, i, ea)));
      }
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t j = 0; i + j <= d; ++j)
      for (std::size_t a = 0; a < b.dim(i); ++a)
        for (std::size_t c = 0; c < b.dim(j); ++c) {
          Vector ea = unit_vector(b.dim(i), a), ec = unit_vector(b.dim(j), c);
          CHECK(phi(f, i + j, b.multiply(i, ea, j, ec)) == b.multiply(i, phi(f, i, ea), j, phi(f, j, ec)));
        }
}

GradedFiniteAlgebra exterior(std::size_t n) {
  std::vector<TensorElement> rel;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) rel.push_back(commutator(static_cast<std::size_t>(n), i, j));
  GradedQuotient q(koszul_dual(HomogeneousAlgebra::create(default_names(n), 2, rel)));
  return GradedFiniteAlgebra::from_quotient(q, n);
}

bool antisymmetric(Matrix const& m) { return m.transpose() == -m; }

}  // namespace

TEST_CASE("exterior algebra on two generators") {
  auto b = exterior(2);
  CHECK(b.dims() == std::vector<std::size_t>{1, 2, 1});
  auto f = frobenius_detect(b);
  CHECK(f.length == 2);
  // x*y* is the top word, y*x* = -x*y*
  CHECK(f.pairing[1] == Matrix{{0, 1}, {-1, 0}});
  CHECK(f.nakayama[1] == -Matrix::identity(2));
  CHECK(f.nakayama[0] == Matrix::identity(1));
  CHECK(f.nakayama[2] == Matrix::identity(1));
  CHECK(is_graded_symmetric(f));
  check_nakayama_laws(b, f);
}

TEST_CASE("exterior algebra on three generators is graded symmetric") {
  auto b = exterior(3);
  CHECK(b.dims() == std::vector<std::size_t>{1, 3, 3, 1});
  auto f = frobenius_detect(b);
  CHECK(is_graded_symmetric(f));
  CHECK(f.nakayama[1] == Matrix::identity(3));
  check_nakayama_laws(b, f);
}

TEST_CASE("truncated polynomial ring k[x]/x^3") {
  GradedQuotient q(HomogeneousAlgebra::create({"x"}, 3, {hom(1, 3, {{{X, X, X}, 1}})}));
  auto b = GradedFiniteAlgebra::from_quotient(q, 2);
  CHECK(b.dims() == std::vector<std::size_t>{1, 1, 1});
  auto f = frobenius_detect(b);
  for (auto const& m : f.nakayama) CHECK(m == Matrix::identity(1));
  check_nakayama_laws(b, f);
}

TEST_CASE("degenerate algebras are rejected") {
  // k + V + 0, the dual of the free algebra
  GradedQuotient q(koszul_dual(free_algebra(2)));
  auto b = GradedFiniteAlgebra::from_quotient(q, 2);
  CHECK(b.dims() == std::vector<std::size_t>{1, 2, 0});
  CHECK_ERROR_CODE(frobenius_detect(b), ErrorCode::NotFrobenius);

  // k[x,y]/(x^2, xy, yx): degree-1 pairing with B_1 is degenerate
  auto deg = HomogeneousAlgebra::create(default_names(2), 2,
                                        {hom(2, 2, {{{X, X}, 1}}), hom(2, 2, {{{X, Y}, 1}}), hom(2, 2, {{{Y, X}, 1}})});
  GradedQuotient dq(deg);
  CHECK_ERROR_CODE(frobenius_detect(GradedFiniteAlgebra::from_quotient(dq, 2)), ErrorCode::NotFrobenius);
  CHECK_ERROR_CODE(frobenius_detect(exterior(2), Rational(0)), ErrorCode::InvalidArgument);
}

TEST_CASE("structure constants are validated") {
  // x.x = u, u.x = w, x.u = 2w is not associative
  std::vector<std::size_t> dims{1, 1, 1, 1};
  std::vector<std::vector<Matrix>> p(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; i + j < 4; ++j) p[i].push_back(Matrix::identity(1));
  p[1][2] = Matrix{{2}};
  CHECK_ERROR_CODE(GradedFiniteAlgebra(dims, p), ErrorCode::InvalidAlgebra);
  p[1][2] = Matrix{{1}};
  CHECK_NOTHROW(GradedFiniteAlgebra(dims, p));
  p[0][1] = Matrix{{3}};
  CHECK_ERROR_CODE(GradedFiniteAlgebra(dims, p), ErrorCode::InvalidAlgebra);
  p[0][1] = Matrix(2, 1);
  CHECK_ERROR_CODE(GradedFiniteAlgebra(dims, p), ErrorCode::InvalidAlgebra);
}

TEST_CASE("length-two algebras from a matrix") {
  auto e = length2_from_matrix(Matrix::identity(2));
  CHECK(e.basis_product(1, 0, 1, 1) == Vector{0});
  CHECK(e.basis_product(1, 0, 1, 0) == Vector{1});
  auto s = length2_from_matrix(Matrix{{0, 1}, {-1, 0}});
  CHECK(s.basis_product(1, 0, 1, 1) == Vector{1});
  CHECK(s.basis_product(1, 1, 1, 0) == Vector{-1});
  for (std::size_t a = 0; a < 2; ++a) CHECK(s.basis_product(0, 0, 1, a) == unit_vector(2, a));
  CHECK(s.basis_product(1, 0, 2, 0).empty());
  CHECK_ERROR_CODE(length2_from_matrix(Matrix{{1, 2}, {2, 4}}), ErrorCode::SingularMatrix);

  CHECK_FALSE(is_graded_symmetric(frobenius_detect(e)));
  CHECK(is_graded_symmetric(frobenius_detect(s)));
}

TEST_CASE("length-two Nakayama matrices") {
  CHECK(length2_nakayama(Matrix{{2, 1}, {1, 3}}) == Matrix::identity(2));
  CHECK(length2_nakayama(Matrix{{0, 1}, {-1, 0}}) == -Matrix::identity(2));
  Matrix m{{1, 1}, {0, 1}};
  Matrix n = length2_nakayama(m);
  CHECK(m * n == m.transpose());
  CHECK(n == Matrix{{0, -1}, {1, 1}});
  CHECK_ERROR_CODE(length2_nakayama(Matrix{{1, 1}, {1, 1}}), ErrorCode::SingularMatrix);
}

TEST_CASE("random length-two algebras") {
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    Matrix m = rng.invertible(n, -3, 3);
    if (t % 3 == 0) {
      // force an antisymmetric invertible M when n is even
      if (n % 2 == 1) continue;
      Matrix s(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          s(i, j) = rng.rational(-3, 3);
          s(j, i) = -s(i, j);
        }
      if (rank(s) != n) continue;
      m = s;
    }
    auto b = length2_from_matrix(m);
    auto f = frobenius_detect(b);
    CHECK(f.nakayama[1] == length2_nakayama(m));
    CHECK(is_graded_symmetric(f) == antisymmetric(m));
    check_nakayama_laws(b, f);
  }
}

TEST_CASE("rescaling the top class") {
  auto b = length2_from_matrix(Matrix{{1, 2}, {0, 1}});
  auto f1 = frobenius_detect(b);
  for (Rational c : {Rational(3), Rational(-1, 2), Rational(7, 5)}) {
    auto fc = frobenius_detect(b, c);
    CHECK(fc.varpi_scale == c);
    CHECK(fc.nakayama == f1.nakayama);
    for (std::size_t i = 0; i <= 2; ++i) CHECK(c * fc.pairing[i] == f1.pairing[i]);
  }
}

TEST_CASE("duals of quadratic algebras") {
  // quantum plane yx = 2xy
  auto qp = HomogeneousAlgebra::create(default_names(2), 2, {hom(2, 2, {{{Y, X}, 1}, {{X, Y}, -2}})});
  GradedQuotient q(koszul_dual(qp));
  auto b = GradedFiniteAlgebra::from_quotient(q, 2);
  auto f = frobenius_detect(b);
  CHECK_FALSE(is_graded_symmetric(f));
  check_nakayama_laws(b, f);
  // graded commutative duals of k[x,y,z] are symmetric
  GradedQuotient q3(koszul_dual(polynomial3()));
  auto b3 = GradedFiniteAlgebra::from_quotient(q3, 3);
  CHECK(is_graded_symmetric(frobenius_detect(b3)));
}
