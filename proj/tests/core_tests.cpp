#include <limits>
#include <sstream>

#include "doctest.h"
#include "koszul/error.hpp"
#include "koszul/matrix.hpp"
#include "koszul/rational.hpp"
#include "koszul/sparse.hpp"
#include "koszul/subspace.hpp"
#include "koszul/tensor.hpp"
#include "support.hpp"

using namespace koszul;
using fixtures::hom;
using fixtures::Rng;

namespace {

// Dense matrix-vector product, used as an oracle for kernels.
Vector mat_vec(Matrix const& m, Vector const& v) {
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

Rational dot(SparseVec const& a, SparseVec const& b) {
  Rational s;
  for (auto const& [i, x] : a) s += x * coefficient(b, i);
  return s;
}

Subspace random_subspace(Rng& rng, std::size_t ambient, std::size_t max_rows) {
  std::size_t k = static_cast<std::size_t>(rng.integer(0, static_cast<long long>(max_rows)));
  Matrix m = rng.matrix(k, ambient, -2, 2);
  // sparsify so that proper intersections occur
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < ambient; ++j)
      if (rng.integer(0, 2) == 0) m(i, j) = 0;
  return Subspace::span(m);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4/2").str() == "-2");
  CHECK(Rational::parse("0/5").str() == "0");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational::parse("+7").str() == "7");
  CHECK_ERROR_CODE(Rational::parse("1/0"), ErrorCode::ParseError);
  CHECK_ERROR_CODE(Rational::parse("1.5"), ErrorCode::ParseError);
  CHECK_ERROR_CODE(Rational::parse(""), ErrorCode::ParseError);
  CHECK_ERROR_CODE(Rational::parse("2/"), ErrorCode::ParseError);
  CHECK_ERROR_CODE(Rational(0).inverse(), ErrorCode::SingularMatrix);
  // numbers far beyond 64 bits stay exact
  Rational big = Rational::parse("123456789012345678901234567890/7");
  CHECK((big * Rational(7)).str() == "123456789012345678901234567890");
}

TEST_CASE("rref examples") {
  auto zero = rref(Matrix(2, 2));
  CHECK(zero.reduced == Matrix(2, 2));
  CHECK(zero.pivots.empty());
  CHECK(zero.rank() == 0);

  auto id = rref(Matrix::identity(2));
  CHECK(id.reduced == Matrix::identity(2));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});

  auto r = rref(Matrix{{2, 4}, {1, 2}});
  CHECK(r.reduced == Matrix{{1, 2}, {0, 0}});
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent and preserves the row space") {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = static_cast<std::size_t>(rng.integer(1, 5));
    std::size_t c = static_cast<std::size_t>(rng.integer(1, 6));
    Matrix m = rng.matrix(r, c, -3, 3);
    auto once = rref(m);
    auto twice = rref(once.reduced);
    CHECK(twice.reduced == once.reduced);
    CHECK(twice.pivots == once.pivots);
    CHECK(Subspace::span(m) == Subspace::span(once.reduced));
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Matrix::identity(3)).dim() == 0);
  Subspace full = kernel(Matrix(1, 3));
  CHECK(full.dim() == 3);
  CHECK(full == Subspace::full(3));

  Subspace k = kernel(Matrix{{1, -1, 0}});
  CHECK(k.dim() == 2);
  CHECK(k.contains(sparse_from_dense({1, 1, 0})));
  CHECK(k.contains(sparse_from_dense({0, 0, 1})));
  CHECK_FALSE(k.contains(sparse_from_dense({1, 0, 0})));
}

TEST_CASE("kernel vectors are annihilated and have the right dimension") {
  Rng rng(12);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = static_cast<std::size_t>(rng.integer(1, 4));
    std::size_t c = static_cast<std::size_t>(rng.integer(1, 6));
    Matrix m = rng.matrix(r, c, -2, 2);
    Subspace k = kernel(m);
    CHECK(k.dim() == c - rank(m));
    Matrix b = k.basis();
    for (std::size_t i = 0; i < b.rows(); ++i) CHECK(is_zero(mat_vec(m, b.row(i))));
  }
}

TEST_CASE("inverse examples") {
  CHECK(inverse(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(inverse(Matrix{{0, 1}, {-2, 0}}) == Matrix{{0, Rational(-1, 2)}, {1, 0}});
  CHECK(inverse(Matrix{{1, 1}, {0, 1}}) == Matrix{{1, -1}, {0, 1}});
  CHECK_ERROR_CODE(inverse(Matrix{{1, 2}, {2, 4}}), ErrorCode::SingularMatrix);
  CHECK_ERROR_CODE(inverse(Matrix(2, 3)), ErrorCode::DimensionMismatch);
}

TEST_CASE("inverse of random invertible matrices") {
  Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    Matrix m = rng.invertible(n, -3, 3);
    Matrix inv = inverse(m);
    CHECK(m * inv == Matrix::identity(n));
    CHECK(inv * m == Matrix::identity(n));
  }
}

TEST_CASE("solve_left") {
  Matrix a{{1, 2}, {3, 4}};
  auto x = solve_left(a, Vector{5, 6});
  REQUIRE(x);
  CHECK(*x * a == Vector{5, 6});
  CHECK_FALSE(solve_left(Matrix{{1, 1}, {2, 2}}, Vector{1, 0}));
}

TEST_CASE("intersect examples") {
  Subspace a = Subspace::span(Matrix{{1, 0, 0}, {0, 1, 0}});
  Subspace b = Subspace::span(Matrix{{0, 1, 0}, {0, 0, 1}});
  CHECK(intersect(a, a) == a);
  CHECK(intersect(Subspace::span(Matrix{{1, 0}}), Subspace::span(Matrix{{0, 1}})).is_zero());
  CHECK(intersect(a, b) == Subspace::span(Matrix{{0, 1, 0}}));
  CHECK_ERROR_CODE(intersect(a, Subspace::full(2)), ErrorCode::DimensionMismatch);
}

TEST_CASE("intersect laws on random subspaces") {
  Rng rng(14);
  for (int t = 0; t < 80; ++t) {
    std::size_t dim = static_cast<std::size_t>(rng.integer(1, 6));
    Subspace a = random_subspace(rng, dim, dim);
    Subspace b = random_subspace(rng, dim, dim);
    Subspace c = random_subspace(rng, dim, dim);
    Subspace ab = intersect(a, b);
    CHECK(ab == intersect(b, a));
    CHECK(intersect(ab, c) == intersect(a, intersect(b, c)));
    CHECK(a.dim() + b.dim() == sum(a, b).dim() + ab.dim());
    CHECK(a.contains(ab));
    CHECK(b.contains(ab));
  }
}

TEST_CASE("orthogonal complement examples") {
  CHECK(orthogonal_complement(Subspace(4)) == Subspace::full(4));
  CHECK(orthogonal_complement(Subspace::full(4)).is_zero());

  // span{xy - yx} in V(x)V, n = 2: words xx, xy, yx, yy
  Subspace r = Subspace::span(Matrix{{0, 1, -1, 0}});
  Subspace perp = orthogonal_complement(r);
  CHECK(perp == Subspace::span(Matrix{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, 0}}));
}

TEST_CASE("orthogonal complement is an involution and annihilates") {
  Rng rng(15);
  for (int t = 0; t < 80; ++t) {
    std::size_t dim = static_cast<std::size_t>(rng.integer(1, 7));
    Subspace s = random_subspace(rng, dim, dim);
    Subspace p = orthogonal_complement(s);
    CHECK(p.dim() == dim - s.dim());
    CHECK(orthogonal_complement(p) == s);
    for (auto const& u : s.rows())
      for (auto const& v : p.rows()) CHECK(dot(u, v).is_zero());
  }
}

TEST_CASE("word indexing") {
  CHECK(word_index(Word{0, 0}, 2) == 0);
  CHECK(word_index(Word{1, 1}, 2) == 3);
  CHECK(word_index(Word{1, 0, 2}, 3) == 11);
  CHECK_ERROR_CODE(word_index(Word{3}, 3), ErrorCode::InvalidArgument);
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 0; m <= 4; ++m)
      for (std::size_t i = 0; i < power(n, m); ++i) CHECK(word_index(unflatten(i, n, m), n) == i);
}

TEST_CASE("capacity checks") {
  CHECK_NOTHROW(check_capacity(50'000, kDefaultAmbientCap, "test"));
  CHECK_ERROR_CODE(check_capacity(50'001, kDefaultAmbientCap, "test"), ErrorCode::CapacityExceeded);
  CHECK(power(2, 70) == std::numeric_limits<std::size_t>::max());
}

TEST_CASE("contractions") {
  using fixtures::X;
  using fixtures::Y;
  using fixtures::Z;
  TensorElement xy = hom(2, 2, {{{X, Y}, 1}});
  CHECK(contract_left(X, xy) == hom(2, 1, {{{Y}, 1}}));
  CHECK(contract_right(X, xy).is_zero());
  CHECK(contract_right(Y, xy) == hom(2, 1, {{{X}, 1}}));

  TensorElement alt = hom(3, 3,
                          {{{X, Y, Z}, 1}, {{X, Z, Y}, -1}, {{Y, Z, X}, 1}, {{Y, X, Z}, -1}, {{Z, X, Y}, 1}, {{Z, Y, X}, -1}});
  CHECK(contract_left(X, alt) == hom(3, 2, {{{Y, Z}, 1}, {{Z, Y}, -1}}));
  CHECK_ERROR_CODE(contract_left(0, TensorElement(2, 0)), ErrorCode::InvalidArgument);
}

TEST_CASE("left and right contractions commute") {
  Rng rng(16);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    std::size_t m = static_cast<std::size_t>(rng.integer(2, 4));
    std::vector<std::pair<Word, Rational>> terms;
    for (int k = 0; k < 6; ++k) {
      Word w;
      for (std::size_t i = 0; i < m; ++i) w.push_back(static_cast<std::uint32_t>(rng.integer(0, static_cast<long long>(n) - 1)));
      terms.emplace_back(w, rng.rational(-3, 3));
    }
    TensorElement w = TensorElement::from_terms(n, m, terms);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) CHECK(contract_left(a, contract_right(b, w)) == contract_right(b, contract_left(a, w)));
  }
}

TEST_CASE("tensor and filtered arithmetic") {
  using fixtures::poly;
  using fixtures::X;
  using fixtures::Y;
  auto a = poly(2, {{{X}, 1}, {{}, 2}});
  auto b = poly(2, {{{Y}, 1}, {{}, -1}});
  auto p = a * b;  // xy - x + 2y - 2
  CHECK(p == poly(2, {{{X, Y}, 1}, {{X}, -1}, {{Y}, 2}, {{}, -2}}));
  CHECK(p.top_degree() == 2);
  CHECK(to_string(p, {"x", "y"}) == "x.y - x + 2 y - 2");
  CHECK((p - p).is_zero());
  CHECK(to_string(TensorElement(2, 3), {"x", "y"}) == "0");
  auto flat = p.flatten(2);
  // layout: 1 | x y | xx xy yx yy
  CHECK(flat == SparseVec{{0, Rational(-2)}, {1, Rational(-1)}, {2, Rational(2)}, {4, Rational(1)}});
}

TEST_CASE("span solver") {
  SparseVec a{{0, Rational(1)}, {1, Rational(1)}};
  SparseVec b{{1, Rational(1)}, {2, Rational(-1)}};
  SpanSolver s(3, {a, b});
  auto c = s.solve(SparseVec{{0, Rational(2)}, {1, Rational(5)}, {2, Rational(-3)}});
  REQUIRE(c);
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 3);
  CHECK_FALSE(s.solve(SparseVec{{2, Rational(1)}}));
  CHECK_ERROR_CODE(SpanSolver(3, {a, a}), ErrorCode::DegenerateRelations);
}

TEST_CASE("matrix printing") {
  std::ostringstream os;
  os << Matrix{{1, Rational(-1, 2)}, {0, 3}};
  CHECK(os.str() == "[[1, -1/2], [0, 3]]");
}
