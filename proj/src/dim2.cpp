#include "koszul/dim2.hpp"

#include "koszul/error.hpp"

namespace koszul {

Dim2Algebra::Dim2Algebra(Matrix q) : q_(std::move(q)) {
  if (!q_.is_square() || q_.rows() == 0) fail(ErrorCode::DimensionMismatch, "Q must be a nonempty square matrix");
}

Dim2Algebra Dim2Algebra::from_presentation(HomogeneousAlgebra const& a) {
  if (a.relation_degree() != 2 || a.relation_count() != 1)
    fail(ErrorCode::InvalidArgument, "expected exactly one quadratic relation");
  std::size_t n = a.n();
  Matrix q(n, n);
  for (auto const& [idx, c] : a.relation(0).coeffs()) q(idx / n, idx % n) = c;
  return Dim2Algebra(std::move(q));
}

TensorElement Dim2Algebra::relation() const {
  std::size_t n = this->n();
  SparseVec v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!q_(i, j).is_zero()) v.emplace_back(i * n + j, q_(i, j));
  return TensorElement(n, 2, std::move(v));
}

bool Dim2Algebra::gorenstein() const { return rank(q_) == n(); }

HomogeneousAlgebra Dim2Algebra::presentation(std::vector<std::string> names) const {
  if (names.empty()) names = default_names(n());
  return HomogeneousAlgebra::create(std::move(names), 2, {relation()});
}

Dim2Deformation Dim2Deformation::from_deformation(Deformation const& u) {
  Dim2Deformation out{Dim2Algebra::from_presentation(u.base()), Vector(u.base().n()), Rational()};
  for (std::size_t j = 0; j < u.base().n(); ++j) out.s[j] = -u.tail(1)(0, j);
  out.c = -u.tail(2)(0, 0);
  return out;
}

FilteredElement Dim2Deformation::deformed_relation() const {
  std::size_t n = base.n();
  FilteredElement p(base.relation());
  for (std::size_t j = 0; j < n; ++j)
    if (!s.at(j).is_zero()) p.add(TensorElement::word(n, Word{static_cast<std::uint32_t>(j)}, -s[j]));
  p.add(TensorElement::word(n, Word{}, -c));
  return p;
}

Deformation Dim2Deformation::to_deformation(std::vector<std::string> names) const {
  if (names.empty()) names = default_names(base.n());
  return Deformation::from_relations(std::move(names), 2, {deformed_relation()});
}

AffineMap nakayama_graded(Dim2Algebra const& a) {
  Matrix const& q = a.Q();
  AffineMap m{-(q.transpose() * inverse(q)), Vector(a.n())};
  if (!preserves_span(m, {FilteredElement(a.relation())}))
    fail(ErrorCode::AutomorphismCheckFailed, "zeta does not preserve the relation");
  return m;
}

bool cy_graded(Dim2Algebra const& a) { return a.gorenstein() && a.Q().transpose() == -a.Q(); }

AffineMap nakayama_deformed(Dim2Deformation const& u) {
  Matrix const& q = u.base.Q();
  if (u.s.size() != u.base.n()) fail(ErrorCode::DimensionMismatch, "s has the wrong length");
  Matrix qinv = inverse(q);
  AffineMap m{-(q.transpose() * qinv), u.s * qinv};
  if (!preserves_span(m, {u.deformed_relation()}))
    fail(ErrorCode::AutomorphismCheckFailed, "xi does not preserve the deformed relation");
  return m;
}

bool cy_deformed(Dim2Deformation const& u) {
  if (!u.base.gorenstein()) fail(ErrorCode::SingularMatrix, "Q is singular");
  return u.base.Q().transpose() == -u.base.Q() && is_zero(u.s);
}

}  // namespace koszul
