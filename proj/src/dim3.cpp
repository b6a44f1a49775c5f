#include "koszul/dim3.hpp"

#include "koszul/error.hpp"

namespace koszul {

namespace {

void check_same_base(Deformation const& u, Dim3Algebra const& a) {
  if (!(u.base() == a.base) || u.base().relations() != a.base.relations())
    fail(ErrorCode::InvalidArgument, "deformation is over a different presentation");
}

TensorElement gen(std::size_t n, std::size_t i) { return TensorElement::word(n, Word{static_cast<std::uint32_t>(i)}); }

/// (a_k (x) 1)(z) through the R(x)V expansion.
TensorElement tail_left(Deformation const& u, Dim3Algebra const& a, std::size_t k) {
  std::size_t n = a.base.n();
  TensorElement out(n, a.base.relation_degree() + 1 - k);
  for (std::size_t i = 0; i < a.Q1.rows(); ++i) {
    TensorElement t = u.tail_of(k, i);
    if (t.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!a.Q1(i, j).is_zero()) out += a.Q1(i, j) * tensor(t, gen(n, j));
  }
  return out;
}

/// (1 (x) a_k)(z) through the V(x)R expansion.
TensorElement tail_right(Deformation const& u, Dim3Algebra const& a, std::size_t k) {
  std::size_t n = a.base.n();
  TensorElement out(n, a.base.relation_degree() + 1 - k);
  for (std::size_t j = 0; j < a.Q2.cols(); ++j) {
    TensorElement t = u.tail_of(k, j);
    if (t.is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (!a.Q2(i, j).is_zero()) out += a.Q2(i, j) * tensor(gen(n, i), t);
  }
  return out;
}

Subspace filtered_span(std::vector<FilteredElement> const& elems, std::size_t n, std::size_t top) {
  std::vector<SparseVec> rows;
  for (auto const& e : elems) rows.push_back(e.flatten(top));
  return Subspace::span(filtered_offset(n, top + 1), std::move(rows));
}

}  // namespace

Dim3Algebra build_dim3(HomogeneousAlgebra const& a, Rational z_scale, std::size_t cap) {
  if (z_scale.is_zero()) fail(ErrorCode::InvalidArgument, "z must be nonzero");
  std::size_t n = a.n();
  std::size_t N = a.relation_degree();
  if (a.relation_count() != n)
    fail(ErrorCode::NotGorensteinCandidate,
         "dim R = " + std::to_string(a.relation_count()) + " differs from n = " + std::to_string(n));
  Subspace c3 = coalgebra_component(a, 3, cap);
  if (c3.dim() != 1)
    fail(ErrorCode::NotGorensteinCandidate, "dim C_{-3} = " + std::to_string(c3.dim()) + ", expected 1");
  Dim3Algebra out;
  out.base = a;
  out.z = z_scale * TensorElement(n, N + 1, c3.rows().front());
  out.Q1 = *expand_right(a, out.z);
  out.Q2 = *expand_left(a, out.z);
  if (rank(out.Q1) != n) fail(ErrorCode::SingularMatrix, "Q1 is singular");
  if (rank(out.Q2) != n) fail(ErrorCode::SingularMatrix, "Q2 is singular");
  if (N == 2) {
    for (auto const& r : a.relations()) {
      Matrix p(n, n);
      for (auto const& [idx, c] : r.coeffs()) p(idx / n, idx % n) = c;
      out.P.push_back(std::move(p));
    }
  }
  return out;
}

YonedaProducts yoneda_products(Dim3Algebra const& a, Vector const& gamma, Vector const& alpha, Vector const& beta) {
  std::size_t n = a.base.n();
  if (gamma.size() != n || alpha.size() != n || beta.size() != n)
    fail(ErrorCode::DimensionMismatch, "coordinate vectors must have length n");
  auto bilinear = [n](Vector const& x, Matrix const& m, Vector const& y) {
    Rational s;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += x[i] * m(i, j) * y[j];
    return s;
  };
  YonedaProducts out;
  out.gamma_alpha = bilinear(gamma, a.Q1, alpha);
  out.alpha_gamma = bilinear(alpha, a.Q2, gamma);
  out.alpha_beta = Vector(n);
  if (a.base.relation_degree() == 2)
    for (std::size_t i = 0; i < n; ++i) out.alpha_beta[i] = bilinear(alpha, a.P[i], beta);
  return out;
}

AffineMap nakayama_graded3(Dim3Algebra const& a) {
  AffineMap m{a.Q1.transpose() * inverse(a.Q2), Vector(a.base.n())};
  std::vector<FilteredElement> rel;
  for (auto const& r : a.base.relations()) rel.emplace_back(r);
  if (!preserves_span(m, rel)) fail(ErrorCode::AutomorphismCheckFailed, "zeta does not preserve R");
  return m;
}

bool cy_check3(Dim3Algebra const& a) { return a.Q1 == a.Q2.transpose(); }

bool is_superpotential(TensorElement const& t) {
  if (t.degree() == 0) return true;
  for (std::size_t i = 0; i < t.n(); ++i)
    if (contract_left(i, t) != contract_right(i, t)) return false;
  return true;
}

bool is_potential(Potential const& p) {
  for (int d = 1; d <= p.top_degree(); ++d)
    if (!is_superpotential(p.part(static_cast<std::size_t>(d)))) return false;
  return true;
}

Deformation relations_from_potential(Potential const& w, std::size_t n, std::size_t N,
                                     std::vector<std::string> names) {
  if (w.n() != n) fail(ErrorCode::DimensionMismatch, "potential over the wrong generator count");
  if (w.top_degree() != static_cast<int>(N + 1))
    fail(ErrorCode::InvalidArgument, "top part of the potential must have degree N+1");
  if (names.empty()) names = default_names(n);
  std::vector<FilteredElement> rel;
  std::vector<TensorElement> top;
  for (std::size_t i = 0; i < n; ++i) {
    FilteredElement p(n);
    for (std::size_t d = 1; d <= N + 1; ++d) p.add(contract_left(i, w.part(d)));
    top.push_back(p.part(N));
    rel.push_back(std::move(p));
  }
  HomogeneousAlgebra::create(names, N, top);
  return Deformation::from_relations(std::move(names), N, rel);
}

Vector psi_vector(Deformation const& u, Dim3Algebra const& a) {
  check_same_base(u, a);
  TensorElement psi = tail_right(u, a, 1) - tail_left(u, a, 1);
  auto k = relation_coordinates(a.base, psi);
  if (!k) fail(ErrorCode::DeformationIncompatible, "psi(z) is not in R");
  return *k;
}

AffineMap nakayama_deformed3(Deformation const& u, Dim3Algebra const& a, Dim3Options const& options) {
  check_same_base(u, a);
  std::size_t N = a.base.relation_degree();
  if (options.require_pbw) {
    bool ok = N == 2 ? bg_check(u, options.cap).holds : pbw_check(u, options.pbw_degree, N + 1, options.cap).holds;
    if (!ok) fail(ErrorCode::NotPBW, "the deformation is not PBW");
  }
  Vector k = psi_vector(u, a);
  Matrix q2inv = inverse(a.Q2);
  AffineMap m{a.Q1.transpose() * q2inv, k * q2inv};
  if (!preserves_span(m, u.deformed_relations()))
    fail(ErrorCode::AutomorphismCheckFailed, "chi does not preserve the deformed relations");
  return m;
}

std::vector<bool> compat_check(Deformation const& u, Dim3Algebra const& a) {
  check_same_base(u, a);
  std::vector<bool> out;
  for (std::size_t k = 1; k <= a.base.relation_degree(); ++k) out.push_back(tail_left(u, a, k) == tail_right(u, a, k));
  return out;
}

Potential build_potential_cy(Deformation const& u, Dim3Algebra const& a) {
  check_same_base(u, a);
  if (!cy_check3(a)) fail(ErrorCode::BaseNotCY, "Q1 differs from Q2^t");
  if (!compat_check(u, a).front()) fail(ErrorCode::NotCompatible, "(a_1 (x) 1)(z) differs from (1 (x) a_1)(z)");
  std::size_t n = a.base.n();
  std::size_t N = a.base.relation_degree();
  Potential w(a.z);
  for (std::size_t k = 1; k <= N; ++k) w.add(tail_left(u, a, k));
  if (!is_potential(w)) fail(ErrorCode::PotentialCheckFailed, "w is not a potential");
  std::vector<FilteredElement> derivs;
  for (std::size_t i = 0; i < n; ++i) {
    FilteredElement p(n);
    for (std::size_t d = 1; d <= N + 1; ++d) p.add(contract_left(i, w.part(d)));
    derivs.push_back(std::move(p));
  }
  if (filtered_span(derivs, n, N) != filtered_span(u.deformed_relations(), n, N))
    fail(ErrorCode::PotentialCheckFailed, "derivatives of w do not span the deformed relations");
  return w;
}

}  // namespace koszul
