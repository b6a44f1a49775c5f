#include "koszul/curved_dual.hpp"

#include "koszul/error.hpp"

namespace koszul {

namespace {

Vector unit(std::size_t size, std::size_t k) {
  Vector v(size);
  v[k] = 1;
  return v;
}

Vector sub(Vector a, Vector const& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

}  // namespace

Vector CurvedDGDual::apply_derivation(std::size_t m, Vector const& x) const {
  Matrix const& D = derivation_.at(m);
  if (x.size() != D.rows()) fail(ErrorCode::DimensionMismatch, "coordinates of wrong length");
  return x * D;
}

CurvedDGDual build_curved_dual(Deformation const& u, std::size_t d, CurvedDualOptions const& options) {
  HomogeneousAlgebra const& a = u.base();
  if (a.relation_degree() != 2) fail(ErrorCode::WrongN, "the curved dual is implemented for N = 2");
  if (d < 1) fail(ErrorCode::InvalidArgument, "global dimension must be positive");
  if (options.require_pbw && !bg_check(u, options.cap).holds)
    fail(ErrorCode::NotPBW, "the deformation fails the Jacobi conditions");
  std::size_t n = a.n();
  GradedQuotient q(koszul_dual(a), options.cap);
  if (q.dim(d) != 1)
    fail(ErrorCode::NotFrobeniusDual, "dim A^!_" + std::to_string(d) + " = " + std::to_string(q.dim(d)) + ", not 1");
  for (std::size_t m = d + 1; m <= d + 2; ++m)
    if (q.dim(m) != 0) fail(ErrorCode::NotFrobeniusDual, "A^!_" + std::to_string(m) + " is nonzero");

  CurvedDGDual c;
  c.u_ = u;
  c.d_ = d;
  c.dual_ = GradedFiniteAlgebra::from_quotient(q, d);
  try {
    c.frobenius_ = frobenius_detect(c.dual_, options.varpi_scale);
  } catch (Error const& e) {
    if (e.code() != ErrorCode::NotFrobenius) throw;
    fail(ErrorCode::NotFrobeniusDual, e.message());
  }
  for (std::size_t m = 0; m <= d; ++m) c.reps_.push_back(q.representative_words(m));

  // Functionals on R become classes in A^!_2 through the pairing with the
  // representative words.
  std::size_t dr = a.relation_count();
  std::size_t d2 = d >= 2 ? q.dim(2) : 0;
  Matrix to_dual;
  if (d >= 2) {
    if (d2 != dr) fail(ErrorCode::NotFrobeniusDual, "dim A^!_2 differs from dim R");
    Matrix pi(d2, dr);
    for (std::size_t k = 0; k < d2; ++k)
      for (std::size_t j = 0; j < dr; ++j) pi(k, j) = a.relation(j).coeff(c.reps_[2][k]);
    to_dual = inverse(pi);
  }
  auto functional_class = [&](Vector const& f) { return d >= 2 ? f * to_dual : Vector{}; };

  for (std::size_t k = 0; k < n; ++k) {
    Vector f(dr);
    for (std::size_t j = 0; j < dr; ++j) f[j] = -u.tail(1)(j, k);
    c.images_.push_back(functional_class(f));
  }
  Vector t(dr);
  for (std::size_t j = 0; j < dr; ++j) t[j] = u.tail(2)(j, 0);
  c.theta_ = functional_class(t);

  std::vector<TensorElement> lifts;
  for (std::size_t k = 0; k < n; ++k) {
    TensorElement l(n, 2);
    for (std::size_t p = 0; p < d2; ++p)
      if (!c.images_[k][p].is_zero()) l += TensorElement::word(n, c.reps_[2][p], c.images_[k][p]);
    lifts.push_back(std::move(l));
  }

  for (std::size_t m = 0; m <= d; ++m) {
    std::size_t rows = q.dim(m);
    if (m == d) {
      c.derivation_.emplace_back(rows, 0);
      continue;
    }
    Matrix D(rows, q.dim(m + 1));
    for (std::size_t r = 0; r < rows; ++r) {
      Word const& w = c.reps_[m][r];
      TensorElement image(n, m + 1);
      for (std::size_t k = 0; k < w.size(); ++k) {
        Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        Word suffix(w.begin() + static_cast<std::ptrdiff_t>(k) + 1, w.end());
        TensorElement term = tensor(tensor(TensorElement::word(n, prefix), lifts[w[k]]), TensorElement::word(n, suffix));
        if (k % 2 == 0)
          image += term;
        else
          image -= term;
      }
      Vector v = q.normal_form(image);
      for (std::size_t s = 0; s < v.size(); ++s) D(r, s) = v[s];
    }
    c.derivation_.push_back(std::move(D));
  }
  return c;
}

bool curvature_check(CurvedDGDual const& c) {
  GradedFiniteAlgebra const& b = c.dual();
  std::size_t d = c.gldim();
  for (std::size_t m = 0; m + 2 <= d; ++m) {
    for (std::size_t a = 0; a < b.dim(m); ++a) {
      Vector e = unit(b.dim(m), a);
      Vector lhs = c.apply_derivation(m + 1, c.apply_derivation(m, e));
      Vector rhs = sub(b.multiply(2, c.curvature(), m, e), b.multiply(m, e, 2, c.curvature()));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool derivation_check(CurvedDGDual const& c) {
  GradedFiniteAlgebra const& b = c.dual();
  std::size_t d = c.gldim();
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t j = 0; i + j + 1 <= d; ++j) {
      for (std::size_t x = 0; x < b.dim(i); ++x) {
        for (std::size_t y = 0; y < b.dim(j); ++y) {
          Vector ex = unit(b.dim(i), x);
          Vector ey = unit(b.dim(j), y);
          Vector lhs = c.apply_derivation(i + j, b.multiply(i, ex, j, ey));
          Vector first = b.multiply(i + 1, c.apply_derivation(i, ex), j, ey);
          Vector second = b.multiply(i, ex, j + 1, c.apply_derivation(j, ey));
          Vector rhs = i % 2 == 0 ? first + second : sub(first, second);
          if (lhs != rhs) return false;
        }
      }
    }
  }
  return true;
}

Vector lambda_vector(CurvedDGDual const& c) {
  GradedFiniteAlgebra const& b = c.dual();
  std::size_t d = c.gldim();
  std::size_t n = c.deformation().base().n();
  if (d < 1 || b.dim(d - 1) != n)
    fail(ErrorCode::NotFrobeniusDual, "dim A^!_{d-1} differs from the number of generators");
  Rational inv = c.frobenius().varpi_scale.inverse();
  Matrix pair(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) pair(i, k) = inv * b.basis_product(1, i, d - 1, k)[0];
  Matrix w = inverse(pair);
  Vector lambda(n);
  for (std::size_t j = 0; j < n; ++j) lambda[j] = inv * c.apply_derivation(d - 1, w.col(j))[0];
  return lambda;
}

GeneralNakayama nakayama_deformation_general(Deformation const& u, std::size_t d, CurvedDualOptions const& options) {
  CurvedDGDual c = build_curved_dual(u, d, options);
  GeneralNakayama out;
  out.gldim = d;
  out.P = c.frobenius().nakayama.at(1);
  out.lambda = lambda_vector(c);
  Rational sign = d % 2 == 1 ? Rational(1) : Rational(-1);
  out.map = AffineMap{sign * inverse(out.P).transpose(), out.lambda};
  if (!preserves_span(out.map, u.deformed_relations()))
    fail(ErrorCode::AutomorphismCheckFailed, "computed map does not preserve the deformed relations");
  return out;
}

CYVerdict cy_check_augmented(Deformation const& u, std::size_t d, CurvedDualOptions const& options) {
  if (!u.is_augmented()) fail(ErrorCode::NotAugmented, "the deformation has a nonzero scalar tail");
  CurvedDGDual c = build_curved_dual(u, d, options);
  if (!is_graded_symmetric(c.frobenius()))
    fail(ErrorCode::BaseNotCY, "A^! is not graded symmetric, so the base is not Calabi-Yau");
  CYVerdict v;
  v.cy = c.derivation(d - 1).is_zero();
  v.reason = v.cy ? "delta vanishes on A^!_" + std::to_string(d - 1)
                  : "delta is nonzero on A^!_" + std::to_string(d - 1);
  return v;
}

ThetaTransferReport theta_central_and_transfer(Deformation const& u, std::size_t d, CurvedDualOptions const& options) {
  CurvedDGDual c = build_curved_dual(u, d, options);
  GradedFiniteAlgebra const& b = c.dual();
  ThetaTransferReport rep;
  rep.central = true;
  for (std::size_t m = 0; m + 2 <= d && rep.central; ++m) {
    for (std::size_t a = 0; a < b.dim(m); ++a) {
      Vector e = unit(b.dim(m), a);
      if (b.multiply(2, c.curvature(), m, e) != b.multiply(m, e, 2, c.curvature())) {
        rep.central = false;
        break;
      }
    }
  }
  if (!rep.central) {
    rep.caveat = "theta is not central in A^!; no transfer";
    return rep;
  }
  Deformation augmented = u.with_tail(2, Matrix(u.base().relation_count(), 1));
  GeneralNakayama nak = nakayama_deformation_general(u, d, options);
  rep.nakayama = nak.map;
  rep.nakayama_shared = preserves_span(nak.map, augmented.deformed_relations());
  try {
    rep.augmented_cy = cy_check_augmented(augmented, d, options).cy;
  } catch (Error const& e) {
    if (e.code() != ErrorCode::BaseNotCY) throw;
  }
  if (rep.augmented_cy && *rep.augmented_cy) rep.cy = true;
  rep.augmented = std::move(augmented);
  rep.caveat = "U Calabi-Yau implies U' Calabi-Yau only when A is a domain; that direction is not asserted";
  return rep;
}

}  // namespace koszul
