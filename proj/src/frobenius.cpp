#include "koszul/frobenius.hpp"

#include "koszul/error.hpp"

namespace koszul {

GradedFiniteAlgebra::GradedFiniteAlgebra(std::vector<std::size_t> dims, std::vector<std::vector<Matrix>> products,
                                         std::vector<std::vector<std::string>> labels)
    : dims_(std::move(dims)), products_(std::move(products)), labels_(std::move(labels)) {
  if (dims_.empty() || dims_[0] != 1) fail(ErrorCode::InvalidAlgebra, "degree 0 must be one-dimensional");
  std::size_t d = length();
  if (products_.size() != d + 1) fail(ErrorCode::InvalidAlgebra, "missing structure constants");
  for (std::size_t i = 0; i <= d; ++i) {
    if (products_[i].size() != d + 1 - i) fail(ErrorCode::InvalidAlgebra, "missing structure constants");
    for (std::size_t j = 0; i + j <= d; ++j) {
      Matrix const& m = products_[i][j];
      if (m.rows() != dims_[i] * dims_[j] || m.cols() != dims_[i + j])
        fail(ErrorCode::InvalidAlgebra, "structure constants have the wrong shape");
    }
  }
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t a = 0; a < dims_[i]; ++a) {
      Vector e(dims_[i]);
      e[a] = 1;
      if (basis_product(0, 0, i, a) != e || basis_product(i, a, 0, 0) != e)
        fail(ErrorCode::InvalidAlgebra, "unit does not act as the identity in degree " + std::to_string(i));
    }
  }
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t j = 1; i + j <= d; ++j) {
      for (std::size_t k = 1; i + j + k <= d; ++k) {
        for (std::size_t a = 0; a < dims_[i]; ++a) {
          for (std::size_t b = 0; b < dims_[j]; ++b) {
            Vector ab = basis_product(i, a, j, b);
            for (std::size_t c = 0; c < dims_[k]; ++c) {
              Vector ec(dims_[k]);
              ec[c] = 1;
              Vector ea(dims_[i]);
              ea[a] = 1;
              Vector left = multiply(i + j, ab, k, ec);
              Vector right = multiply(i, ea, j + k, basis_product(j, b, k, c));
              if (left != right)
                fail(ErrorCode::InvalidAlgebra, "associativity fails in degrees " + std::to_string(i) + "," +
                                                    std::to_string(j) + "," + std::to_string(k));
            }
          }
        }
      }
    }
  }
}

GradedFiniteAlgebra GradedFiniteAlgebra::from_quotient(GradedQuotient& q, std::size_t length) {
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::string>> labels;
  auto const& names = q.algebra().names();
  for (std::size_t i = 0; i <= length; ++i) {
    dims.push_back(q.dim(i));
    std::vector<std::string> l;
    for (auto const& w : q.representative_words(i)) {
      std::string s;
      for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "." : "") + names[w[k]];
      l.push_back(w.empty() ? "1" : s);
    }
    labels.push_back(std::move(l));
  }
  std::vector<std::vector<Matrix>> products(length + 1);
  for (std::size_t i = 0; i <= length; ++i) {
    for (std::size_t j = 0; i + j <= length; ++j) {
      Matrix m(dims[i] * dims[j], dims[i + j]);
      for (std::size_t a = 0; a < dims[i]; ++a) {
        for (std::size_t b = 0; b < dims[j]; ++b) {
          Vector v = q.multiply(i, a, j, b);
          for (std::size_t c = 0; c < v.size(); ++c) m(a * dims[j] + b, c) = v[c];
        }
      }
      products[i].push_back(std::move(m));
    }
  }
  return GradedFiniteAlgebra(std::move(dims), std::move(products), std::move(labels));
}

Vector GradedFiniteAlgebra::basis_product(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const {
  if (i + j > length()) return {};
  return products_[i][j].row(a * dims_[j] + b);
}

Vector GradedFiniteAlgebra::multiply(std::size_t i, Vector const& x, std::size_t j, Vector const& y) const {
  if (x.size() != dim(i) || y.size() != dim(j)) fail(ErrorCode::DimensionMismatch, "coordinates of wrong length");
  if (i + j > length()) return {};
  Vector out(dims_[i + j]);
  Matrix const& m = products_[i][j];
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < y.size(); ++b) {
      if (y[b].is_zero()) continue;
      Rational s = x[a] * y[b];
      std::size_t row = a * dims_[j] + b;
      for (std::size_t c = 0; c < out.size(); ++c)
        if (!m(row, c).is_zero()) out[c] += s * m(row, c);
    }
  }
  return out;
}

FrobeniusData frobenius_detect(GradedFiniteAlgebra const& b, Rational varpi_scale) {
  if (varpi_scale.is_zero()) fail(ErrorCode::InvalidArgument, "the top class must be nonzero");
  std::size_t d = b.length();
  if (b.dim(d) != 1)
    fail(ErrorCode::NotFrobenius, "top degree " + std::to_string(d) + " has dimension " + std::to_string(b.dim(d)));
  FrobeniusData f;
  f.length = d;
  f.varpi_scale = varpi_scale;
  Rational inv = varpi_scale.inverse();
  for (std::size_t i = 0; i <= d; ++i) {
    if (b.dim(i) != b.dim(d - i))
      fail(ErrorCode::NotFrobenius, "pairing in degree " + std::to_string(i) + " is not square");
    Matrix g(b.dim(i), b.dim(d - i));
    for (std::size_t x = 0; x < b.dim(i); ++x)
      for (std::size_t y = 0; y < b.dim(d - i); ++y) g(x, y) = inv * b.basis_product(i, x, d - i, y)[0];
    if (rank(g) != g.rows()) fail(ErrorCode::NotFrobenius, "pairing in degree " + std::to_string(i) + " is degenerate");
    f.pairing.push_back(std::move(g));
  }
  // <e_a, e_b> = <e_b, phi(e_a)> gives G_i = (G_{d-i} Phi_i)^t.
  for (std::size_t i = 0; i <= d; ++i) f.nakayama.push_back(inverse(f.pairing[d - i]) * f.pairing[i].transpose());
  return f;
}

bool is_graded_symmetric(FrobeniusData const& f) {
  std::size_t d = f.length;
  for (std::size_t i = 0; i <= d; ++i) {
    Rational sign = (i * (d - i)) % 2 == 0 ? Rational(1) : Rational(-1);
    if (f.pairing[i] != sign * f.pairing[d - i].transpose()) return false;
  }
  return true;
}

GradedFiniteAlgebra length2_from_matrix(Matrix const& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "M must be square");
  if (rank(m) != m.rows()) fail(ErrorCode::SingularMatrix, "M is singular");
  std::size_t n = m.rows();
  std::vector<std::size_t> dims{1, n, 1};
  std::vector<std::vector<Matrix>> products(3);
  products[0].push_back(Matrix::identity(1));
  products[0].push_back(Matrix::identity(n));
  products[0].push_back(Matrix::identity(1));
  products[1].push_back(Matrix::identity(n));
  Matrix xy(n * n, 1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) xy(a * n + b, 0) = m(a, b);
  products[1].push_back(std::move(xy));
  products[2].push_back(Matrix::identity(1));
  std::vector<std::string> gens;
  for (std::size_t a = 0; a < n; ++a) gens.push_back("x" + std::to_string(a + 1));
  return GradedFiniteAlgebra(std::move(dims), std::move(products), {{"1"}, gens, {"z"}});
}

Matrix length2_nakayama(Matrix const& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "M must be square");
  return inverse(m) * m.transpose();
}

}  // namespace koszul
