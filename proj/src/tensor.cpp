#include "koszul/tensor.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "koszul/error.hpp"

namespace koszul {

std::size_t power(std::size_t n, std::size_t m) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (n != 0 && out > std::numeric_limits<std::size_t>::max() / n)
      return std::numeric_limits<std::size_t>::max();
    out *= n;
  }
  return out;
}

void check_capacity(std::size_t dim, std::size_t cap, char const* what) {
  if (dim > cap)
    fail(ErrorCode::CapacityExceeded,
         std::string(what) + " needs " + std::to_string(dim) + " columns, cap is " + std::to_string(cap));
}

std::size_t word_index(Word const& w, std::size_t n) {
  std::size_t idx = 0;
  for (auto letter : w) {
    if (letter >= n) fail(ErrorCode::InvalidArgument, "letter outside generator range");
    idx = idx * n + letter;
  }
  return idx;
}

Word unflatten(std::size_t index, std::size_t n, std::size_t length) {
  Word w(length);
  for (std::size_t k = length; k-- > 0;) {
    w[k] = static_cast<std::uint32_t>(index % n);
    index /= n;
  }
  return w;
}

TensorElement::TensorElement(std::size_t n, std::size_t degree) : n_(n), degree_(degree) {}

TensorElement::TensorElement(std::size_t n, std::size_t degree, SparseVec coeffs)
    : n_(n), degree_(degree), coeffs_(std::move(coeffs)) {
  std::size_t dim = power(n, degree);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].first >= dim || (i > 0 && coeffs_[i].first <= coeffs_[i - 1].first) ||
        coeffs_[i].second.is_zero())
      fail(ErrorCode::InvalidArgument, "malformed tensor coefficients");
  }
}

TensorElement TensorElement::word(std::size_t n, Word const& w, Rational c) {
  TensorElement t(n, w.size());
  if (!c.is_zero()) t.coeffs_.emplace_back(word_index(w, n), std::move(c));
  return t;
}

TensorElement TensorElement::from_terms(std::size_t n, std::size_t degree,
                                        std::vector<std::pair<Word, Rational>> const& terms) {
  std::map<std::size_t, Rational> acc;
  for (auto const& [w, c] : terms) {
    if (w.size() != degree) fail(ErrorCode::InvalidArgument, "term degree mismatch");
    acc[word_index(w, n)] += c;
  }
  SparseVec v;
  for (auto& [i, c] : acc)
    if (!c.is_zero()) v.emplace_back(i, c);
  return TensorElement(n, degree, std::move(v));
}

Rational TensorElement::coeff(Word const& w) const {
  if (w.size() != degree_) return Rational{};
  return coefficient(coeffs_, word_index(w, n_));
}

std::vector<std::pair<Word, Rational>> TensorElement::terms() const {
  std::vector<std::pair<Word, Rational>> out;
  out.reserve(coeffs_.size());
  for (auto const& [i, c] : coeffs_) out.emplace_back(unflatten(i, n_, degree_), c);
  return out;
}

TensorElement& TensorElement::operator+=(TensorElement const& o) {
  if (o.n_ != n_ || o.degree_ != degree_) fail(ErrorCode::DimensionMismatch, "tensor sum shape");
  axpy(coeffs_, Rational(1), o.coeffs_);
  return *this;
}

TensorElement& TensorElement::operator-=(TensorElement const& o) {
  if (o.n_ != n_ || o.degree_ != degree_) fail(ErrorCode::DimensionMismatch, "tensor difference shape");
  axpy(coeffs_, Rational(-1), o.coeffs_);
  return *this;
}

TensorElement operator*(Rational const& s, TensorElement t) {
  scale(t.coeffs_, s);
  return t;
}

TensorElement tensor(TensorElement const& a, TensorElement const& b) {
  if (a.n() != b.n()) fail(ErrorCode::DimensionMismatch, "tensor product over different V");
  std::size_t stride = power(b.n(), b.degree());
  SparseVec v;
  v.reserve(a.coeffs().size() * b.coeffs().size());
  for (auto const& [i, x] : a.coeffs())
    for (auto const& [j, y] : b.coeffs()) v.emplace_back(i * stride + j, x * y);
  return TensorElement(a.n(), a.degree() + b.degree(), std::move(v));
}

TensorElement contract_left(std::size_t i, TensorElement const& t) {
  if (t.degree() == 0) fail(ErrorCode::InvalidArgument, "contraction of a degree-0 tensor");
  if (i >= t.n()) fail(ErrorCode::InvalidArgument, "dual generator out of range");
  std::size_t stride = power(t.n(), t.degree() - 1);
  SparseVec v;
  for (auto const& [idx, c] : t.coeffs())
    if (idx / stride == i) v.emplace_back(idx % stride, c);
  return TensorElement(t.n(), t.degree() - 1, std::move(v));
}

TensorElement contract_right(std::size_t i, TensorElement const& t) {
  if (t.degree() == 0) fail(ErrorCode::InvalidArgument, "contraction of a degree-0 tensor");
  if (i >= t.n()) fail(ErrorCode::InvalidArgument, "dual generator out of range");
  SparseVec v;
  for (auto const& [idx, c] : t.coeffs())
    if (idx % t.n() == i) v.emplace_back(idx / t.n(), c);
  return TensorElement(t.n(), t.degree() - 1, std::move(v));
}

FilteredElement::FilteredElement(TensorElement const& t) : n_(t.n()) { add(t); }

FilteredElement FilteredElement::scalar(std::size_t n, Rational c) {
  FilteredElement f(n);
  f.add(TensorElement::word(n, Word{}, std::move(c)));
  return f;
}

int FilteredElement::top_degree() const {
  for (std::size_t d = parts_.size(); d-- > 0;)
    if (!parts_[d].is_zero()) return static_cast<int>(d);
  return -1;
}

TensorElement FilteredElement::part(std::size_t degree) const {
  if (degree < parts_.size()) return parts_[degree];
  return TensorElement(n_, degree);
}

void FilteredElement::add(TensorElement const& t) {
  if (t.n() != n_) fail(ErrorCode::DimensionMismatch, "filtered element over different V");
  while (parts_.size() <= t.degree()) parts_.emplace_back(n_, parts_.size());
  parts_[t.degree()] += t;
}

FilteredElement& FilteredElement::operator+=(FilteredElement const& o) {
  for (auto const& p : o.parts_) add(p);
  return *this;
}

FilteredElement& FilteredElement::operator-=(FilteredElement const& o) {
  for (auto const& p : o.parts_) add(Rational(-1) * p);
  return *this;
}

FilteredElement operator*(Rational const& s, FilteredElement f) {
  for (auto& p : f.parts_) p = s * p;
  return f;
}

FilteredElement operator*(FilteredElement const& a, FilteredElement const& b) {
  FilteredElement out(a.n_);
  for (auto const& x : a.parts_) {
    if (x.is_zero()) continue;
    for (auto const& y : b.parts_) {
      if (!y.is_zero()) out.add(tensor(x, y));
    }
  }
  return out;
}

bool operator==(FilteredElement const& a, FilteredElement const& b) {
  if (a.n_ != b.n_) return false;
  std::size_t top = std::max(a.parts_.size(), b.parts_.size());
  for (std::size_t d = 0; d < top; ++d)
    if (a.part(d) != b.part(d)) return false;
  return true;
}

std::size_t filtered_offset(std::size_t n, std::size_t degree) {
  std::size_t off = 0;
  for (std::size_t e = 0; e < degree; ++e) off += power(n, e);
  return off;
}

SparseVec FilteredElement::flatten(std::size_t max_degree) const {
  if (top_degree() > static_cast<int>(max_degree))
    fail(ErrorCode::InvalidArgument, "element exceeds the flattening degree");
  SparseVec out;
  for (std::size_t d = 0; d < parts_.size(); ++d) {
    std::size_t off = filtered_offset(n_, d);
    for (auto const& [i, c] : parts_[d].coeffs()) out.emplace_back(off + i, c);
  }
  return out;
}

namespace {

std::string word_text(Word const& w, std::vector<std::string> const& names) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += '.';
    s += w[k] < names.size() ? names[w[k]] : "x" + std::to_string(w[k]);
  }
  return s;
}

void append_terms(std::string& s, TensorElement const& t, std::vector<std::string> const& names) {
  for (auto const& [w, c] : t.terms()) {
    bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (!mag.is_one() || w.empty()) {
      s += mag.str();
      if (!w.empty()) s += " ";
    }
    if (!w.empty()) s += word_text(w, names);
  }
}

}  // namespace

std::string to_string(TensorElement const& t, std::vector<std::string> const& names) {
  std::string s;
  append_terms(s, t, names);
  return s.empty() ? "0" : s;
}

std::string to_string(FilteredElement const& f, std::vector<std::string> const& names) {
  std::string s;
  for (int d = f.top_degree(); d >= 0; --d) append_terms(s, f.part(static_cast<std::size_t>(d)), names);
  return s.empty() ? "0" : s;
}

}  // namespace koszul
