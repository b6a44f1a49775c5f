#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "koszul/sparse.hpp"

namespace koszul {

/// Word over generator indices; a basis element of V^{(x)m}.
using Word = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultAmbientCap = 50'000;

/// n^m, saturating at SIZE_MAX.
std::size_t power(std::size_t n, std::size_t m);

/// Throws CapacityExceeded when dim exceeds cap.
void check_capacity(std::size_t dim, std::size_t cap, char const* what);

/// Lexicographic rank of a word among words of the same length.
std::size_t word_index(Word const& w, std::size_t n);
Word unflatten(std::size_t index, std::size_t n, std::size_t length);

/// Homogeneous element of V^{(x)degree}, coefficients indexed by word rank.
class TensorElement {
 public:
  TensorElement() = default;
  TensorElement(std::size_t n, std::size_t degree);
  TensorElement(std::size_t n, std::size_t degree, SparseVec coeffs);

  static TensorElement word(std::size_t n, Word const& w, Rational c = Rational(1));
  static TensorElement from_terms(std::size_t n, std::size_t degree,
                                  std::vector<std::pair<Word, Rational>> const& terms);

  std::size_t n() const { return n_; }
  std::size_t degree() const { return degree_; }
  std::size_t ambient_dim() const { return power(n_, degree_); }
  SparseVec const& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(Word const& w) const;
  std::vector<std::pair<Word, Rational>> terms() const;

  TensorElement& operator+=(TensorElement const& o);
  TensorElement& operator-=(TensorElement const& o);
  friend TensorElement operator+(TensorElement a, TensorElement const& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, TensorElement const& b) { return a -= b; }
  friend TensorElement operator*(Rational const& s, TensorElement t);
  friend bool operator==(TensorElement const&, TensorElement const&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t degree_ = 0;
  SparseVec coeffs_;
};

/// a (x) b
TensorElement tensor(TensorElement const& a, TensorElement const& b);

/// [x_i^* t]: coefficient of u in the result is the coefficient of i.u in t.
TensorElement contract_left(std::size_t i, TensorElement const& t);
/// [t x_i^*]: coefficient of u in the result is the coefficient of u.i in t.
TensorElement contract_right(std::size_t i, TensorElement const& t);

/// Element of T(V) with homogeneous parts in degrees 0..top.
class FilteredElement {
 public:
  explicit FilteredElement(std::size_t n = 0) : n_(n) {}
  explicit FilteredElement(TensorElement const& t);

  static FilteredElement scalar(std::size_t n, Rational c);

  std::size_t n() const { return n_; }
  /// Highest degree with a nonzero part, or -1 for zero.
  int top_degree() const;
  bool is_zero() const { return top_degree() < 0; }
  TensorElement part(std::size_t degree) const;
  void add(TensorElement const& t);

  FilteredElement& operator+=(FilteredElement const& o);
  FilteredElement& operator-=(FilteredElement const& o);
  friend FilteredElement operator+(FilteredElement a, FilteredElement const& b) { return a += b; }
  friend FilteredElement operator-(FilteredElement a, FilteredElement const& b) { return a -= b; }
  friend FilteredElement operator*(Rational const& s, FilteredElement f);
  /// Concatenation product in T(V).
  friend FilteredElement operator*(FilteredElement const& a, FilteredElement const& b);
  friend bool operator==(FilteredElement const& a, FilteredElement const& b);

  /// Coordinates in T_{<=max_degree}(V), degree 0 first, then degree 1, ...
  SparseVec flatten(std::size_t max_degree) const;

 private:
  std::size_t n_;
  std::vector<TensorElement> parts_;
};

/// Offset of degree-d words in the ascending-degree layout of T_{<=D}(V).
std::size_t filtered_offset(std::size_t n, std::size_t degree);

std::string to_string(TensorElement const& t, std::vector<std::string> const& names);
std::string to_string(FilteredElement const& f, std::vector<std::string> const& names);

}  // namespace koszul
