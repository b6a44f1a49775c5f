#include "koszul/affine_map.hpp"

#include <algorithm>

#include "koszul/error.hpp"
#include "koszul/subspace.hpp"

namespace koszul {

AffineMap AffineMap::identity(std::size_t n) { return AffineMap{Matrix::identity(n), Vector(n)}; }

bool AffineMap::is_identity() const { return linear == Matrix::identity(n()) && is_zero(constant); }

FilteredElement AffineMap::image_of_generator(std::size_t j) const {
  std::size_t n = this->n();
  FilteredElement out = FilteredElement::scalar(n, constant.at(j));
  for (std::size_t i = 0; i < n; ++i)
    if (!linear(i, j).is_zero()) out.add(TensorElement::word(n, Word{static_cast<std::uint32_t>(i)}, linear(i, j)));
  return out;
}

FilteredElement AffineMap::apply(FilteredElement const& f) const {
  std::size_t n = this->n();
  if (!linear.is_square() || constant.size() != n || f.n() != n)
    fail(ErrorCode::DimensionMismatch, "affine map and element disagree on the generator count");
  std::vector<FilteredElement> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(image_of_generator(j));
  FilteredElement out(n);
  for (int d = 0; d <= f.top_degree(); ++d) {
    for (auto const& [w, c] : f.part(static_cast<std::size_t>(d)).terms()) {
      FilteredElement term = FilteredElement::scalar(n, c);
      for (auto letter : w) term = term * images[letter];
      out += term;
    }
  }
  return out;
}

bool preserves_span(AffineMap const& map, std::vector<FilteredElement> const& relations) {
  if (relations.empty()) return true;
  std::size_t n = map.n();
  int top = 0;
  for (auto const& r : relations) top = std::max(top, r.top_degree());
  std::vector<SparseVec> rows;
  for (auto const& r : relations) rows.push_back(r.flatten(static_cast<std::size_t>(top)));
  Subspace span = Subspace::span(filtered_offset(n, static_cast<std::size_t>(top) + 1), std::move(rows));
  for (auto const& r : relations) {
    FilteredElement image = map.apply(r);
    if (image.top_degree() > top) return false;
    if (!span.contains(image.flatten(static_cast<std::size_t>(top)))) return false;
  }
  return true;
}

std::string to_string(AffineMap const& map, std::vector<std::string> const& names) {
  std::string s;
  for (std::size_t j = 0; j < map.n(); ++j) {
    if (j) s += ", ";
    s += (j < names.size() ? names[j] : "x" + std::to_string(j)) + " -> " + to_string(map.image_of_generator(j), names);
  }
  return s;
}

}  // namespace koszul
