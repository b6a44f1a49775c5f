#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "koszul/matrix.hpp"
#include "koszul/tensor.hpp"

namespace koszul {

/// Map V -> V + k on generators: x_j |-> sum_i linear(i, j) x_i + constant[j].
/// In row-vector notation (x_1, ..., x_n) |-> (x_1, ..., x_n) L + c.
struct AffineMap {
  Matrix linear;
  Vector constant;

  static AffineMap identity(std::size_t n);

  std::size_t n() const { return linear.rows(); }
  bool is_identity() const;
  FilteredElement image_of_generator(std::size_t j) const;
  /// Image under the induced algebra endomorphism of T(V).
  FilteredElement apply(FilteredElement const& f) const;

  friend bool operator==(AffineMap const&, AffineMap const&) = default;
};

/// True if the image of every relation lies in the span of the relations
/// (compared as elements of T_{<= max degree}(V)).
bool preserves_span(AffineMap const& map, std::vector<FilteredElement> const& relations);

std::string to_string(AffineMap const& map, std::vector<std::string> const& names);

}  // namespace koszul
