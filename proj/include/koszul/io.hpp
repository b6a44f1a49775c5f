#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "koszul/homog.hpp"
#include "koszul/matrix.hpp"

namespace koszul {

/// Presentation file:
///
///   {
///     "generators": ["x", "y"],
///     "relation_degree": 2,
///     "relations": [{"terms": [{"word": ["x", "y"], "coeff": "1"},
///                              {"word": ["y", "x"], "coeff": "-1"}]}],
///     "deformation": [[{"word": [], "coeff": "-1"}]]
///   }
///
/// "deformation" is optional and holds one list of lower-degree terms per
/// relation. Coefficients are "p/q" strings or JSON integers.
struct AlgebraFile {
  std::vector<std::string> generators;
  std::size_t relation_degree = 2;
  std::vector<TensorElement> relations;
  /// Tail of each relation (parts in degrees < N); empty without a deformation.
  std::vector<FilteredElement> tails;

  bool has_deformation() const { return !tails.empty(); }
  friend bool operator==(AlgebraFile const&, AlgebraFile const&) = default;
};

/// Throws ParseError naming the offending field.
AlgebraFile parse_algebra_file(std::string_view text);
AlgebraFile read_algebra_file(std::string const& path);

nlohmann::ordered_json to_json(AlgebraFile const& f);
/// Canonical text: terms ordered by degree (descending) then word.
std::string serialize(AlgebraFile const& f);

HomogeneousAlgebra to_algebra(AlgebraFile const& f);
/// Zero tails when the file has no deformation section.
Deformation to_deformation(AlgebraFile const& f);
AlgebraFile from_algebra(HomogeneousAlgebra const& a);
AlgebraFile from_deformation(Deformation const& u);

nlohmann::ordered_json to_json(Matrix const& m);
nlohmann::ordered_json to_json(Vector const& v);

}  // namespace koszul
