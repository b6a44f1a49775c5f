#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koszul/matrix.hpp"
#include "koszul/subspace.hpp"
#include "koszul/tensor.hpp"

namespace koszul {

/// A = T(V)/(R) with R a subspace of V^{(x)N}.
///
/// The relation list keeps the order it was given in; every matrix read off a
/// presentation (Q1, Q2, tails, k) is relative to that order.
class HomogeneousAlgebra {
 public:
  HomogeneousAlgebra() = default;

  /// Relations must be linearly independent (DegenerateRelations otherwise).
  static HomogeneousAlgebra create(std::vector<std::string> names, std::size_t N,
                                   std::vector<TensorElement> relations);
  /// Uses the canonical basis rows of `r` as the relation list.
  static HomogeneousAlgebra from_subspace(std::vector<std::string> names, std::size_t N, Subspace const& r);
  static HomogeneousAlgebra free(std::vector<std::string> names, std::size_t N);

  std::size_t n() const { return names_.size(); }
  std::size_t relation_degree() const { return N_; }
  std::size_t relation_count() const { return relations_.size(); }
  std::vector<std::string> const& names() const { return names_; }
  std::vector<TensorElement> const& relations() const { return relations_; }
  TensorElement const& relation(std::size_t i) const { return relations_.at(i); }
  Subspace const& relation_space() const { return space_; }

  /// Same generators and same relation subspace.
  friend bool operator==(HomogeneousAlgebra const& a, HomogeneousAlgebra const& b) {
    return a.names_ == b.names_ && a.N_ == b.N_ && a.space_ == b.space_;
  }

 private:
  std::vector<std::string> names_;
  std::size_t N_ = 2;
  std::vector<TensorElement> relations_;
  Subspace space_;
};

/// Generator names x, y, z, w for n <= 4, x0, x1, ... otherwise.
std::vector<std::string> default_names(std::size_t n);

/// Filtered algebra U = T(V)/(r_i + a_1(r_i) + ... + a_N(r_i)).
class Deformation {
 public:
  Deformation() = default;
  /// tails[k-1] is the matrix of a_k, shape dim R x n^{N-k}.
  Deformation(HomogeneousAlgebra base, std::vector<Matrix> tails);

  static Deformation trivial(HomogeneousAlgebra base);
  /// Splits each element into its degree-N part (the base relation) and the
  /// lower-degree tail.
  static Deformation from_relations(std::vector<std::string> names, std::size_t N,
                                    std::vector<FilteredElement> const& relations);

  HomogeneousAlgebra const& base() const { return base_; }
  std::vector<Matrix> const& tails() const { return tails_; }
  /// Matrix of a_k, 1 <= k <= N.
  Matrix const& tail(std::size_t k) const { return tails_.at(k - 1); }
  /// a_k(r_i) as an element of V^{(x)N-k}.
  TensorElement tail_of(std::size_t k, std::size_t i) const;

  FilteredElement deformed_relation(std::size_t i) const;
  std::vector<FilteredElement> deformed_relations() const;

  bool is_trivial() const;
  /// a_N = 0, so the augmentation of T(V) descends to U.
  bool is_augmented() const { return tails_.back().is_zero(); }

  /// Copy with a_k replaced.
  Deformation with_tail(std::size_t k, Matrix m) const;

  friend bool operator==(Deformation const&, Deformation const&) = default;

 private:
  HomogeneousAlgebra base_;
  std::vector<Matrix> tails_;
};

/// Memoised graded components of A = T(V)/(R): ideal pieces I_d and the
/// representatives of A_d.
///
/// Representatives are the words that are not leading words of I_d, where the
/// leading word of an element is its largest word in lexicographic order.
class GradedQuotient {
 public:
  explicit GradedQuotient(HomogeneousAlgebra a, std::size_t cap = kDefaultAmbientCap);

  HomogeneousAlgebra const& algebra() const { return a_; }
  std::size_t n() const { return a_.n(); }

  Subspace ideal(std::size_t d);
  std::size_t ideal_dim(std::size_t d);
  std::size_t dim(std::size_t d);

  /// Word indices of the representatives of A_d, ascending.
  std::vector<std::size_t> const& representatives(std::size_t d);
  std::vector<Word> representative_words(std::size_t d);

  /// Coordinates of the class of t in A_{deg t} over the representatives.
  Vector normal_form(TensorElement const& t);
  /// Normal form of a single word given by its index.
  Vector normal_form_word(std::size_t degree, std::size_t index);
  /// Product of the p-th representative of A_i and the q-th of A_j.
  Vector multiply(std::size_t i, std::size_t p, std::size_t j, std::size_t q);

 private:
  struct Level {
    Echelon echelon{0};  // reversed coordinates: column n^d-1-w
    bool reduced = false;
    std::vector<SparseVec> rref;               // reversed coordinates
    std::vector<std::int32_t> row_of_leading;  // by word index
    std::vector<std::size_t> reps;
    std::vector<std::int32_t> rep_position;    // by word index
  };

  Level& level(std::size_t d);
  Level& reduced_level(std::size_t d);

  HomogeneousAlgebra a_;
  std::size_t cap_;
  std::vector<Level> levels_;
};

Subspace ideal_component(HomogeneousAlgebra const& a, std::size_t d, std::size_t cap = kDefaultAmbientCap);
std::vector<std::size_t> hilbert_function(HomogeneousAlgebra const& a, std::size_t d_max,
                                          std::size_t cap = kDefaultAmbientCap);

/// T(V^*)/(R^perp). Generator x becomes x*, and x* becomes x again.
HomogeneousAlgebra koszul_dual(HomogeneousAlgebra const& a);

/// Tensor degree in which C_{-m} lives: mN/2 for even m, (m-1)N/2 + 1 for odd m.
std::size_t koszul_degree(std::size_t m, std::size_t N);

/// C_{-m}: intersection of the placements V^i (x) R (x) V^j inside
/// V^{(x)koszul_degree(m)}; C_0 = k, C_{-1} = V.
Subspace coalgebra_component(HomogeneousAlgebra const& a, std::size_t m, std::size_t cap = kDefaultAmbientCap);

struct DualComponentBasis {
  /// Representative words of A^!_m (letters index the dual generators).
  std::vector<Word> representatives;
  /// products[i]: row p*dim(A^!_{m-i}) + q holds the coordinates of
  /// e_p * e_q in A^!_m, for e_p in A^!_i and e_q in A^!_{m-i}.
  std::vector<Matrix> products;
};

DualComponentBasis dual_component_basis(HomogeneousAlgebra const& a, std::size_t m,
                                        std::size_t cap = kDefaultAmbientCap);

/// Expansion c = sum_{ij} A_ij r_i (x) x_j of an element of R (x) V^{(x)s},
/// with A of shape dim R x n^s; nullopt if c is not in R (x) V^{(x)s}.
std::optional<Matrix> expand_right(HomogeneousAlgebra const& a, TensorElement const& c);
/// Expansion c = sum_{ij} B_ij x_i (x) r_j; B has shape n^s x dim R.
std::optional<Matrix> expand_left(HomogeneousAlgebra const& a, TensorElement const& c);
/// Coordinates of t in the relation basis, nullopt if t is not in R.
std::optional<Vector> relation_coordinates(HomogeneousAlgebra const& a, TensorElement const& t);

struct BGReport {
  bool holds = true;
  bool j1 = true;
  bool j2 = true;
  bool j3 = true;
  /// First failing condition ("J1", "J2", "J3"), empty if none.
  std::string failing_condition;
  /// Basis element of C_{-3} on which the condition fails.
  std::optional<TensorElement> witness;
  /// The nonzero defect: the element outside R for J1, the sum
  /// nu(nu(x)1 - 1(x)nu)(c) + (theta(x)1 - 1(x)theta)(c) for J2, the scalar
  /// theta(nu(x)1 - 1(x)nu)(c) for J3.
  std::optional<TensorElement> defect;
  std::size_t c3_dim = 0;
};

/// Jacobi-type conditions for N = 2 with nu = -a_1, theta = -a_2:
/// (J1) (nu(x)1 - 1(x)nu)(C_{-3}) in R,
/// (J2) nu(nu(x)1 - 1(x)nu) = -(theta(x)1 - 1(x)theta) on C_{-3},
/// (J3) theta(nu(x)1 - 1(x)nu) = 0 on C_{-3}.
BGReport bg_check(Deformation const& u, std::size_t cap = kDefaultAmbientCap);

struct PBWReport {
  bool holds = true;
  std::size_t verified_up_to = 0;
  std::size_t slack = 0;
  std::optional<std::size_t> first_failure;
  /// dim F_d U computed from the deformed relations, d = 0..d_max.
  std::vector<std::size_t> filtered_dims;
  /// sum_{e <= d} dim A_e.
  std::vector<std::size_t> expected_dims;
};

/// Bounded PBW test: the span W of all a.p.b in T_{<= d_max+slack}(V) must
/// meet each T_{<= d} in dimension sum_{e <= d} dim I_e.
PBWReport pbw_check(Deformation const& u, std::size_t d_max, std::size_t slack,
                    std::size_t cap = kDefaultAmbientCap);

struct GorensteinCandidateReport {
  std::size_t n = 0;
  std::size_t relation_count = 0;
  bool relation_count_matches = false;
  std::optional<std::size_t> c3_dim;
  bool c3_is_line = false;
  std::vector<std::int64_t> hilbert;
  std::vector<std::int64_t> expected;
  bool hilbert_matches = false;
  std::size_t verified_up_to = 0;
  bool passes() const { return relation_count_matches && c3_is_line && hilbert_matches; }
};

/// Necessary conditions for a global dimension 3 AS-Gorenstein candidate,
/// checked up to degree d_max.
GorensteinCandidateReport gorenstein_candidate_check(HomogeneousAlgebra const& a, std::size_t d_max,
                                                     std::size_t cap = kDefaultAmbientCap);

/// Coefficients of 1/(1 - n t + n t^N - t^{N+1}) up to t^{d_max}.
std::vector<std::int64_t> gorenstein3_series(std::size_t n, std::size_t N, std::size_t d_max);

}  // namespace koszul
