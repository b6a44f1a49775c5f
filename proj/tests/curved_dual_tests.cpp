#include "doctest.h"
#include "koszul/curved_dual.hpp"
#include "koszul/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace koszul;
using namespace fixtures;
using oracles::ad_traces;
using oracles::transport;

namespace {

Deformation weyl() {
  return Deformation::from_relations(default_names(2), 2, {poly(2, {{{X, Y}, 1}, {{Y, X}, -1}, {{}, -1}})});
}

// U = T/(xy - yx - x - 1)
Deformation weyl_shifted() {
  return Deformation::from_relations(default_names(2), 2, {poly(2, {{{X, Y}, 1}, {{Y, X}, -1}, {{X}, -1}, {{}, -1}})});
}

std::vector<Deformation> lie_corpus() {
  return {Deformation::trivial(polynomial3()), heisenberg(), sl2(), so3(), non_unimodular(), non_unimodular_opposite(),
          central_extension()};
}

}  // namespace

TEST_CASE("curved dual of the Weyl algebra") {
  auto c = build_curved_dual(weyl(), 2);
  CHECK(c.gldim() == 2);
  CHECK(c.dual().dims() == std::vector<std::size_t>{1, 2, 1});
  CHECK(c.derivation(0).is_zero());
  CHECK(c.derivation(1).is_zero());
  // theta is the class of r -> a_2(r) = -1, with x*y* paired to xy - yx
  CHECK(c.curvature() == Vector{-1});
  CHECK(curvature_check(c));
  CHECK(derivation_check(c));
  CHECK(lambda_vector(c) == Vector{0, 0});
}

TEST_CASE("curved dual of the Heisenberg algebra") {
  auto c = build_curved_dual(heisenberg(), 3);
  CHECK(c.representatives(2) == std::vector<Word>{{X, Y}, {X, Z}, {Y, Z}});
  auto const& g = c.generator_images();
  // nu(xy - yx) = z, so delta(z*) pairs to 1 with r3 and to 0 elsewhere
  CHECK(g[0] == Vector{0, 0, 0});
  CHECK(g[1] == Vector{0, 0, 0});
  CHECK(g[2] == Vector{1, 0, 0});
  CHECK(c.derivation(1) == Matrix{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}});
  // delta(x*z*) = -x* x*y* = 0, delta(y*z*) = -y* x*y* = 0
  CHECK(c.derivation(2).is_zero());
  CHECK(c.curvature() == Vector{0, 0, 0});
  CHECK(curvature_check(c));
  CHECK(derivation_check(c));
  CHECK(lambda_vector(c) == Vector{0, 0, 0});
}

TEST_CASE("zero deformations have zero derivation and curvature") {
  auto c = build_curved_dual(Deformation::trivial(polynomial3()), 3);
  for (std::size_t m = 0; m < 3; ++m) CHECK(c.derivation(m).is_zero());
  CHECK(c.curvature() == Vector{0, 0, 0});
  CHECK(curvature_check(c));
}

TEST_CASE("curved dual preconditions") {
  CHECK_ERROR_CODE(build_curved_dual(down_up(Rational(2), Rational(-1), Rational(0)), 3), ErrorCode::WrongN);
  CHECK_ERROR_CODE(build_curved_dual(pseudo_bracket(), 3), ErrorCode::NotPBW);
  CHECK_ERROR_CODE(build_curved_dual(heisenberg(), 2), ErrorCode::NotFrobeniusDual);
  CHECK_ERROR_CODE(build_curved_dual(Deformation::trivial(free_algebra(2)), 1), ErrorCode::NotFrobeniusDual);
  CHECK_ERROR_CODE(build_curved_dual(heisenberg(), 4), ErrorCode::NotFrobeniusDual);
}

TEST_CASE("curvature fails once the Jacobi conditions fail") {
  CurvedDualOptions loose;
  loose.require_pbw = false;
  auto c = build_curved_dual(pseudo_bracket(), 3, loose);
  CHECK(derivation_check(c));
  CHECK_FALSE(curvature_check(c));
}

TEST_CASE("curvature and derivation laws on the PBW corpus") {
  auto corpus = lie_corpus();
  corpus.push_back(noncentral_theta());
  for (auto const& u : corpus) {
    auto c = build_curved_dual(u, 3);
    CHECK(curvature_check(c));
    CHECK(derivation_check(c));
  }
  for (auto const& u : {weyl(), weyl_shifted(), Deformation::trivial(polynomial2())}) {
    auto c = build_curved_dual(u, 2);
    CHECK(curvature_check(c));
    CHECK(derivation_check(c));
  }
}

TEST_CASE("general Nakayama automorphism in global dimension two") {
  auto plane = nakayama_deformation_general(Deformation::trivial(polynomial2()), 2);
  CHECK(plane.P == -Matrix::identity(2));
  CHECK(plane.map.is_identity());
  CHECK(nakayama_deformation_general(weyl(), 2).map.is_identity());

  auto quantum = nakayama_deformation_general(dim2(q_quantum2()).to_deformation(), 2);
  CHECK(quantum.map.linear == Matrix{{2, 0}, {0, Rational(1, 2)}});
  CHECK(quantum.map.constant == Vector{0, 0});

  auto jordan = nakayama_deformation_general(dim2(q_jordan()).to_deformation(), 2);
  CHECK(jordan.map.linear == Matrix{{1, -2}, {0, 1}});

  auto shifted = nakayama_deformation_general(weyl_shifted(), 2);
  CHECK(shifted.map.linear == Matrix::identity(2));
  CHECK(shifted.map.constant == Vector{0, -1});
  CHECK(preserves_span(shifted.map, weyl_shifted().deformed_relations()));
}

TEST_CASE("Nakayama automorphisms of enveloping algebras are x -> x + tr(ad x)") {
  for (auto const& u : lie_corpus()) {
    auto g = nakayama_deformation_general(u, 3);
    CHECK(g.map.linear == Matrix::identity(3));
    CHECK(g.map.constant == ad_traces(u));
  }
  // relations zx - xz - z, xy - yx + y: tr(ad x) = -2
  CHECK(nakayama_deformation_general(non_unimodular(), 3).map.constant == Vector{-2, 0, 0});
  CHECK(nakayama_deformation_general(non_unimodular_opposite(), 3).map.constant == Vector{2, 0, 0});

  Rng rng(41);
  auto corpus = lie_corpus();
  for (int t = 0; t < 20; ++t) {
    auto const& u0 = corpus[static_cast<std::size_t>(t) % corpus.size()];
    auto u = transport(u0, rng.invertible(3, -2, 2));
    REQUIRE(u.base() == polynomial3());
    auto g = nakayama_deformation_general(u, 3);
    CHECK(g.map.linear == Matrix::identity(3));
    CHECK(g.map.constant == ad_traces(u));
    CHECK(preserves_span(g.map, u.deformed_relations()));
    auto c = build_curved_dual(u, 3);
    CHECK(curvature_check(c));
    CHECK(derivation_check(c));
  }
}

TEST_CASE("rescaling the top class leaves the Nakayama map unchanged") {
  for (auto const& u : lie_corpus()) {
    auto base = nakayama_deformation_general(u, 3);
    for (Rational s : {Rational(2), Rational(-3, 7)}) {
      CurvedDualOptions o;
      o.varpi_scale = s;
      auto scaled = nakayama_deformation_general(u, 3, o);
      CHECK(scaled.map == base.map);
      CHECK(scaled.lambda == base.lambda);
    }
  }
}

TEST_CASE("Calabi-Yau check for augmented deformations") {
  CHECK(cy_check_augmented(heisenberg(), 3).cy);
  CHECK_FALSE(cy_check_augmented(non_unimodular(), 3).cy);
  CHECK_FALSE(cy_check_augmented(non_unimodular_opposite(), 3).cy);
  CHECK(cy_check_augmented(Deformation::trivial(polynomial3()), 3).cy);
  CHECK(cy_check_augmented(sl2(), 3).cy);
  CHECK(cy_check_augmented(Deformation::trivial(polynomial2()), 2).cy);
  CHECK_ERROR_CODE(cy_check_augmented(weyl(), 2), ErrorCode::NotAugmented);
  CHECK_ERROR_CODE(cy_check_augmented(dim2(q_quantum2()).to_deformation(), 2), ErrorCode::BaseNotCY);

  // the verdict agrees with the Nakayama map being the identity
  for (auto const& u : lie_corpus()) {
    if (!u.is_augmented()) continue;
    CHECK(cy_check_augmented(u, 3).cy == nakayama_deformation_general(u, 3).map.is_identity());
  }
}

TEST_CASE("central curvature and transfer") {
  auto w = theta_central_and_transfer(weyl(), 2);
  CHECK(w.central);
  REQUIRE(w.augmented);
  CHECK(*w.augmented == Deformation::trivial(polynomial2()));
  CHECK(w.nakayama_shared);
  REQUIRE(w.nakayama);
  CHECK(w.nakayama->is_identity());
  REQUIRE(w.augmented_cy);
  CHECK(*w.augmented_cy);
  REQUIRE(w.cy);
  CHECK(*w.cy);

  auto h = theta_central_and_transfer(heisenberg(), 3);
  CHECK(h.central);
  REQUIRE(h.augmented);
  CHECK(*h.augmented == heisenberg());

  auto ce = theta_central_and_transfer(central_extension(), 3);
  CHECK(ce.central);
  REQUIRE(ce.augmented);
  CHECK(ce.augmented->is_trivial());
  CHECK(ce.nakayama_shared);

  auto nc = theta_central_and_transfer(noncentral_theta(), 3);
  CHECK_FALSE(nc.central);
  CHECK_FALSE(nc.augmented);
  CHECK_FALSE(nc.cy);
  CHECK_FALSE(nc.caveat.empty());
}
