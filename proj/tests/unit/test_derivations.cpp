#include "doctest.h"

#include "../support/generators.hpp"
#include "helpers.hpp"
#include "lie2/derivations.hpp"
#include "lie2/errors.hpp"

using namespace lie2;
using namespace lie2::testing;

TEST_CASE("sder_spaces examples") {
  SUBCASE("abelian (1,0)") {
    DerivationSpaces s = sder_spaces(abelian(1));
    CHECK(s.sder0.dim() == 1);
    CHECK(s.sder1.dim() == 0);
    CHECK(s.sinn0.dim() == 0);
    CHECK(s.cen0.dim() == 1);
    CHECK(s.sout0.dim() == 1);
  }
  SUBCASE("r2") {
    DerivationSpaces s = sder_spaces(r2());
    CHECK(s.sder0.dim() == 2);
    CHECK(s.sinn0.dim() == 2);
    CHECK(s.sout0.dim() == 0);
    CHECK(s.cen0.dim() == 0);
    // Derivations are x -> b y, y -> c y: X0 = [[0,0],[b,c]].
    CHECK(s.sder0 == SubspaceBasis::span(4, {vec({0, 0, 1, 0}), vec({0, 0, 0, 1})}));
  }
  SUBCASE("d = id on (1,1)") {
    StrictLie2Algebra g(TwoTermComplex(1, 1, mat({{1}})));
    DerivationSpaces s = sder_spaces(g);
    CHECK(s.cen0.dim() == 1);
    CHECK(s.cen1.dim() == 1);
    CHECK(s.sinn0.dim() == 0);
    CHECK(s.sinn1.dim() == 0);
    CHECK(s.sder0 == SubspaceBasis::span(2, {vec({1, 1})}));
    CHECK(s.sder1.dim() == 1);
  }
}

TEST_CASE("sder_spaces rejects invalid algebras") {
  StrictLie2Algebra bad = heisenberg();
  bad.set_bracket00(1, 2, vec({0, 1, 0}));
  CHECK_THROWS_AS(sder_spaces(bad), MathError);
}

TEST_CASE("derivation_algebra examples") {
  StrictLie2Algebra d = derivation_algebra(abelian(1));
  CHECK(d.dim0() == 1);
  CHECK(d.dim1() == 0);

  StrictLie2Algebra g = r2();
  DerivationSpaces s = sder_spaces(g);
  StrictLie2Algebra dr = derivation_algebra(g, s);
  REQUIRE(dr.dim0() == 2);
  EndCoordinates ec(g.complex());
  Matrix a = ec.unpack_pair(s.sder0.vectors()[0]).x0;
  Matrix b = ec.unpack_pair(s.sder0.vectors()[1]).x0;
  Matrix c = commutator(a, b);
  Vector coords = s.sder0.coordinates_or_throw(ec.pack(Degree0Endo{c, Matrix(0, 0)}), "commutator");
  CHECK(dr.bracket00(0, 1) == coords);
}

TEST_CASE("derivation and outer algebras of random algebras") {
  Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    StrictLie2Algebra g = random_algebra(rng);
    DerivationSpaces s = sder_spaces(g);
    CHECK(s.sder0.contains(s.sinn0));
    CHECK(s.sder1.contains(s.sinn1));
    CHECK(s.sout0.dim() == s.sder0.dim() - s.sinn0.dim());
    CHECK(s.sout1.dim() == s.sder1.dim() - s.sinn1.dim());

    StrictLie2Algebra dg = derivation_algebra(g, s);
    CHECK(validate_algebra(dg).passed());
    CHECK(validate_homomorphism(adjoint_hom(g), g, dg).passed());
    CHECK(validate_algebra(outer_algebra(g, s)).passed());
    CHECK(check_inner_ideal_identities(g, s).passed());
  }
}

TEST_CASE("adjoint_hom examples") {
  StrictLie2Algebra a = abelian(1);
  StrictHom f = adjoint_hom(a);
  CHECK(f.f0.is_zero());

  StrictLie2Algebra g = r2();
  StrictHom ad = adjoint_hom(g);
  CHECK(rank(ad.f0) == 2);
}

TEST_CASE("center of a direct sum with an abelian factor") {
  StrictLie2Algebra g = direct_sum(r2(), abelian(1, 1));
  DerivationSpaces s = sder_spaces(g);
  CHECK(s.cen0 == SubspaceBasis::span(3, {vec({0, 0, 1})}));
  CHECK(s.cen1.dim() == 1);
}

TEST_CASE("inner ideal identities catch derivations of a different algebra") {
  // Derivations of the abelian algebra are all of gl(2); they are not
  // derivations of r2, and the identities detect it.
  StrictLie2Algebra g = r2();
  DerivationSpaces wrong = sder_spaces(abelian(2));
  CHECK_FALSE(check_inner_ideal_identities(g, wrong).passed());
}
