#include "doctest.h"

#include <algorithm>

#include "../support/generators.hpp"
#include "helpers.hpp"
#include "lie2/cohomology.hpp"
#include "lie2/derivations.hpp"

using namespace lie2;
using namespace lie2::testing;

namespace {

StrictLie2Algebra xa_example() {
  StrictLie2Algebra g(TwoTermComplex(2, 1));
  g.set_bracket01(0, 0, vec({1}));
  return g;
}

std::vector<std::tuple<int, int, int>> keys(const std::vector<ComponentDim>& cs) {
  std::vector<std::tuple<int, int, int>> out;
  for (const auto& c : cs) out.emplace_back(c.p, c.q, c.s);
  return out;
}

}  // namespace

TEST_CASE("cochain_space component lists") {
  StrictLie2Algebra g = xa_example();
  Representation2 ad = adjoint_representation(g);
  auto c0 = cochain_space(g, ad, 0);
  REQUIRE(c0.size() == 1);
  CHECK(keys(c0) == std::vector<std::tuple<int, int, int>>{{0, 0, 0}});
  CHECK(c0[0].dim == 2);

  using K = std::vector<std::tuple<int, int, int>>;
  CHECK(keys(cochain_space(g, ad, 1)) == K{{0, 1, 1}, {1, 0, 0}});
  CHECK(keys(cochain_space(g, ad, 2)) == K{{0, 1, 0}, {1, 1, 1}, {2, 0, 0}});
  CHECK(keys(cochain_space(g, ad, 4)) == K{{0, 2, 0}, {1, 2, 1}, {2, 1, 0}, {3, 1, 1}, {4, 0, 0}});

  auto c3 = cochain_space(g, ad, 3);
  CHECK(keys(c3) == K{{0, 2, 1}, {1, 1, 0}, {2, 1, 1}, {3, 0, 0}});
  std::size_t total = 0;
  for (const auto& c : c3) total += c.dim;
  CHECK(c3[0].dim == 1);  // sym^2 g1 -> g1
  CHECK(c3[1].dim == 4);  // g0 (x) g1 -> g0
  CHECK(c3[2].dim == 1);  // wedge^2 g0 (x) g1 -> g1
  CHECK(c3[3].dim == 0);  // wedge^3 g0 -> g0
  CHECK(total == 6);

  CHECK_THROWS(cochain_space(g, ad, 5));
}

TEST_CASE("cochain evaluation on permuted arguments") {
  Rng rng(9);
  ShapePtr sh = make_shape(4, 3, 2, 2, 4);
  Cochain f = random_cochain(sh, rng);
  // (2,1,0) component in degree 4: antisymmetric in x, symmetric in a.
  std::vector<std::size_t> xs{3, 1}, xs_sorted{1, 3};
  std::vector<std::size_t> as{2};
  CHECK(f.value(2, 1, 0, xs, as) == -1 * f.value(2, 1, 0, xs_sorted, as));
  std::vector<std::size_t> rep{2, 2};
  CHECK(is_zero(f.value(2, 1, 0, rep, as)));
  // (0,2,0): symmetric in the two g1 slots.
  std::vector<std::size_t> ab{0, 2}, ba{2, 0};
  CHECK(f.value(0, 2, 0, {}, ab) == f.value(0, 2, 0, {}, ba));
  // (4,0,0) with a 3-cycle (even) and a transposition (odd).
  std::vector<std::size_t> s0{0, 1, 2, 3}, s1{1, 2, 0, 3}, s2{1, 0, 2, 3};
  CHECK(f.value(4, 0, 0, s1, {}) == f.value(4, 0, 0, s0, {}));
  CHECK(f.value(4, 0, 0, s2, {}) == -1 * f.value(4, 0, 0, s0, {}));
}

TEST_CASE("coboundary of zero and of trivial data vanishes") {
  Rng rng(4);
  StrictLie2Algebra g = abelian(2, 2);
  Representation2 triv = trivial_representation(g, TwoTermComplex(2, 1));
  for (int i = 0; i <= 3; ++i) {
    ShapePtr sh = cochain_shape(g, triv, i);
    CHECK(coboundary(g, triv, Cochain(sh)).is_zero());
    CHECK(coboundary(g, triv, random_cochain(sh, rng)).is_zero());
  }
}

TEST_CASE("coboundary of the identity on the (2,1) example") {
  StrictLie2Algebra g = xa_example();
  Representation2 ad = adjoint_representation(g);
  ShapePtr sh = cochain_shape(g, ad, 1);
  Cochain id = degree1_cochain(sh, Matrix::identity(2), Matrix::identity(1));
  Cochain df = coboundary(g, ad, id);
  CHECK(is_zero(df.value(0, 1, 0, {}, std::vector<std::size_t>{0})));
  std::vector<std::size_t> xy{0, 1};
  CHECK(is_zero(df.value(2, 0, 0, xy, {})));
  std::vector<std::size_t> x{0}, y{1}, a{0};
  CHECK(df.value(1, 1, 1, x, a) == vec({1}));
  CHECK(is_zero(df.value(1, 1, 1, y, a)));
}

TEST_CASE("D o D = 0 on random algebras and representations") {
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    StrictLie2Algebra g = random_algebra(rng);
    Representation2 rho = random_representation(g, rng);
    REQUIRE(validate_representation(g, rho).passed());
    for (int i = 0; i <= 2; ++i) {
      Cochain f = random_cochain(cochain_shape(g, rho, i), rng);
      CHECK(coboundary(g, rho, coboundary(g, rho, f)).is_zero());
    }
  }
}

TEST_CASE("D o D fails for an invalid representation") {
  // r2 acting on a line by x -> 1, y -> 1 is not a homomorphism ([x,y] = y
  // must act by 0), and D o D detects it on C^0.
  StrictLie2Algebra g = r2();
  Representation2 rho = trivial_representation(g, TwoTermComplex(1, 0));
  rho.rho0[0].x0 = mat({{1}});
  rho.rho0[1].x0 = mat({{1}});
  CHECK_FALSE(validate_representation(g, rho).passed());
  Cochain f(cochain_shape(g, rho, 0), vec({1}));
  CHECK_FALSE(coboundary(g, rho, coboundary(g, rho, f)).is_zero());
}

TEST_CASE("cohomology_basis examples") {
  StrictLie2Algebra a = abelian(1);
  Representation2 zero = trivial_representation(a, TwoTermComplex(0, 0));
  for (int i = 0; i <= 3; ++i) CHECK(cohomology_basis(a, zero, i).betti == 0);

  Representation2 ad = adjoint_representation(a);
  CHECK(cohomology_basis(a, ad, 0).betti == 1);
  CHECK(cohomology_basis(a, ad, 1).betti == 1);

  StrictLie2Algebra g = r2();
  Representation2 adg = adjoint_representation(g);
  CHECK(cohomology_basis(g, adg, 0).betti == 0);
  CHECK(cohomology_basis(g, adg, 1).betti == 0);
}

TEST_CASE("H0 and H1 of the adjoint representation match center and outer derivations") {
  Rng rng(41);
  for (int t = 0; t < 30; ++t) {
    StrictLie2Algebra g = random_algebra(rng);
    DerivationSpaces s = sder_spaces(g);
    Representation2 ad = adjoint_representation(g);

    CohomologyData h0 = cohomology_basis(g, ad, 0);
    CHECK(h0.betti == s.cen0.dim());
    CHECK(h0.cocycles == s.cen0);

    CohomologyData h1 = cohomology_basis(g, ad, 1);
    CHECK(h1.betti == s.sout0.dim());
    EndCoordinates ec(g.complex());
    auto to_pair = [&](const Vector& v) {
      auto [x0, x1] = degree1_parts(Cochain(h1.shape, v));
      return ec.pack(Degree0Endo{x0, x1});
    };
    std::vector<Vector> z, b;
    for (const auto& v : h1.cocycles.vectors()) z.push_back(to_pair(v));
    for (const auto& v : h1.coboundaries.vectors()) b.push_back(to_pair(v));
    CHECK(SubspaceBasis::span(ec.pair_dim(), z) == s.sder0);
    CHECK(SubspaceBasis::span(ec.pair_dim(), b) == s.sinn0);
  }
}

TEST_CASE("class_coordinates") {
  Rng rng(43);
  StrictLie2Algebra g = random_algebra(rng);
  StrictLie2Algebra xa = xa_example();
  for (const auto& alg : {g, xa}) {
    Representation2 ad = adjoint_representation(alg);
    for (int i = 1; i <= 3; ++i) {
      CohomologyData h = cohomology_basis(alg, ad, i);
      Cochain f = random_cochain(cochain_shape(alg, ad, i - 1), rng);
      auto c = class_coordinates(h, coboundary(alg, ad, f));
      REQUIRE(c.has_value());
      CHECK(is_zero(*c));
      for (std::size_t k = 0; k < h.betti; ++k) CHECK(*class_coordinates(h, h.reps[k]) == unit_vector(h.betti, k));
    }
  }
  Representation2 ad = adjoint_representation(xa);
  Cochain z = random_cochain(cochain_shape(xa, ad, 2), rng);
  while (coboundary(xa, ad, z).is_zero()) z = random_cochain(cochain_shape(xa, ad, 2), rng);
  CHECK_FALSE(class_coordinates(xa, ad, z).has_value());
}
