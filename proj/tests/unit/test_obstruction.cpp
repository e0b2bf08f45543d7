#include "doctest.h"

#include "../support/generators.hpp"
#include "helpers.hpp"
#include "lie2/errors.hpp"
#include "lie2/obstruction.hpp"

using namespace lie2;
using namespace lie2::testing;

namespace {

// h0 = r2 = {x, y}, h1 = {m, n}, d m = y, d n = 0, [x, m] = m. cen = (0, n).
StrictLie2Algebra r2_with_central_n() {
  StrictLie2Algebra h(TwoTermComplex(2, 2, mat({{0, 0}, {1, 0}})));
  h.set_bracket00(0, 1, vec({0, 1}));
  h.set_bracket01(0, 0, vec({1, 0}));
  return h;
}

// mu1(a): x -> c n, y -> m, for g = (0, a).
OuterHom degree1_outer_hom(const StrictLie2Algebra& h, const Rational& c) {
  DerivationSpaces hs = sder_spaces(h);
  EndCoordinates ec(h.complex());
  Matrix mu1 = mat({{0, 1}, {0, 0}});
  mu1(1, 0) = c;
  Vector v = ec.pack(Degree1Endo{mu1});
  OuterHom m{Matrix(hs.sout0.dim(), 0), Matrix(hs.sout1.dim(), 1)};
  Vector coords = hs.sout1.project(v);
  for (std::size_t k = 0; k < coords.size(); ++k) m.f1(k, 0) = coords[k];
  return m;
}

// The three lift equations, evaluated with ad taken directly from h's tables.
bool lift_equations_hold(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const ExtensionData& d) {
  const Matrix& dh = h.d();
  for (std::size_t al = 0; al < g.dim1(); ++al) {
    Degree0Endo mda = d.mu0(g.differential(unit_vector(g.dim1(), al)));
    Vector p = d.phi.column(al);
    if (!(dh * d.mu1[al] - mda.x0 == h.ad00(p))) return false;
    if (!(d.mu1[al] * dh - mda.x1 == h.ad01(p))) return false;
  }
  for (std::size_t i = 0; i < g.dim0(); ++i) {
    for (std::size_t j = 0; j < g.dim0(); ++j) {
      Degree0Endo mxy = d.mu0(g.bracket00(i, j));
      Vector w = d.omega_at(i, j);
      if (!(commutator(d.mu0_0[i], d.mu0_0[j]) - mxy.x0 == h.ad00(w))) return false;
      if (!(commutator(d.mu0_1[i], d.mu0_1[j]) - mxy.x1 == h.ad01(w))) return false;
    }
    for (std::size_t al = 0; al < g.dim1(); ++al) {
      Matrix lhs = d.mu1[al] * d.mu0_0[i] - d.mu0_1[i] * d.mu1[al] - d.mu1_of(-1 * g.bracket01(i, al));
      if (!(lhs == h.ad1(-1 * d.nu_at(i, al)))) return false;
    }
  }
  return true;
}

bool same_rep(const Representation2& a, const Representation2& b) {
  if (a.rho0.size() != b.rho0.size() || a.rho1.size() != b.rho1.size()) return false;
  for (std::size_t i = 0; i < a.rho0.size(); ++i) {
    if (!(a.rho0[i].x0 == b.rho0[i].x0) || !(a.rho0[i].x1 == b.rho0[i].x1)) return false;
  }
  for (std::size_t i = 0; i < a.rho1.size(); ++i) {
    if (!(a.rho1[i].d == b.rho1[i].d)) return false;
  }
  return true;
}

OuterHom zero_hom(const StrictLie2Algebra& g, const StrictLie2Algebra& h) {
  DerivationSpaces hs = sder_spaces(h);
  return {Matrix(hs.sout0.dim(), g.dim0()), Matrix(hs.sout1.dim(), g.dim1())};
}

}  // namespace

TEST_CASE("lift_outer_hom examples") {
  SUBCASE("zero outer homomorphism") {
    StrictLie2Algebra g = abelian(2, 1);
    StrictLie2Algebra h = r2_with_central_n();
    LiftedData l = lift_outer_hom(g, h, zero_hom(g, h));
    CHECK(l.data == ExtensionData(2, 1, 2, 2));
  }
  SUBCASE("complete h: unique phi, omega, nu") {
    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
      StrictLie2Algebra g = random_algebra(rng, 2, 1);
      LiftedData a = lift_outer_hom(g, r2(), zero_hom(g, r2()));
      LiftedData b = lift_outer_hom(g, r2(), zero_hom(g, r2()), {.section_seed = 5, .solution_seed = 6});
      CHECK(a.data == b.data);
      CHECK(lift_equations_hold(g, r2(), a.data));
    }
  }
  SUBCASE("abelian h: mu is the outer map itself") {
    StrictLie2Algebra g = r2();
    StrictLie2Algebra h = abelian(1);
    OuterHom m{mat({{1, 0}}), Matrix(0, 0)};
    LiftedData l = lift_outer_hom(g, h, m);
    CHECK(l.data.mu0_0[0] == mat({{1}}));
    CHECK(l.data.mu0_0[1] == mat({{0}}));
    CHECK(is_zero(l.data.omega_at(0, 1)));
  }
  SUBCASE("invalid outer homomorphism") {
    // [x, y] = y in r2 must map to 0 in the abelian SOut(Q); mu(y) = 1 breaks it.
    OuterHom bad{mat({{0, 1}}), Matrix(0, 0)};
    CHECK_THROWS_AS(lift_outer_hom(r2(), abelian(1), bad), MathError);
    CHECK_THROWS_AS(lift_outer_hom(r2(), abelian(1), OuterHom{mat({{0, 1, 0}}), Matrix(0, 0)}), InputError);
  }
}

TEST_CASE("lifts of random outer homomorphisms satisfy the lift equations") {
  Rng rng(301);
  for (int t = 0; t < 40; ++t) {
    Extension e = random_extension(rng);
    OuterHom m = induced_outer_hom(e.g, e.h, extract_data(e, random_section(e, rng)));
    for (std::uint64_t seed : {1u, 2u}) {
      LiftedData l = lift_outer_hom(e.g, e.h, m, {.section_seed = seed, .solution_seed = seed + 10});
      CHECK(lift_equations_hold(e.g, e.h, l.data));
      CHECK(induced_outer_hom(e.g, e.h, l.data).f0 == m.f0);
    }
  }
}

TEST_CASE("induced_center_rep") {
  CHECK(induced_center_rep(abelian(2), r2(), zero_hom(abelian(2), r2())).target.dim0 == 0);

  OuterHom m{mat({{3}}), Matrix(0, 0)};
  Representation2 rho = induced_center_rep(abelian(1), abelian(1), m);
  CHECK(rho.rho0[0].x0 == mat({{3}}));

  Rng rng(307);
  for (int t = 0; t < 30; ++t) {
    Extension e = random_extension(rng);
    OuterHom mb = induced_outer_hom(e.g, e.h, extract_data(e, canonical_section(e)));
    DerivationSpaces hs = sder_spaces(e.h);
    CenterComplex c = center_complex(e.h, hs);
    Representation2 a = restrict_to_center(e.g, c, lift_outer_hom(e.g, e.h, mb, {.section_seed = 1}).data);
    Representation2 b = restrict_to_center(e.g, c, lift_outer_hom(e.g, e.h, mb, {.section_seed = 2}).data);
    CHECK(same_rep(a, b));
    CHECK(same_rep(a, induced_center_rep(e.g, e.h, mb)));
  }
}

TEST_CASE("obstruction components agree with the generic coboundary of phi + omega + nu") {
  // Holds for arbitrary data, valid or not, so perturbed data are included.
  Rng rng(311);
  for (int t = 0; t < 60; ++t) {
    Extension e = random_extension(rng);
    ExtensionData d = extract_data(e, random_section(e, rng));
    CHECK(omega_cochain(e.g, e.h, d).is_zero());
    ExtensionData p = perturb_data(d, rng);
    Cochain lam = lambda_cochain(e.g, e.h, p);
    CHECK(omega_cochain(e.g, e.h, p) == coboundary(e.g, formal_representation(e.h, p), lam));
  }
}

TEST_CASE("obstruction_class examples") {
  SUBCASE("complete h") {
    ObstructionReport r = obstruction_class(abelian(2, 1), r2(), zero_hom(abelian(2, 1), r2()));
    CHECK(r.extensible);
    CHECK(r.h3_dim == 0);
    CHECK(r.omega.is_zero());
  }
  SUBCASE("zero outer homomorphism") {
    StrictLie2Algebra g = abelian(2, 1);
    ObstructionReport r = obstruction_class(g, r2_with_central_n(), zero_hom(g, r2_with_central_n()));
    CHECK(r.extensible);
    CHECK(r.omega.is_zero());
  }
  SUBCASE("(2,1) with [x,a] = a acting on a line") {
    StrictLie2Algebra g(TwoTermComplex(2, 1));
    g.set_bracket01(0, 0, vec({1}));
    OuterHom m{mat({{1, 0}}), Matrix(0, 1)};
    ObstructionReport r = obstruction_class(g, abelian(1), m);
    CHECK(coboundary(g, r.muhat, r.omega).is_zero());
    CHECK(r.extensible);
  }
  SUBCASE("a non-extensible degree-1 action") {
    StrictLie2Algebra g = abelian(0, 1);
    StrictLie2Algebra h = r2_with_central_n();
    ObstructionReport r = obstruction_class(g, h, degree1_outer_hom(h, Rational(1)));
    CHECK(r.lift.data.phi == mat({{1}, {0}}));
    CHECK(r.h3_dim == 1);
    CHECK_FALSE(r.extensible);
    // Omega(a, a) = 2 mu1(a) phi(a) = 2n.
    std::vector<std::size_t> aa{0, 0};
    CHECK(r.center.cen1.combine(r.omega.value(0, 2, 1, {}, aa)) == vec({0, 2}));
    CHECK_FALSE(is_extensible(g, h, degree1_outer_hom(h, Rational(1))).data.has_value());
    CHECK_THROWS_AS(classify(g, h, degree1_outer_hom(h, Rational(1))), MathError);

    Extensibility ok = is_extensible(g, h, degree1_outer_hom(h, Rational(0)));
    CHECK(ok.extensible);
    REQUIRE(ok.data.has_value());
    CHECK(validate_algebra(build_total(g, h, *ok.data).total).passed());
  }
}

TEST_CASE("obstruction is a cocycle whose class does not depend on choices") {
  Rng rng(313);
  int nontrivial = 0;
  for (int t = 0; t < 60; ++t) {
    StrictLie2Algebra g = random_algebra(rng, 2, 2);
    StrictLie2Algebra h = t % 2 ? r2_with_central_n() : random_algebra(rng, 3, 2);
    OuterHom m = random_outer_hom(g, h, rng);
    ObstructionReport a = obstruction_class(g, h, m);
    ObstructionReport b = obstruction_class(g, h, m, {.section_seed = 7 + t, .solution_seed = 9 + t});
    CHECK(coboundary(g, a.muhat, a.omega).is_zero());
    CHECK(coboundary(g, b.muhat, b.omega).is_zero());
    CHECK(same_rep(a.muhat, b.muhat));
    CHECK(a.class_coords == b.class_coords);
    if (!a.extensible) ++nontrivial;
  }
  CHECK(nontrivial > 0);
}

TEST_CASE("extensibility in both directions") {
  Rng rng(317);
  for (int t = 0; t < 40; ++t) {
    Extension e = random_extension(rng);
    OuterHom m = induced_outer_hom(e.g, e.h, extract_data(e, random_section(e, rng)));
    Extensibility x = is_extensible(e.g, e.h, m, {.section_seed = static_cast<std::uint64_t>(t)});
    REQUIRE(x.extensible);
    REQUIRE(x.data.has_value());
    Extension built = build_total(e.g, e.h, *x.data);
    CHECK(check_exactness(built).passed());
    OuterHom back = induced_outer_hom(e.g, e.h, *x.data);
    CHECK(back.f0 == m.f0);
    CHECK(back.f1 == m.f1);
  }
}

TEST_CASE("classification by the second cohomology") {
  SUBCASE("complete h has one extension") {
    Classification c = classify(abelian(2), r2(), zero_hom(abelian(2), r2()));
    CHECK(c.dim() == 0);
  }
  SUBCASE("abelian (1,0) by abelian (1,0)") {
    Classification c = classify(abelian(1), abelian(1), zero_hom(abelian(1), abelian(1)));
    CHECK(c.dim() == 0);
    CHECK(c.make_extension(Vector{}).total.dim0() == 2);
  }
  SUBCASE("abelian (2,0) by abelian (1,0)") {
    Classification c = classify(abelian(2), abelian(1), zero_hom(abelian(2), abelian(1)));
    REQUIRE(c.dim() == 1);
    Extension e0 = c.make_extension(vec({0}));
    Extension e1 = c.make_extension(vec({1}));
    CHECK(is_zero(e0.total.bracket00(0, 1)));
    CHECK_FALSE(is_zero(e1.total.bracket00(0, 1)));
    CHECK_FALSE(central_iso_witness(e0, e1).has_value());
    CHECK(central_iso_witness(e1, c.make_extension(vec({1}))).has_value());
  }
  SUBCASE("coboundary shifts give isomorphic extensions") {
    StrictLie2Algebra g = r2();
    OuterHom m{mat({{1, 0}}), Matrix(0, 0)};
    Classification c = classify(g, abelian(1), m);
    Rng rng(331);
    for (int t = 0; t < 5; ++t) {
      Cochain f = random_cochain(cochain_shape(g, c.muhat, 1), rng);
      Cochain df = coboundary(g, c.muhat, f);
      Vector coords(c.dim());
      Extension a = build_total(g, c.h, c.data_at(coords));
      Extension b = build_total(g, c.h, shift_data(c.data_at(coords), c.center, df, Rational(1)));
      CHECK(central_iso_witness(a, b).has_value());
    }
  }
}

TEST_CASE("complete h: extensions with the same outer map are isomorphic") {
  Rng rng(337);
  for (int t = 0; t < 15; ++t) {
    StrictLie2Algebra g = random_algebra(rng, 2, 1);
    Extension e = extension_in_random_basis(direct_sum(g, r2()), g.dim0(), g.dim1(), rng);
    Extension a = build_total(e.g, e.h, extract_data(e, random_section(e, rng)));
    Extension b = build_total(e.g, e.h, extract_data(e, random_section(e, rng)));
    auto w = iso_witness(a, b);
    REQUIRE(w.has_value());
    CHECK(check_iso_witness(a, b, *w).passed());
  }
}
