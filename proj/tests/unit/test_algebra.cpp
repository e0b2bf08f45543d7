#include "doctest.h"

#include "../support/generators.hpp"
#include "helpers.hpp"
#include "lie2/algebra.hpp"

using namespace lie2;
using namespace lie2::testing;

namespace {

// g0 = {x, y}, g1 = {a}, d = 0, [x, a] = a.
StrictLie2Algebra xa_example() {
  StrictLie2Algebra g(TwoTermComplex(2, 1));
  g.set_bracket01(0, 0, vec({1}));
  return g;
}

// Jacobi on g0 and the two mixed identities, evaluated directly from the
// tables on all basis triples.
bool axioms_hold_by_hand(const StrictLie2Algebra& g) {
  const std::size_t n0 = g.dim0(), n1 = g.dim1();
  auto e0 = [&](std::size_t i) { return unit_vector(n0, i); };
  auto e1 = [&](std::size_t i) { return unit_vector(n1, i); };
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = 0; j < n0; ++j) {
      if (!(g.bracket00(i, j) == Vector(-1 * Vector(g.bracket00(j, i))))) return false;
      for (std::size_t k = 0; k < n0; ++k) {
        Vector jac = g.bracket(g.bracket(e0(i), e0(j)), e0(k)) + g.bracket(g.bracket(e0(j), e0(k)), e0(i)) +
                     g.bracket(g.bracket(e0(k), e0(i)), e0(j));
        if (!is_zero(jac)) return false;
      }
      for (std::size_t a = 0; a < n1; ++a) {
        Vector lhs = g.bracket_mixed(g.bracket(e0(i), e0(j)), e1(a));
        Vector rhs = g.bracket_mixed(e0(i), g.bracket_mixed(e0(j), e1(a))) -
                     g.bracket_mixed(e0(j), g.bracket_mixed(e0(i), e1(a)));
        if (!(lhs == rhs)) return false;
      }
    }
    for (std::size_t a = 0; a < n1; ++a) {
      if (!(g.differential(g.bracket_mixed(e0(i), e1(a))) == g.bracket(e0(i), g.differential(e1(a))))) return false;
    }
  }
  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t b = 0; b < n1; ++b) {
      Vector lhs = g.bracket_mixed(g.differential(e1(a)), e1(b));
      Vector rhs = -1 * g.bracket_mixed(g.differential(e1(b)), e1(a));
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("validate_algebra examples") {
  CHECK(validate_algebra(abelian(1)).passed());
  CHECK(validate_algebra(xa_example()).passed());

  StrictLie2Algebra bad = heisenberg();
  bad.set_bracket00(1, 2, vec({0, 1, 0}));  // [y, z] = y breaks Jacobi on (x, y, z)
  ValidationReport r = validate_algebra(bad);
  CHECK_FALSE(r.at("(c)").passed);
  CHECK(r.failing() == std::vector<std::string>{"(c)"});
  CHECK(r.at("(c)").witness.find("e0") != std::string::npos);
}

TEST_CASE("validate_algebra flags a broken skew table") {
  StrictLie2Algebra g = r2();
  g.set_bracket00_entry(1, 0, vec({0, 1}));  // should be -y
  CHECK_FALSE(validate_algebra(g).at("antisym").passed);
}

TEST_CASE("generated algebras are valid and agree with a direct axiom check") {
  Rng rng(101);
  for (int t = 0; t < 60; ++t) {
    StrictLie2Algebra g = random_algebra(rng);
    CHECK(axioms_hold_by_hand(g));
    CHECK(validate_algebra(g).passed());
    StrictLie2Algebra h = perturb(g, rng);
    CHECK(validate_algebra(h).passed() == axioms_hold_by_hand(h));
  }
}

TEST_CASE("mixed bracket storage convention") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    StrictLie2Algebra g = random_algebra(rng);
    for (std::size_t i = 0; i < g.dim0(); ++i) {
      for (std::size_t a = 0; a < g.dim1(); ++a) {
        // ad1(a) x = [a, x] = -[x, a]
        CHECK(g.ad1(unit_vector(g.dim1(), a)).column(i) == -1 * g.bracket01(i, a));
      }
    }
  }
}

TEST_CASE("validate_homomorphism examples") {
  StrictLie2Algebra g(TwoTermComplex(1, 1, mat({{1}})));  // d(a) = x
  CHECK(validate_homomorphism({Matrix::identity(1), Matrix::identity(1)}, g, g).passed());
  Rng rng(2);
  StrictLie2Algebra a = random_algebra(rng), b = random_algebra(rng);
  CHECK(validate_homomorphism({Matrix::identity(a.dim0()), Matrix::identity(a.dim1())}, a, a).passed());
  CHECK(validate_homomorphism({Matrix(b.dim0(), a.dim0()), Matrix(b.dim1(), a.dim1())}, a, b).passed());
  ValidationReport r = validate_homomorphism({Matrix::identity(1), 2 * Matrix::identity(1)}, g, g);
  CHECK(r.failing() == std::vector<std::string>{"d"});
}

TEST_CASE("end_algebra examples") {
  StrictLie2Algebra e10 = end_algebra(TwoTermComplex(1, 0));
  CHECK(e10.dim0() == 1);
  CHECK(e10.dim1() == 0);
  CHECK(is_zero(e10.bracket00(0, 0)));

  StrictLie2Algebra e01 = end_algebra(TwoTermComplex(0, 1));
  CHECK(e01.dim0() == 1);
  CHECK(e01.dim1() == 0);

  StrictLie2Algebra e11 = end_algebra(TwoTermComplex(1, 1, mat({{1}})));
  CHECK(e11.dim0() == 1);
  CHECK(e11.dim1() == 1);
  CHECK(e11.d() == mat({{1}}));
  CHECK(is_zero(e11.bracket01(0, 0)));
  CHECK(validate_algebra(e11).passed());
}

TEST_CASE("end_algebra is a strict Lie 2-algebra with commutator brackets") {
  Rng rng(17);
  for (int t = 0; t < 25; ++t) {
    std::size_t m0 = rng() % 4, m1 = rng() % 4;
    TwoTermComplex v(m0, m1, random_matrix(m0, m1, rng));
    StrictLie2Algebra e = end_algebra(v);
    CHECK(validate_algebra(e).passed());

    EndCoordinates ec(v);
    SubspaceBasis b0 = ec.end0_partial();
    REQUIRE(b0.dim() == e.dim0());
    for (std::size_t i = 0; i < e.dim0(); ++i) {
      Degree0Endo xi = ec.unpack_pair(b0.vectors()[i]);
      for (std::size_t j = 0; j < e.dim0(); ++j) {
        Degree0Endo xj = ec.unpack_pair(b0.vectors()[j]);
        Vector direct = ec.pack(Degree0Endo{commutator(xi.x0, xj.x0), commutator(xi.x1, xj.x1)});
        CHECK(b0.combine(e.bracket00(i, j)) == direct);
      }
      for (std::size_t a = 0; a < e.dim1(); ++a) {
        Matrix d = Matrix::unflatten(m1, m0, unit_vector(e.dim1(), a));
        CHECK(e.bracket01(i, a) == (xi.x1 * d - d * xi.x0).flatten());
      }
    }
  }
}
