#include "lie2/derivations.hpp"

#include "lie2/errors.hpp"

namespace lie2 {

Degree0Endo ad0(const StrictLie2Algebra& g, const Vector& x) { return {g.ad00(x), g.ad01(x)}; }

Degree1Endo ad1(const StrictLie2Algebra& g, const Vector& a) { return {g.ad1(a)}; }

Matrix ad0_matrix(const StrictLie2Algebra& g) {
  EndCoordinates ec(g.complex());
  return matrix_of(g.dim0(), ec.pair_dim(), [&](const Vector& x) { return ec.pack(ad0(g, x)); });
}

Matrix ad1_matrix(const StrictLie2Algebra& g) {
  EndCoordinates ec(g.complex());
  return matrix_of(g.dim1(), ec.hom_dim(), [&](const Vector& a) { return ec.pack(ad1(g, a)); });
}

namespace {

void append(Vector& out, const Vector& v) { out.insert(out.end(), v.begin(), v.end()); }

// Residuals of the degree-0 derivation equations plus X0 d = d X1.
Vector sder0_residual(const StrictLie2Algebra& g, const EndCoordinates& ec, const Vector& v) {
  const std::size_t n0 = g.dim0(), n1 = g.dim1();
  Degree0Endo x = ec.unpack_pair(v);
  Vector res = (x.x0 * g.d() - g.d() * x.x1).flatten();
  for (std::size_t i = 0; i < n0; ++i) {
    Vector ei = unit_vector(n0, i);
    Vector xi = x.x0.apply(ei);
    for (std::size_t j = i + 1; j < n0; ++j) {
      Vector ej = unit_vector(n0, j);
      append(res, x.x0.apply(g.bracket(ei, ej)) - g.bracket(xi, ej) - g.bracket(ei, x.x0.apply(ej)));
    }
    for (std::size_t al = 0; al < n1; ++al) {
      Vector a = unit_vector(n1, al);
      append(res, x.x1.apply(g.bracket_mixed(ei, a)) - g.bracket_mixed(xi, a) -
                      g.bracket_mixed(ei, x.x1.apply(a)));
    }
  }
  return res;
}

// Theta[x,y] = [Theta x, y] + [x, Theta y], with [Theta x, y] = -[y, Theta x].
Vector sder1_residual(const StrictLie2Algebra& g, const EndCoordinates& ec, const Vector& v) {
  const std::size_t n0 = g.dim0();
  Matrix theta = ec.unpack_hom(v).d;
  Vector res;
  for (std::size_t i = 0; i < n0; ++i) {
    Vector x = unit_vector(n0, i);
    for (std::size_t j = i + 1; j < n0; ++j) {
      Vector y = unit_vector(n0, j);
      append(res, theta.apply(g.bracket(x, y)) + g.bracket_mixed(y, theta.apply(x)) -
                      g.bracket_mixed(x, theta.apply(y)));
    }
  }
  return res;
}

std::size_t residual_length(const std::function<Vector(const Vector&)>& f, std::size_t in_dim) {
  return f(zero_vector(in_dim)).size();
}

}  // namespace

DerivationSpaces sder_spaces(const StrictLie2Algebra& g) {
  require_passed(validate_algebra(g), "strict Lie 2-algebra");
  EndCoordinates ec(g.complex());
  DerivationSpaces s;

  std::function<Vector(const Vector&)> r0 = [&](const Vector& v) { return sder0_residual(g, ec, v); };
  std::function<Vector(const Vector&)> r1 = [&](const Vector& v) { return sder1_residual(g, ec, v); };
  s.sder0 = kernel_basis(matrix_of(ec.pair_dim(), residual_length(r0, ec.pair_dim()), r0));
  s.sder1 = kernel_basis(matrix_of(ec.hom_dim(), residual_length(r1, ec.hom_dim()), r1));

  Matrix a0 = ad0_matrix(g);
  Matrix a1 = ad1_matrix(g);
  s.sinn0 = SubspaceBasis::image(a0);
  s.sinn1 = SubspaceBasis::image(a1);
  s.cen0 = kernel_basis(a0);
  s.cen1 = kernel_basis(a1);
  s.sout0 = QuotientData(s.sinn0, s.sder0);
  s.sout1 = QuotientData(s.sinn1, s.sder1);
  return s;
}

StrictLie2Algebra derivation_algebra(const StrictLie2Algebra& g, const DerivationSpaces& s) {
  return realize_in_end(g.complex(), s.sder0, s.sder1, "D0_", "D1_");
}

StrictLie2Algebra derivation_algebra(const StrictLie2Algebra& g) {
  return derivation_algebra(g, sder_spaces(g));
}

StrictHom adjoint_hom(const StrictLie2Algebra& g) {
  DerivationSpaces s = sder_spaces(g);
  Matrix a0 = ad0_matrix(g);
  Matrix a1 = ad1_matrix(g);
  StrictHom f{Matrix(s.sder0.dim(), g.dim0()), Matrix(s.sder1.dim(), g.dim1())};
  for (std::size_t i = 0; i < g.dim0(); ++i) {
    Vector c = s.sder0.coordinates_or_throw(a0.column(i), "ad0 image in SDer0");
    for (std::size_t k = 0; k < c.size(); ++k) f.f0(k, i) = c[k];
  }
  for (std::size_t al = 0; al < g.dim1(); ++al) {
    Vector c = s.sder1.coordinates_or_throw(a1.column(al), "ad1 image in SDer1");
    for (std::size_t k = 0; k < c.size(); ++k) f.f1(k, al) = c[k];
  }
  return f;
}

StrictLie2Algebra outer_algebra(const StrictLie2Algebra& g, const DerivationSpaces& s) {
  EndCoordinates ec(g.complex());
  const std::size_t n0 = s.sout0.dim(), n1 = s.sout1.dim();
  std::vector<Degree0Endo> xs;
  std::vector<Degree1Endo> ds;
  for (std::size_t i = 0; i < n0; ++i) xs.push_back(ec.unpack_pair(s.sout0.lift(unit_vector(n0, i))));
  for (std::size_t b = 0; b < n1; ++b) ds.push_back(ec.unpack_hom(s.sout1.lift(unit_vector(n1, b))));

  Matrix d(n0, n1);
  for (std::size_t b = 0; b < n1; ++b) {
    Vector c = s.sout0.project(ec.pack(ec.delta(ds[b])));
    for (std::size_t i = 0; i < n0; ++i) d(i, b) = c[i];
  }
  TwoTermComplex cx(n0, n1, d);
  cx.labels0 = default_labels("O0_", n0);
  cx.labels1 = default_labels("O1_", n1);
  StrictLie2Algebra out(cx);
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = i + 1; j < n0; ++j) out.set_bracket00(i, j, s.sout0.project(ec.pack(bracket(xs[i], xs[j]))));
    for (std::size_t b = 0; b < n1; ++b) out.set_bracket01(i, b, s.sout1.project(ec.pack(bracket(xs[i], ds[b]))));
  }
  return out;
}

ValidationReport check_inner_ideal_identities(const StrictLie2Algebra& g, const DerivationSpaces& s) {
  EndCoordinates ec(g.complex());
  ValidationReport r;
  const char* k1 = "[X,ad1(a)]=ad1(X1 a)";
  const char* k2 = "[X,ad0(x)]=ad0(X0 x)";
  const char* k3 = "[Theta,ad0(x)]=ad1(Theta x)";
  for (const char* k : {k1, k2, k3}) r.add(k);
  const auto& l0 = g.complex().labels0;
  const auto& l1 = g.complex().labels1;

  for (std::size_t k = 0; k < s.sder0.dim(); ++k) {
    Degree0Endo x = ec.unpack_pair(s.sder0.vectors()[k]);
    std::string dk = "D0_" + std::to_string(k);
    for (std::size_t al = 0; al < g.dim1(); ++al) {
      Vector a = unit_vector(g.dim1(), al);
      r.expect(k1, "(" + dk + ", " + l1[al] + ")", ec.pack(bracket(x, ad1(g, a))),
               ec.pack(ad1(g, x.x1.apply(a))));
    }
    for (std::size_t i = 0; i < g.dim0(); ++i) {
      Vector y = unit_vector(g.dim0(), i);
      r.expect(k2, "(" + dk + ", " + l0[i] + ")", ec.pack(bracket(x, ad0(g, y))),
               ec.pack(ad0(g, x.x0.apply(y))));
    }
  }
  for (std::size_t k = 0; k < s.sder1.dim(); ++k) {
    Matrix theta = ec.unpack_hom(s.sder1.vectors()[k]).d;
    std::string dk = "D1_" + std::to_string(k);
    for (std::size_t i = 0; i < g.dim0(); ++i) {
      Vector y = unit_vector(g.dim0(), i);
      Degree0Endo ady = ad0(g, y);
      Matrix lhs = theta * ady.x0 - ady.x1 * theta;
      r.expect(k3, "(" + dk + ", " + l0[i] + ")", lhs.flatten(), ad1(g, theta.apply(y)).d.flatten());
    }
  }
  return r;
}

ValidationReport check_inner_ideal_identities(const StrictLie2Algebra& g) {
  return check_inner_ideal_identities(g, sder_spaces(g));
}

}  // namespace lie2
