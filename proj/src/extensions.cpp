#include "lie2/extensions.hpp"

#include "lie2/errors.hpp"

namespace lie2 {

namespace {

std::string tuple_label(std::initializer_list<std::string> parts) {
  std::string s = "(";
  bool first = true;
  for (const auto& p : parts) {
    if (!first) s += ", ";
    s += p;
    first = false;
  }
  return s + ")";
}

// [m, u] for m in h1, u in h0.
Vector bracket10(const StrictLie2Algebra& h, const Vector& m, const Vector& u) {
  return -1 * h.bracket_mixed(u, m);
}

Matrix sum_of(const std::vector<Matrix>& ms, std::span<const Rational> coeffs, std::size_t rows, std::size_t cols) {
  Matrix out(rows, cols);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero()) out += coeffs[k] * ms[k];
  }
  return out;
}

Vector head(const Vector& v, std::size_t n) { return Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)); }

Vector tail_checked(const Vector& v, std::size_t n, const char* what) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!v[i].is_zero()) throw MathError(std::string(what) + " does not lie in h");
  }
  return Vector(v.begin() + static_cast<std::ptrdiff_t>(n), v.end());
}

Vector concat(const Vector& a, const Vector& b) {
  Vector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Matrix block_inclusion(std::size_t n, std::size_t m, bool lower) {
  Matrix out(n + m, lower ? m : n);
  std::size_t off = lower ? n : 0;
  for (std::size_t i = 0; i < out.cols(); ++i) out(off + i, i) = Rational(1);
  return out;
}

Matrix block_projection(std::size_t n, std::size_t m) {
  Matrix out(n, n + m);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Rational(1);
  return out;
}

void merge_prefixed(ValidationReport& into, const ValidationReport& from, const std::string& prefix) {
  for (auto c : from.checks) {
    c.name = prefix + c.name;
    into.checks.push_back(std::move(c));
  }
}

void expect_flag(ValidationReport& r, const std::string& name, bool ok, const std::string& witness) {
  r.add(name);
  r.expect(name, witness, {Rational(ok ? 1 : 0)}, {Rational(1)});
}

}  // namespace

// --- ExtensionData -----------------------------------------------------------

ExtensionData::ExtensionData(std::size_t g0, std::size_t g1, std::size_t h0, std::size_t h1)
    : n0(g0), n1(g1), m0(h0), m1(h1), mu0_0(g0, Matrix(h0, h0)), mu0_1(g0, Matrix(h1, h1)),
      mu1(g1, Matrix(h1, h0)), phi(h0, g1), omega(g0 * g0, zero_vector(h0)), nu(g0 * g1, zero_vector(h1)) {}

void ExtensionData::set_omega(std::size_t i, std::size_t j, const Vector& v) {
  if (i == j) {
    if (!is_zero(v)) throw InputError("omega(x, x) must vanish");
    return;
  }
  omega[i * n0 + j] = v;
  omega[j * n0 + i] = -1 * v;
}

Degree0Endo ExtensionData::mu0(std::span<const Rational> x) const {
  return {sum_of(mu0_0, x, m0, m0), sum_of(mu0_1, x, m1, m1)};
}

Matrix ExtensionData::mu1_of(std::span<const Rational> a) const { return sum_of(mu1, a, m1, m0); }

Vector ExtensionData::omega_of(std::span<const Rational> x, std::span<const Rational> y) const {
  Vector out(m0);
  for (std::size_t i = 0; i < n0; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n0; ++j) {
      if (!y[j].is_zero()) axpy(out, x[i] * y[j], omega_at(i, j));
    }
  }
  return out;
}

Vector ExtensionData::nu_of(std::span<const Rational> x, std::span<const Rational> a) const {
  Vector out(m1);
  for (std::size_t i = 0; i < n0; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t al = 0; al < n1; ++al) {
      if (!a[al].is_zero()) axpy(out, x[i] * a[al], nu_at(i, al));
    }
  }
  return out;
}

void ExtensionData::check_shape() const {
  auto fail = [](const std::string& what) { throw InputError("extension data: " + what); };
  if (mu0_0.size() != n0 || mu0_1.size() != n0) fail("mu0_0 and mu0_1 need one matrix per g0 basis element");
  if (mu1.size() != n1) fail("mu1 needs one matrix per g1 basis element");
  for (const auto& m : mu0_0) {
    if (m.rows() != m0 || m.cols() != m0) fail("mu0_0 entries must be dim h0 x dim h0");
  }
  for (const auto& m : mu0_1) {
    if (m.rows() != m1 || m.cols() != m1) fail("mu0_1 entries must be dim h1 x dim h1");
  }
  for (const auto& m : mu1) {
    if (m.rows() != m1 || m.cols() != m0) fail("mu1 entries must be dim h1 x dim h0");
  }
  if (phi.rows() != m0 || phi.cols() != n1) fail("phi must be dim h0 x dim g1");
  if (omega.size() != n0 * n0 || nu.size() != n0 * n1) fail("omega or nu table has the wrong size");
  for (const auto& v : omega) {
    if (v.size() != m0) fail("omega values must lie in h0");
  }
  for (const auto& v : nu) {
    if (v.size() != m1) fail("nu values must lie in h1");
  }
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = 0; j < n0; ++j) {
      if (!(omega_at(i, j) == -1 * omega_at(j, i))) fail("omega must be antisymmetric");
    }
  }
}

// --- conditions --------------------------------------------------------------

ValidationReport check_extension_data(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const ExtensionData& d) {
  d.check_shape();
  if (d.n0 != g.dim0() || d.n1 != g.dim1() || d.m0 != h.dim0() || d.m1 != h.dim1()) {
    throw InputError("extension data dimensions do not match g and h");
  }
  const std::size_t n0 = g.dim0(), n1 = g.dim1(), m0 = h.dim0(), m1 = h.dim1();
  const auto& gl0 = g.complex().labels0;
  const auto& gl1 = g.complex().labels1;
  const auto& hl0 = h.complex().labels0;
  const auto& hl1 = h.complex().labels1;
  const Matrix& dh = h.d();
  auto x = [&](std::size_t i) { return unit_vector(n0, i); };
  auto a = [&](std::size_t i) { return unit_vector(n1, i); };
  auto u = [&](std::size_t i) { return unit_vector(m0, i); };
  auto m = [&](std::size_t i) { return unit_vector(m1, i); };

  ValidationReport r;
  for (int k = 1; k <= 13; ++k) r.add("p" + std::to_string(k));

  for (std::size_t i = 0; i < n0; ++i) {
    const Matrix& A = d.mu0_0[i];
    const Matrix& B = d.mu0_1[i];
    r.expect("p1", tuple_label({gl0[i]}), (dh * B).flatten(), (A * dh).flatten());
    for (std::size_t k = 0; k < m0; ++k) {
      for (std::size_t l = k + 1; l < m0; ++l) {
        r.expect("p2", tuple_label({gl0[i], hl0[k], hl0[l]}), A.apply(h.bracket(u(k), u(l))),
                 h.bracket(A.apply(u(k)), u(l)) + h.bracket(u(k), A.apply(u(l))));
      }
      for (std::size_t b = 0; b < m1; ++b) {
        r.expect("p3", tuple_label({gl0[i], hl1[b], hl0[k]}), B.apply(bracket10(h, m(b), u(k))),
                 bracket10(h, B.apply(m(b)), u(k)) + bracket10(h, m(b), A.apply(u(k))));
      }
    }
  }
  for (std::size_t al = 0; al < n1; ++al) {
    const Matrix& T = d.mu1[al];
    for (std::size_t k = 0; k < m0; ++k) {
      for (std::size_t l = k + 1; l < m0; ++l) {
        r.expect("p4", tuple_label({gl1[al], hl0[k], hl0[l]}), T.apply(h.bracket(u(k), u(l))),
                 bracket10(h, T.apply(u(k)), u(l)) + h.bracket_mixed(u(k), T.apply(u(l))));
      }
    }
    Vector da = g.differential(a(al));
    Vector pa = d.phi.column(al);
    Degree0Endo mda = d.mu0(da);
    r.expect("p5", tuple_label({gl1[al]}), (dh * T).flatten(), (mda.x0 + h.ad00(pa)).flatten());
    r.expect("p6", tuple_label({gl1[al]}), (T * dh).flatten(), (mda.x1 + h.ad01(pa)).flatten());
  }
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = i + 1; j < n0; ++j) {
      Degree0Endo mxy = d.mu0(g.bracket00(i, j));
      const Vector& w = d.omega_at(i, j);
      std::string t = tuple_label({gl0[i], gl0[j]});
      r.expect("p7", t, commutator(d.mu0_0[i], d.mu0_0[j]).flatten(), (mxy.x0 + h.ad00(w)).flatten());
      r.expect("p8", t, commutator(d.mu0_1[i], d.mu0_1[j]).flatten(), (mxy.x1 + h.ad01(w)).flatten());
    }
  }
  for (std::size_t al = 0; al < n1; ++al) {
    for (std::size_t i = 0; i < n0; ++i) {
      Vector ax = -1 * g.bracket01(i, al);     // [a, x]
      Vector nu_ax = -1 * d.nu_at(i, al);      // nu(a, x)
      r.expect("p9", tuple_label({gl1[al], gl0[i]}),
               (d.mu1[al] * d.mu0_0[i] - d.mu0_1[i] * d.mu1[al]).flatten(),
               (d.mu1_of(ax) + h.ad1(nu_ax)).flatten());
      r.expect("p10", tuple_label({gl0[i], gl1[al]}), d.phi.apply(g.bracket01(i, al)) + dh.apply(d.nu_at(i, al)),
               d.omega_of(x(i), g.differential(a(al))) + d.mu0_0[i].apply(d.phi.column(al)));
    }
  }
  for (std::size_t al = 0; al < n1; ++al) {
    for (std::size_t be = al; be < n1; ++be) {
      Vector da = g.differential(a(al)), db = g.differential(a(be));
      // nu(a, d b) = -nu(d b, a)
      r.expect("p11", tuple_label({gl1[al], gl1[be]}),
               d.nu_of(da, a(be)) - d.mu1[be].apply(d.phi.column(al)),
               -1 * d.nu_of(db, a(al)) + d.mu1[al].apply(d.phi.column(be)));
    }
  }
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = i + 1; j < n0; ++j) {
      for (std::size_t k = j + 1; k < n0; ++k) {
        const std::size_t c[3] = {i, j, k};
        Vector lhs(m0), rhs(m0);
        for (int s = 0; s < 3; ++s) {
          std::size_t p = c[s], q = c[(s + 1) % 3], t = c[(s + 2) % 3];
          lhs = lhs + d.mu0_0[p].apply(d.omega_at(q, t));
          rhs = rhs + d.omega_of(g.bracket00(p, q), x(t));
        }
        r.expect("p12", tuple_label({gl0[i], gl0[j], gl0[k]}), lhs, rhs);
      }
    }
  }
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = i + 1; j < n0; ++j) {
      for (std::size_t al = 0; al < n1; ++al) {
        // nu([x,y], a) + nu([y,a], x) + nu([a,x], y), with nu(b, z) = -nu(z, b).
        Vector ya = g.bracket01(j, al);
        Vector ax = -1 * g.bracket01(i, al);
        Vector lhs = d.nu_of(g.bracket00(i, j), a(al)) - d.nu_of(x(i), ya) - d.nu_of(x(j), ax);
        Vector rhs = d.mu0_1[i].apply(d.nu_at(j, al)) - d.mu0_1[j].apply(d.nu_at(i, al)) +
                     d.mu1[al].apply(d.omega_at(i, j));
        r.expect("p13", tuple_label({gl0[i], gl0[j], gl1[al]}), lhs, rhs);
      }
    }
  }
  return r;
}

// --- total algebra -----------------------------------------------------------

Extension assemble_total(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const ExtensionData& d) {
  d.check_shape();
  if (d.n0 != g.dim0() || d.n1 != g.dim1() || d.m0 != h.dim0() || d.m1 != h.dim1()) {
    throw InputError("extension data dimensions do not match g and h");
  }
  const std::size_t n0 = g.dim0(), n1 = g.dim1(), m0 = h.dim0(), m1 = h.dim1();
  Matrix dt(n0 + m0, n1 + m1);
  for (std::size_t c = 0; c < n1; ++c) {
    for (std::size_t r = 0; r < n0; ++r) dt(r, c) = g.d()(r, c);
    for (std::size_t r = 0; r < m0; ++r) dt(n0 + r, c) = d.phi(r, c);
  }
  for (std::size_t c = 0; c < m1; ++c) {
    for (std::size_t r = 0; r < m0; ++r) dt(n0 + r, n1 + c) = h.d()(r, c);
  }
  TwoTermComplex cx(n0 + m0, n1 + m1, dt);
  cx.labels0 = g.complex().labels0;
  cx.labels0.insert(cx.labels0.end(), h.complex().labels0.begin(), h.complex().labels0.end());
  cx.labels1 = g.complex().labels1;
  cx.labels1.insert(cx.labels1.end(), h.complex().labels1.begin(), h.complex().labels1.end());
  StrictLie2Algebra t(cx);

  const Vector z0 = zero_vector(n0), z1 = zero_vector(n1);
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = i + 1; j < n0; ++j) t.set_bracket00(i, j, concat(g.bracket00(i, j), d.omega_at(i, j)));
    for (std::size_t k = 0; k < m0; ++k) t.set_bracket00(i, n0 + k, concat(z0, d.mu0_0[i].column(k)));
    for (std::size_t al = 0; al < n1; ++al) t.set_bracket01(i, al, concat(g.bracket01(i, al), d.nu_at(i, al)));
    for (std::size_t b = 0; b < m1; ++b) t.set_bracket01(i, n1 + b, concat(z1, d.mu0_1[i].column(b)));
  }
  for (std::size_t k = 0; k < m0; ++k) {
    for (std::size_t l = k + 1; l < m0; ++l) t.set_bracket00(n0 + k, n0 + l, concat(z0, h.bracket00(k, l)));
    for (std::size_t al = 0; al < n1; ++al) t.set_bracket01(n0 + k, al, concat(z1, -1 * d.mu1[al].column(k)));
    for (std::size_t b = 0; b < m1; ++b) t.set_bracket01(n0 + k, n1 + b, concat(z1, h.bracket01(k, b)));
  }
  return Extension{g, h, t, {block_inclusion(n0, m0, true), block_inclusion(n1, m1, true)},
                   {block_projection(n0, m0), block_projection(n1, m1)}};
}

Extension build_total(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const ExtensionData& d) {
  require_passed(validate_algebra(g), "g");
  require_passed(validate_algebra(h), "h");
  require_passed(check_extension_data(g, h, d), "extension data");
  Extension e = assemble_total(g, h, d);
  require_passed(validate_algebra(e.total), "total algebra");
  return e;
}

Extension from_total(const StrictLie2Algebra& total, std::size_t n0, std::size_t n1) {
  if (n0 > total.dim0() || n1 > total.dim1()) throw InputError("g dimensions exceed the total algebra");
  const std::size_t m0 = total.dim0() - n0, m1 = total.dim1() - n1;
  const auto& l0 = total.complex().labels0;
  const auto& l1 = total.complex().labels1;

  Matrix dg(n0, n1), dh(m0, m1);
  for (std::size_t r = 0; r < n0; ++r) {
    for (std::size_t c = 0; c < n1; ++c) dg(r, c) = total.d()(r, c);
  }
  for (std::size_t r = 0; r < m0; ++r) {
    for (std::size_t c = 0; c < m1; ++c) dh(r, c) = total.d()(n0 + r, n1 + c);
  }
  TwoTermComplex gc(n0, n1, dg), hc(m0, m1, dh);
  gc.labels0.assign(l0.begin(), l0.begin() + static_cast<std::ptrdiff_t>(n0));
  gc.labels1.assign(l1.begin(), l1.begin() + static_cast<std::ptrdiff_t>(n1));
  hc.labels0.assign(l0.begin() + static_cast<std::ptrdiff_t>(n0), l0.end());
  hc.labels1.assign(l1.begin() + static_cast<std::ptrdiff_t>(n1), l1.end());
  StrictLie2Algebra g(gc), h(hc);
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = i + 1; j < n0; ++j) g.set_bracket00(i, j, head(total.bracket00(i, j), n0));
    for (std::size_t al = 0; al < n1; ++al) g.set_bracket01(i, al, head(total.bracket01(i, al), n1));
  }
  for (std::size_t k = 0; k < m0; ++k) {
    for (std::size_t l = k + 1; l < m0; ++l) {
      h.set_bracket00(k, l, tail_checked(total.bracket00(n0 + k, n0 + l), n0, "bracket of h0 elements"));
    }
    for (std::size_t b = 0; b < m1; ++b) {
      h.set_bracket01(k, b, tail_checked(total.bracket01(n0 + k, n1 + b), n1, "bracket of h0 and h1"));
    }
  }
  Extension e{g, h, total, {block_inclusion(n0, m0, true), block_inclusion(n1, m1, true)},
              {block_projection(n0, m0), block_projection(n1, m1)}};
  require_passed(check_exactness(e), "block-layout extension");
  return e;
}

Section canonical_section(const Extension& e) {
  return {block_inclusion(e.g.dim0(), e.h.dim0(), false), block_inclusion(e.g.dim1(), e.h.dim1(), false)};
}

void check_section(const Extension& e, const Section& s) {
  if (s.sigma0.rows() != e.total.dim0() || s.sigma0.cols() != e.g.dim0() || s.sigma1.rows() != e.total.dim1() ||
      s.sigma1.cols() != e.g.dim1()) {
    throw InputError("section has the wrong shape");
  }
  if (!(e.proj.f0 * s.sigma0 == Matrix::identity(e.g.dim0())) ||
      !(e.proj.f1 * s.sigma1 == Matrix::identity(e.g.dim1()))) {
    throw InputError("section is not a right inverse of the projection");
  }
}

ExtensionData extract_data(const Extension& e, const Section& s) {
  check_section(e, s);
  const StrictLie2Algebra& t = e.total;
  const std::size_t n0 = e.g.dim0(), n1 = e.g.dim1(), m0 = e.h.dim0(), m1 = e.h.dim1();
  ExtensionData d(n0, n1, m0, m1);
  auto in_h0 = [&](const Vector& v, const char* what) { return tail_checked(v, n0, what); };
  auto in_h1 = [&](const Vector& v, const char* what) { return tail_checked(v, n1, what); };
  auto i0 = [&](std::size_t k) { return e.incl.f0.column(k); };
  auto i1 = [&](std::size_t b) { return e.incl.f1.column(b); };

  for (std::size_t al = 0; al < n1; ++al) {
    Vector sa = s.sigma1.column(al);
    Vector ph = in_h0(t.differential(sa) - s.sigma0.apply(e.g.differential(unit_vector(n1, al))), "phi");
    for (std::size_t r = 0; r < m0; ++r) d.phi(r, al) = ph[r];
    for (std::size_t k = 0; k < m0; ++k) {
      Vector c = in_h1(-1 * t.bracket_mixed(i0(k), sa), "mu1");
      for (std::size_t r = 0; r < m1; ++r) d.mu1[al](r, k) = c[r];
    }
  }
  for (std::size_t i = 0; i < n0; ++i) {
    Vector sx = s.sigma0.column(i);
    for (std::size_t k = 0; k < m0; ++k) {
      Vector c = in_h0(t.bracket(sx, i0(k)), "mu0_0");
      for (std::size_t r = 0; r < m0; ++r) d.mu0_0[i](r, k) = c[r];
    }
    for (std::size_t b = 0; b < m1; ++b) {
      Vector c = in_h1(t.bracket_mixed(sx, i1(b)), "mu0_1");
      for (std::size_t r = 0; r < m1; ++r) d.mu0_1[i](r, b) = c[r];
    }
    for (std::size_t j = i + 1; j < n0; ++j) {
      d.set_omega(i, j, in_h0(t.bracket(sx, s.sigma0.column(j)) - s.sigma0.apply(e.g.bracket00(i, j)), "omega"));
    }
    for (std::size_t al = 0; al < n1; ++al) {
      d.set_nu(i, al, in_h1(t.bracket_mixed(sx, s.sigma1.column(al)) - s.sigma1.apply(e.g.bracket01(i, al)), "nu"));
    }
  }
  return d;
}

ValidationReport check_exactness(const Extension& e) {
  ValidationReport r;
  merge_prefixed(r, validate_homomorphism(e.incl, e.h, e.total), "incl ");
  merge_prefixed(r, validate_homomorphism(e.proj, e.total, e.g), "proj ");
  expect_flag(r, "proj o incl = 0", (e.proj.f0 * e.incl.f0).is_zero() && (e.proj.f1 * e.incl.f1).is_zero(), "");
  expect_flag(r, "incl injective", rank(e.incl.f0) == e.h.dim0() && rank(e.incl.f1) == e.h.dim1(), "");
  expect_flag(r, "proj surjective", rank(e.proj.f0) == e.g.dim0() && rank(e.proj.f1) == e.g.dim1(), "");
  expect_flag(r, "im incl = ker proj",
              SubspaceBasis::image(e.incl.f0) == kernel_basis(e.proj.f0) &&
                  SubspaceBasis::image(e.incl.f1) == kernel_basis(e.proj.f1),
              "");
  return r;
}

// --- outer homomorphism ------------------------------------------------------

OuterHom induced_outer_hom(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const DerivationSpaces& hs,
                           const ExtensionData& d) {
  EndCoordinates ec(h.complex());
  OuterHom f{Matrix(hs.sout0.dim(), g.dim0()), Matrix(hs.sout1.dim(), g.dim1())};
  for (std::size_t i = 0; i < g.dim0(); ++i) {
    Vector v = ec.pack(Degree0Endo{d.mu0_0[i], d.mu0_1[i]});
    if (!hs.sder0.contains(v)) throw MathError("mu0(" + g.complex().labels0[i] + ") is not a derivation of h");
    Vector c = hs.sout0.project(v);
    for (std::size_t k = 0; k < c.size(); ++k) f.f0(k, i) = c[k];
  }
  for (std::size_t al = 0; al < g.dim1(); ++al) {
    Vector v = ec.pack(Degree1Endo{d.mu1[al]});
    if (!hs.sder1.contains(v)) throw MathError("mu1(" + g.complex().labels1[al] + ") is not a derivation of h");
    Vector c = hs.sout1.project(v);
    for (std::size_t k = 0; k < c.size(); ++k) f.f1(k, al) = c[k];
  }
  require_passed(validate_homomorphism(f, g, outer_algebra(h, hs)), "induced outer homomorphism");
  return f;
}

OuterHom induced_outer_hom(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const ExtensionData& d) {
  return induced_outer_hom(g, h, sder_spaces(h), d);
}

// --- isomorphisms ------------------------------------------------------------

StrictHom witness_map(const Extension& src, const Extension& dst, const IsoWitness& w) {
  (void)dst;
  const std::size_t n0 = src.g.dim0(), n1 = src.g.dim1();
  StrictHom theta{Matrix::identity(src.total.dim0()), Matrix::identity(src.total.dim1())};
  for (std::size_t c = 0; c < n0; ++c) {
    for (std::size_t r = 0; r < w.xi.rows(); ++r) theta.f0(n0 + r, c) = w.xi(r, c);
  }
  for (std::size_t c = 0; c < n1; ++c) {
    for (std::size_t r = 0; r < w.eta.rows(); ++r) theta.f1(n1 + r, c) = w.eta(r, c);
  }
  return theta;
}

ValidationReport check_iso_witness(const Extension& src, const Extension& dst, const IsoWitness& w) {
  StrictHom theta = witness_map(src, dst, w);
  ValidationReport r;
  merge_prefixed(r, validate_homomorphism(theta, src.total, dst.total), "theta ");
  expect_flag(r, "theta o incl = incl", theta.f0 * src.incl.f0 == dst.incl.f0 && theta.f1 * src.incl.f1 == dst.incl.f1,
              "");
  expect_flag(r, "proj o theta = proj", dst.proj.f0 * theta.f0 == src.proj.f0 && dst.proj.f1 * theta.f1 == src.proj.f1,
              "");
  expect_flag(r, "theta invertible",
              rank(theta.f0) == theta.f0.rows() && rank(theta.f1) == theta.f1.rows(), "");
  return r;
}

namespace {

struct IsoSystem {
  const StrictLie2Algebra& g;
  const StrictLie2Algebra& h;
  const ExtensionData& d;    // target data
  const ExtensionData& dp;   // source data

  // Residuals of the phi, omega and nu equations for given xi, eta.
  Vector residual(const Matrix& xi, const Matrix& eta) const {
    const std::size_t n0 = g.dim0(), n1 = g.dim1();
    Vector out;
    auto push = [&](const Vector& v) { out.insert(out.end(), v.begin(), v.end()); };
    for (std::size_t al = 0; al < n1; ++al) {
      Vector a = unit_vector(n1, al);
      push((dp.phi.column(al) - d.phi.column(al)) - (h.d().apply(eta.column(al)) - xi.apply(g.differential(a))));
    }
    for (std::size_t i = 0; i < n0; ++i) {
      Vector xx = xi.column(i);
      for (std::size_t j = i + 1; j < n0; ++j) {
        Vector xy = xi.column(j);
        Vector rhs = d.mu0_0[i].apply(xy) - d.mu0_0[j].apply(xx) - xi.apply(g.bracket00(i, j)) + h.bracket(xx, xy);
        push((dp.omega_at(i, j) - d.omega_at(i, j)) - rhs);
      }
      for (std::size_t al = 0; al < n1; ++al) {
        Vector ea = eta.column(al);
        Vector ax = -1 * g.bracket01(i, al);
        // nu'(a,x) - nu(a,x) = mu1(a) xi x - mu^1(x) eta a - eta[a,x] + [eta a, xi x]
        Vector rhs = d.mu1[al].apply(xx) - d.mu0_1[i].apply(ea) - eta.apply(ax) + bracket10(h, ea, xx);
        push((d.nu_at(i, al) - dp.nu_at(i, al)) - rhs);
      }
    }
    return out;
  }
};

}  // namespace

std::optional<IsoWitness> iso_witness(const Extension& src, const Extension& dst) {
  if (!(src.g == dst.g) || !(src.h == dst.h)) throw InputError("extensions must share g and h");
  const StrictLie2Algebra& g = dst.g;
  const StrictLie2Algebra& h = dst.h;
  const std::size_t n0 = g.dim0(), n1 = g.dim1(), m0 = h.dim0(), m1 = h.dim1();
  ExtensionData d = extract_data(dst, canonical_section(dst));
  ExtensionData dp = extract_data(src, canonical_section(src));

  EndCoordinates ec(h.complex());
  Matrix ad0m = ad0_matrix(h);
  Matrix ad1m = ad1_matrix(h);
  Matrix xi_p(m0, n0), eta_p(m1, n1);
  for (std::size_t i = 0; i < n0; ++i) {
    Vector diff = ec.pack(Degree0Endo{dp.mu0_0[i] - d.mu0_0[i], dp.mu0_1[i] - d.mu0_1[i]});
    auto s = solve_particular(ad0m, diff);
    if (!s) return std::nullopt;
    for (std::size_t r = 0; r < m0; ++r) xi_p(r, i) = (*s)[r];
  }
  for (std::size_t al = 0; al < n1; ++al) {
    auto s = solve_particular(ad1m, ec.pack(Degree1Endo{dp.mu1[al] - d.mu1[al]}));
    if (!s) return std::nullopt;
    for (std::size_t r = 0; r < m1; ++r) eta_p(r, al) = (*s)[r];
  }

  // Central corrections enter the remaining equations linearly.
  SubspaceBasis cen0 = kernel_basis(ad0m), cen1 = kernel_basis(ad1m);
  const std::size_t c0 = cen0.dim(), c1 = cen1.dim();
  auto corrected = [&](const Vector& t) {
    Matrix xi = xi_p, eta = eta_p;
    for (std::size_t i = 0; i < n0; ++i) {
      Vector z = cen0.combine(std::span<const Rational>(t).subspan(i * c0, c0));
      for (std::size_t r = 0; r < m0; ++r) xi(r, i) += z[r];
    }
    for (std::size_t al = 0; al < n1; ++al) {
      Vector z = cen1.combine(std::span<const Rational>(t).subspan(n0 * c0 + al * c1, c1));
      for (std::size_t r = 0; r < m1; ++r) eta(r, al) += z[r];
    }
    return std::pair{xi, eta};
  };
  IsoSystem sys{g, h, d, dp};
  const std::size_t unknowns = n0 * c0 + n1 * c1;
  const Vector r0 = sys.residual(xi_p, eta_p);
  Matrix lin = matrix_of(unknowns, r0.size(), [&](const Vector& t) {
    auto [xi, eta] = corrected(t);
    return sys.residual(xi, eta) - r0;
  });
  auto t = solve_particular(lin, -1 * r0);
  if (!t) return std::nullopt;
  auto [xi, eta] = corrected(*t);
  IsoWitness w{xi, eta};
  require_passed(check_iso_witness(src, dst, w), "isomorphism witness");
  return w;
}

std::optional<IsoWitness> central_iso_witness(const Extension& src, const Extension& dst) {
  ExtensionData d = extract_data(dst, canonical_section(dst));
  ExtensionData dp = extract_data(src, canonical_section(src));
  if (d.mu0_0 != dp.mu0_0 || d.mu0_1 != dp.mu0_1 || d.mu1 != dp.mu1) {
    throw InputError("central isomorphism search needs extensions with equal mu data");
  }
  return iso_witness(src, dst);
}

}  // namespace lie2
