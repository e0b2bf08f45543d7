#include "lie2/obstruction.hpp"

#include <random>

#include "lie2/errors.hpp"

namespace lie2 {

namespace {

using Idx = std::vector<std::size_t>;

Vector random_combination(const SubspaceBasis& b, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  Vector c(b.dim());
  for (auto& x : c) x = Rational(dist(rng));
  return b.combine(c);
}

Matrix columns_in(const SubspaceBasis& target, const Matrix& map, const SubspaceBasis& source, const char* what) {
  Matrix out(target.dim(), source.dim());
  for (std::size_t j = 0; j < source.dim(); ++j) {
    Vector c = target.coordinates_or_throw(map.apply(source.vectors()[j]), what);
    for (std::size_t r = 0; r < c.size(); ++r) out(r, j) = c[r];
  }
  return out;
}

Vector solve_inner(const Matrix& ad, const Vector& defect, const std::string& what) {
  auto s = solve_particular(ad, defect);
  if (!s) throw MathError("the defect " + what + " is not an inner derivation; the outer homomorphism is invalid");
  return *s;
}

}  // namespace

CenterComplex center_complex(const StrictLie2Algebra& h, const DerivationSpaces& hs) {
  CenterComplex c{hs.cen0, hs.cen1, TwoTermComplex(hs.cen0.dim(), hs.cen1.dim())};
  c.complex.partial = columns_in(hs.cen0, h.d(), hs.cen1, "d_h on the center");
  return c;
}

void check_outer_hom(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const DerivationSpaces& hs,
                     const OuterHom& m) {
  if (m.f0.rows() != hs.sout0.dim() || m.f0.cols() != g.dim0() || m.f1.rows() != hs.sout1.dim() ||
      m.f1.cols() != g.dim1()) {
    throw InputError("outer homomorphism has shape " + std::to_string(m.f0.rows()) + "x" +
                     std::to_string(m.f0.cols()) + ", " + std::to_string(m.f1.rows()) + "x" +
                     std::to_string(m.f1.cols()) + "; expected " + std::to_string(hs.sout0.dim()) + "x" +
                     std::to_string(g.dim0()) + ", " + std::to_string(hs.sout1.dim()) + "x" +
                     std::to_string(g.dim1()));
  }
  require_passed(validate_homomorphism(m, g, outer_algebra(h, hs)), "outer homomorphism");
}

LiftedData lift_outer_hom(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const DerivationSpaces& hs,
                          const OuterHom& m, const LiftOptions& opts) {
  check_outer_hom(g, h, hs, m);
  const std::size_t n0 = g.dim0(), n1 = g.dim1(), m0 = h.dim0(), m1 = h.dim1();
  EndCoordinates ec(h.complex());

  // Section of SDer -> SOut on quotient basis vectors.
  std::vector<Vector> sec0, sec1;
  for (std::size_t k = 0; k < hs.sout0.dim(); ++k) sec0.push_back(hs.sout0.lift(unit_vector(hs.sout0.dim(), k)));
  for (std::size_t k = 0; k < hs.sout1.dim(); ++k) sec1.push_back(hs.sout1.lift(unit_vector(hs.sout1.dim(), k)));
  LiftedData out{ExtensionData(n0, n1, m0, m1), "complement"};
  if (opts.section_seed) {
    std::mt19937_64 rng(*opts.section_seed);
    for (auto& v : sec0) v = v + random_combination(hs.sinn0, rng);
    for (auto& v : sec1) v = v + random_combination(hs.sinn1, rng);
    out.section_id = "seed " + std::to_string(*opts.section_seed);
  }
  ExtensionData& d = out.data;
  for (std::size_t i = 0; i < n0; ++i) {
    Vector v(ec.pair_dim());
    for (std::size_t k = 0; k < sec0.size(); ++k) axpy(v, m.f0(k, i), sec0[k]);
    Degree0Endo e = ec.unpack_pair(v);
    d.mu0_0[i] = e.x0;
    d.mu0_1[i] = e.x1;
  }
  for (std::size_t al = 0; al < n1; ++al) {
    Vector v(ec.hom_dim());
    for (std::size_t k = 0; k < sec1.size(); ++k) axpy(v, m.f1(k, al), sec1[k]);
    d.mu1[al] = ec.unpack_hom(v).d;
  }

  const Matrix a0 = ad0_matrix(h), a1 = ad1_matrix(h);
  const auto& gl0 = g.complex().labels0;
  const auto& gl1 = g.complex().labels1;
  for (std::size_t al = 0; al < n1; ++al) {
    Degree0Endo del = ec.delta(Degree1Endo{d.mu1[al]});
    Degree0Endo mda = d.mu0(g.differential(unit_vector(n1, al)));
    Vector phi = solve_inner(a0, ec.pack(Degree0Endo{del.x0 - mda.x0, del.x1 - mda.x1}), "for phi(" + gl1[al] + ")");
    for (std::size_t r = 0; r < m0; ++r) d.phi(r, al) = phi[r];
  }
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = i + 1; j < n0; ++j) {
      Degree0Endo mxy = d.mu0(g.bracket00(i, j));
      Degree0Endo defect{commutator(d.mu0_0[i], d.mu0_0[j]) - mxy.x0, commutator(d.mu0_1[i], d.mu0_1[j]) - mxy.x1};
      d.set_omega(i, j, solve_inner(a0, ec.pack(defect), "for omega(" + gl0[i] + ", " + gl0[j] + ")"));
    }
    for (std::size_t al = 0; al < n1; ++al) {
      Vector ax = -1 * g.bracket01(i, al);
      Matrix defect = d.mu1[al] * d.mu0_0[i] - d.mu0_1[i] * d.mu1[al] - d.mu1_of(ax);
      Vector nu_ax = solve_inner(a1, ec.pack(Degree1Endo{defect}), "for nu(" + gl1[al] + ", " + gl0[i] + ")");
      d.set_nu(i, al, -1 * nu_ax);
    }
  }
  if (opts.solution_seed) {
    std::mt19937_64 rng(*opts.solution_seed);
    for (std::size_t al = 0; al < n1; ++al) {
      Vector z = random_combination(hs.cen0, rng);
      for (std::size_t r = 0; r < m0; ++r) d.phi(r, al) += z[r];
    }
    for (std::size_t i = 0; i < n0; ++i) {
      for (std::size_t j = i + 1; j < n0; ++j) d.set_omega(i, j, d.omega_at(i, j) + random_combination(hs.cen0, rng));
      for (std::size_t al = 0; al < n1; ++al) d.set_nu(i, al, d.nu_at(i, al) + random_combination(hs.cen1, rng));
    }
    out.section_id += ", solution seed " + std::to_string(*opts.solution_seed);
  }
  return out;
}

LiftedData lift_outer_hom(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const OuterHom& m,
                          const LiftOptions& opts) {
  return lift_outer_hom(g, h, sder_spaces(h), m, opts);
}

Representation2 formal_representation(const StrictLie2Algebra& h, const ExtensionData& d) {
  Representation2 rho{h.complex(), {}, {}};
  for (std::size_t i = 0; i < d.n0; ++i) rho.rho0.push_back(Degree0Endo{d.mu0_0[i], d.mu0_1[i]});
  for (std::size_t al = 0; al < d.n1; ++al) rho.rho1.push_back(Degree1Endo{d.mu1[al]});
  return rho;
}

Cochain lambda_cochain(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const ExtensionData& d) {
  Cochain lam(cochain_shape(g, formal_representation(h, d), 2));
  for (std::size_t al = 0; al < d.n1; ++al) lam.set(0, 1, 0, {}, {al}, d.phi.column(al));
  for (std::size_t i = 0; i < d.n0; ++i) {
    for (std::size_t j = i + 1; j < d.n0; ++j) lam.set(2, 0, 0, {i, j}, {}, d.omega_at(i, j));
    for (std::size_t al = 0; al < d.n1; ++al) lam.set(1, 1, 1, {i}, {al}, d.nu_at(i, al));
  }
  return lam;
}

Cochain omega_cochain(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const ExtensionData& d) {
  const std::size_t n0 = g.dim0(), n1 = g.dim1();
  Cochain om(cochain_shape(g, formal_representation(h, d), 3));
  auto x = [&](std::size_t i) { return unit_vector(n0, i); };
  auto a = [&](std::size_t i) { return unit_vector(n1, i); };
  auto phi = [&](const Vector& b) { return d.phi.apply(b); };

  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t al = 0; al < n1; ++al) {
      Vector v = d.mu0_0[i].apply(d.phi.column(al)) - phi(g.bracket01(i, al)) +
                 d.omega_of(x(i), g.differential(a(al))) - h.differential(d.nu_at(i, al));
      om.set(1, 1, 0, {i}, {al}, v);
    }
  }
  for (std::size_t al = 0; al < n1; ++al) {
    for (std::size_t be = al; be < n1; ++be) {
      Vector v = d.mu1[al].apply(d.phi.column(be)) + d.mu1[be].apply(d.phi.column(al)) -
                 d.nu_of(g.differential(a(al)), a(be)) - d.nu_of(g.differential(a(be)), a(al));
      om.set(0, 2, 1, {}, {al, be}, v);
    }
  }
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = i + 1; j < n0; ++j) {
      for (std::size_t k = j + 1; k < n0; ++k) {
        const std::size_t c[3] = {i, j, k};
        Vector v(d.m0);
        for (int s = 0; s < 3; ++s) {
          std::size_t p = c[s], q = c[(s + 1) % 3], t = c[(s + 2) % 3];
          v = v + d.mu0_0[p].apply(d.omega_at(q, t)) - d.omega_of(g.bracket00(p, q), x(t));
        }
        om.set(3, 0, 0, {i, j, k}, {}, v);
      }
    }
  }
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = i + 1; j < n0; ++j) {
      for (std::size_t al = 0; al < n1; ++al) {
        // nu([x,y],a) + nu([y,a],x) + nu([a,x],y), with nu(b, z) = -nu(z, b)
        Vector cyc = d.nu_of(g.bracket00(i, j), a(al)) - d.nu_of(x(i), g.bracket01(j, al)) +
                     d.nu_of(x(j), g.bracket01(i, al));
        Vector v = d.mu1[al].apply(d.omega_at(i, j)) + d.mu0_1[i].apply(d.nu_at(j, al)) -
                   d.mu0_1[j].apply(d.nu_at(i, al)) - cyc;
        om.set(2, 1, 1, {i, j}, {al}, v);
      }
    }
  }
  return om;
}

Representation2 restrict_to_center(const StrictLie2Algebra& g, const CenterComplex& c, const ExtensionData& d) {
  Representation2 rho{c.complex, {}, {}};
  for (std::size_t i = 0; i < g.dim0(); ++i) {
    rho.rho0.push_back(Degree0Endo{columns_in(c.cen0, d.mu0_0[i], c.cen0, "mu0 on cen0"),
                                   columns_in(c.cen1, d.mu0_1[i], c.cen1, "mu0 on cen1")});
  }
  for (std::size_t al = 0; al < g.dim1(); ++al) {
    rho.rho1.push_back(Degree1Endo{columns_in(c.cen1, d.mu1[al], c.cen0, "mu1 on cen0")});
  }
  require_passed(validate_representation(g, rho), "center representation");
  return rho;
}

Representation2 induced_center_rep(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const OuterHom& m) {
  DerivationSpaces hs = sder_spaces(h);
  return restrict_to_center(g, center_complex(h, hs), lift_outer_hom(g, h, hs, m).data);
}

namespace {

// Re-expresses an h-valued cochain in cen-basis coordinates.
Cochain to_center(const Cochain& f, const CenterComplex& c, const ShapePtr& shape) {
  Cochain out(shape);
  for (const auto& comp : shape->components()) {
    const SubspaceBasis& cen = comp.s == 0 ? c.cen0 : c.cen1;
    for (std::size_t r = 0; r < comp.rows.size(); ++r) {
      for (std::size_t t = 0; t < comp.syms.size(); ++t) {
        Vector v = f.value(comp.p, comp.q, comp.s, comp.rows[r], comp.syms[t]);
        auto coords = cen.coordinates(v);
        if (!coords) {
          throw MathError("obstruction value at component (" + std::to_string(comp.p) + "," +
                          std::to_string(comp.q) + "," + std::to_string(comp.s) + ") leaves the center of h");
        }
        for (std::size_t k = 0; k < coords->size(); ++k) out.coeffs()[comp.index(r, t, k)] = (*coords)[k];
      }
    }
  }
  return out;
}

}  // namespace

ObstructionReport obstruction_class(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const OuterHom& m,
                                    const LiftOptions& opts) {
  DerivationSpaces hs = sder_spaces(h);
  ObstructionReport r;
  r.lift = lift_outer_hom(g, h, hs, m, opts);
  r.center = center_complex(h, hs);
  r.muhat = restrict_to_center(g, r.center, r.lift.data);
  r.omega = to_center(omega_cochain(g, h, r.lift.data), r.center, cochain_shape(g, r.muhat, 3));
  CohomologyData h3 = cohomology_basis(g, r.muhat, 3);
  auto coords = class_coordinates(h3, r.omega);
  if (!coords) throw MathError("obstruction cochain is not a cocycle");
  r.class_coords = *coords;
  r.h3_dim = h3.betti;
  r.extensible = is_zero(r.class_coords);
  return r;
}

ExtensionData shift_data(const ExtensionData& d, const CenterComplex& c, const Cochain& tau, const Rational& sign) {
  if (tau.degree() != 2 || tau.shape().n0() != d.n0 || tau.shape().n1() != d.n1 ||
      tau.shape().m0() != c.cen0.dim() || tau.shape().m1() != c.cen1.dim()) {
    throw InputError("shift cochain does not match the extension data");
  }
  ExtensionData out = d;
  const Idx none;
  for (std::size_t al = 0; al < d.n1; ++al) {
    Vector z = c.cen0.combine(tau.value(0, 1, 0, none, Idx{al}));
    for (std::size_t r = 0; r < d.m0; ++r) out.phi(r, al) += sign * z[r];
  }
  for (std::size_t i = 0; i < d.n0; ++i) {
    for (std::size_t j = i + 1; j < d.n0; ++j) {
      out.set_omega(i, j, d.omega_at(i, j) + sign * c.cen0.combine(tau.value(2, 0, 0, Idx{i, j}, none)));
    }
    for (std::size_t al = 0; al < d.n1; ++al) {
      out.set_nu(i, al, d.nu_at(i, al) + sign * c.cen1.combine(tau.value(1, 1, 1, Idx{i}, Idx{al})));
    }
  }
  return out;
}

Extensibility is_extensible(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const OuterHom& m,
                            const LiftOptions& opts) {
  Extensibility e;
  e.report = obstruction_class(g, h, m, opts);
  e.extensible = e.report.extensible;
  if (!e.extensible) return e;
  Matrix d2 = coboundary_matrix(g, e.report.muhat, 2);
  auto sigma = solve_particular(d2, e.report.omega.coeffs());
  if (!sigma) throw MathError("obstruction class vanishes but the cocycle is not a coboundary");
  Cochain s(cochain_shape(g, e.report.muhat, 2), *sigma);
  ExtensionData corrected = shift_data(e.report.lift.data, e.report.center, s, Rational(-1));
  require_passed(check_extension_data(g, h, corrected), "corrected extension data");
  e.data = std::move(corrected);
  return e;
}

ExtensionData Classification::data_at(std::span<const Rational> t) const {
  if (t.size() != h2.betti) {
    throw InputError("expected " + std::to_string(h2.betti) + " class coordinates, got " + std::to_string(t.size()));
  }
  Cochain tau(h2.shape);
  for (std::size_t k = 0; k < t.size(); ++k) tau += t[k] * h2.reps[k];
  return shift_data(base, center, tau, Rational(1));
}

Extension Classification::make_extension(std::span<const Rational> t) const { return build_total(g, h, data_at(t)); }

Classification classify(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const OuterHom& m,
                        const LiftOptions& opts) {
  Extensibility e = is_extensible(g, h, m, opts);
  if (!e.extensible) throw MathError("the outer homomorphism is not extensible");
  return Classification{g, h, e.report.center, e.report.muhat, *e.data, cohomology_basis(g, e.report.muhat, 2)};
}

}  // namespace lie2
