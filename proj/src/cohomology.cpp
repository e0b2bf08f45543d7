#include "lie2/cohomology.hpp"

#include "lie2/derivations.hpp"
#include "lie2/errors.hpp"

namespace lie2 {

namespace {

std::vector<std::size_t> drop(const std::vector<std::size_t>& v, std::size_t k) {
  std::vector<std::size_t> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != k) out.push_back(v[i]);
  }
  return out;
}

std::vector<SparseArg> basis_args(const std::vector<std::size_t>& idx) {
  std::vector<SparseArg> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(basis_arg(i));
  return out;
}

Rational parity(std::size_t k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

void check_rep_shape(const StrictLie2Algebra& g, const Representation2& rho) {
  const auto& v = rho.target;
  v.check_shape();
  if (rho.rho0.size() != g.dim0() || rho.rho1.size() != g.dim1()) {
    throw InputError("representation must give one endomorphism per basis element");
  }
  for (const auto& x : rho.rho0) {
    if (x.x0.rows() != v.dim0 || x.x0.cols() != v.dim0 || x.x1.rows() != v.dim1 || x.x1.cols() != v.dim1) {
      throw InputError("rho0 entry has the wrong shape");
    }
  }
  for (const auto& d : rho.rho1) {
    if (d.d.rows() != v.dim1 || d.d.cols() != v.dim0) throw InputError("rho1 entry has the wrong shape");
  }
}

}  // namespace

Degree0Endo Representation2::act0(std::span<const Rational> x) const {
  Degree0Endo out{Matrix(target.dim0, target.dim0), Matrix(target.dim1, target.dim1)};
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!x[k].is_zero()) out = out + x[k] * rho0[k];
  }
  return out;
}

Degree1Endo Representation2::act1(std::span<const Rational> a) const {
  Matrix out(target.dim1, target.dim0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!a[k].is_zero()) out += a[k] * rho1[k].d;
  }
  return {out};
}

ValidationReport validate_representation(const StrictLie2Algebra& g, const Representation2& rho) {
  check_rep_shape(g, rho);
  EndCoordinates ec(rho.target);
  const Matrix& part = rho.target.partial;
  const auto& l0 = g.complex().labels0;
  const auto& l1 = g.complex().labels1;
  ValidationReport r;
  for (const char* k : {"End0", "delta rho1 = rho0 d", "rho0 bracket", "rho1 bracket"}) r.add(k);

  for (std::size_t i = 0; i < g.dim0(); ++i) {
    const auto& x = rho.rho0[i];
    r.expect("End0", "(" + l0[i] + ")", (x.x0 * part).flatten(), (part * x.x1).flatten());
  }
  for (std::size_t al = 0; al < g.dim1(); ++al) {
    r.expect("delta rho1 = rho0 d", "(" + l1[al] + ")", ec.pack(ec.delta(rho.rho1[al])),
             ec.pack(rho.act0(g.d().column(al))));
  }
  for (std::size_t i = 0; i < g.dim0(); ++i) {
    for (std::size_t j = i + 1; j < g.dim0(); ++j) {
      r.expect("rho0 bracket", "(" + l0[i] + ", " + l0[j] + ")", ec.pack(rho.act0(g.bracket00(i, j))),
               ec.pack(bracket(rho.rho0[i], rho.rho0[j])));
    }
    for (std::size_t al = 0; al < g.dim1(); ++al) {
      r.expect("rho1 bracket", "(" + l0[i] + ", " + l1[al] + ")", ec.pack(rho.act1(g.bracket01(i, al))),
               ec.pack(bracket(rho.rho0[i], rho.rho1[al])));
    }
  }
  return r;
}

Representation2 adjoint_representation(const StrictLie2Algebra& g) {
  Representation2 rho;
  rho.target = g.complex();
  for (std::size_t i = 0; i < g.dim0(); ++i) rho.rho0.push_back(ad0(g, unit_vector(g.dim0(), i)));
  for (std::size_t al = 0; al < g.dim1(); ++al) rho.rho1.push_back(ad1(g, unit_vector(g.dim1(), al)));
  return rho;
}

Representation2 trivial_representation(const StrictLie2Algebra& g, const TwoTermComplex& v) {
  Representation2 rho;
  rho.target = v;
  rho.rho0.assign(g.dim0(), Degree0Endo{Matrix(v.dim0, v.dim0), Matrix(v.dim1, v.dim1)});
  rho.rho1.assign(g.dim1(), Degree1Endo{Matrix(v.dim1, v.dim0)});
  return rho;
}

ShapePtr cochain_shape(const StrictLie2Algebra& g, const Representation2& rho, int i) {
  check_rep_shape(g, rho);
  return make_shape(g.dim0(), g.dim1(), rho.target.dim0, rho.target.dim1, i);
}

std::vector<ComponentDim> cochain_space(const StrictLie2Algebra& g, const Representation2& rho, int i) {
  ShapePtr shape = cochain_shape(g, rho, i);
  std::vector<ComponentDim> out;
  for (const auto& c : shape->components()) out.push_back({c.p, c.q, c.s, c.size()});
  return out;
}

Cochain coboundary(const StrictLie2Algebra& g, const Representation2& rho, const Cochain& f) {
  const int deg = f.degree();
  if (deg > 3) throw InputError("coboundary is only defined on cochains of degree <= 3");
  ShapePtr in_shape = cochain_shape(g, rho, deg);
  if (!(f.shape() == *in_shape)) throw InputError("cochain shape does not match the algebra and representation");
  ShapePtr out_shape = make_shape(g.dim0(), g.dim1(), rho.target.dim0, rho.target.dim1, deg + 1);
  const CochainShape& in = *in_shape;
  const Matrix& part = rho.target.partial;
  Cochain out(out_shape);

  for (const auto& c : out_shape->components()) {
    const int p = c.p, q = c.q, s = c.s;
    const bool has_dg = q >= 1 && in.find(p + 1, q - 1, s) != nullptr;
    const bool has_partial = s == 0 && in.find(p, q, 1) != nullptr;
    const bool has_01 = s == 1 && q >= 1 && in.find(p, q - 1, 0) != nullptr;
    const bool has_10 = p >= 1 && in.find(p - 1, q, s) != nullptr;

    for (std::size_t r = 0; r < c.rows.size(); ++r) {
      const auto& xs = c.rows[r];
      for (std::size_t sy = 0; sy < c.syms.size(); ++sy) {
        const auto& as = c.syms[sy];
        Vector val(c.target_dim);

        if (has_dg) {
          // Differential of each a_k in the last g0 slot, over the full cyclic orbit.
          const Rational sign = parity(static_cast<std::size_t>(p + 1));
          for (std::size_t k = 0; k < as.size(); ++k) {
            std::vector<SparseArg> xa = basis_args(xs);
            xa.push_back(sparse(g.d().column(as[k])));
            axpy(val, sign, f.eval(p + 1, q - 1, s, xa, basis_args(drop(as, k))));
          }
        }
        if (has_partial) {
          axpy(val, parity(static_cast<std::size_t>(p)), part.apply(f.value(p, q, 1, xs, as)));
        }
        if (has_01) {
          const Rational sign = parity(static_cast<std::size_t>(p));
          for (std::size_t k = 0; k < as.size(); ++k) {
            axpy(val, sign, rho.rho1[as[k]].d.apply(f.value(p, q - 1, 0, xs, drop(as, k))));
          }
        }
        if (has_10) {
          for (std::size_t i = 0; i < xs.size(); ++i) {
            // 1-based slot i+1: (-1)^{(i+1)+1} = (-1)^i.
            const Degree0Endo& act = rho.rho0[xs[i]];
            const Matrix& m = s == 0 ? act.x0 : act.x1;
            axpy(val, parity(i), m.apply(f.value(p - 1, q, s, drop(xs, i), as)));
          }
          for (std::size_t i = 0; i < xs.size(); ++i) {
            for (std::size_t j = i + 1; j < xs.size(); ++j) {
              const Vector& br = g.bracket00(xs[i], xs[j]);
              if (is_zero(br)) continue;
              std::vector<SparseArg> xa{sparse(br)};
              for (std::size_t k = 0; k < xs.size(); ++k) {
                if (k != i && k != j) xa.push_back(basis_arg(xs[k]));
              }
              // (-1)^{(i+1)+(j+1)}
              axpy(val, parity(i + j), f.eval(p - 1, q, s, xa, basis_args(as)));
            }
          }
          for (std::size_t i = 0; i < xs.size(); ++i) {
            const std::vector<SparseArg> xa = basis_args(drop(xs, i));
            for (std::size_t j = 0; j < as.size(); ++j) {
              const Vector& br = g.bracket01(xs[i], as[j]);
              if (is_zero(br)) continue;
              std::vector<SparseArg> aa = basis_args(as);
              aa[j] = sparse(br);
              // (-1)^{i+1} with 1-based i.
              axpy(val, parity(i + 1), f.eval(p - 1, q, s, xa, aa));
            }
          }
        }
        for (std::size_t t = 0; t < c.target_dim; ++t) out.coeffs()[c.index(r, sy, t)] = val[t];
      }
    }
  }
  return out;
}

Matrix coboundary_matrix(const StrictLie2Algebra& g, const Representation2& rho, int i) {
  ShapePtr in = cochain_shape(g, rho, i);
  if (i > 3) throw InputError("coboundary is only defined on cochains of degree <= 3");
  ShapePtr out = make_shape(g.dim0(), g.dim1(), rho.target.dim0, rho.target.dim1, i + 1);
  return matrix_of(in->dim(), out->dim(),
                   [&](const Vector& v) { return coboundary(g, rho, Cochain(in, v)).coeffs(); });
}

CohomologyData cohomology_basis(const StrictLie2Algebra& g, const Representation2& rho, int i) {
  if (i < 0 || i > 3) throw InputError("cohomology is computed in degrees 0..3");
  CohomologyData h;
  h.degree = i;
  h.shape = cochain_shape(g, rho, i);
  h.cocycles = kernel_basis(coboundary_matrix(g, rho, i));
  h.coboundaries = i == 0 ? SubspaceBasis(h.shape->dim()) : SubspaceBasis::image(coboundary_matrix(g, rho, i - 1));
  h.quotient = QuotientData(h.coboundaries, h.cocycles);
  h.betti = h.quotient.dim();
  for (std::size_t k = 0; k < h.betti; ++k) h.reps.emplace_back(h.shape, h.quotient.lift(unit_vector(h.betti, k)));
  return h;
}

std::optional<Vector> class_coordinates(const CohomologyData& h, const Cochain& z) {
  if (!(z.shape() == *h.shape)) throw InputError("cochain shape does not match the cohomology data");
  if (!h.cocycles.contains(z.coeffs())) return std::nullopt;
  return h.quotient.project(z.coeffs());
}

std::optional<Vector> class_coordinates(const StrictLie2Algebra& g, const Representation2& rho, const Cochain& z) {
  return class_coordinates(cohomology_basis(g, rho, z.degree()), z);
}

Cochain degree1_cochain(const ShapePtr& shape, const Matrix& on_g0, const Matrix& on_g1) {
  if (shape->degree() != 1) throw InputError("degree1_cochain needs a degree-1 shape");
  if (on_g0.rows() != shape->m0() || on_g0.cols() != shape->n0() || on_g1.rows() != shape->m1() ||
      on_g1.cols() != shape->n1()) {
    throw InputError("degree-1 parts have the wrong shape");
  }
  Cochain f(shape);
  for (std::size_t i = 0; i < shape->n0(); ++i) f.set(1, 0, 0, {i}, {}, on_g0.column(i));
  for (std::size_t al = 0; al < shape->n1(); ++al) f.set(0, 1, 1, {}, {al}, on_g1.column(al));
  return f;
}

std::pair<Matrix, Matrix> degree1_parts(const Cochain& f) {
  const CochainShape& sh = f.shape();
  if (sh.degree() != 1) throw InputError("degree1_parts needs a degree-1 cochain");
  Matrix a(sh.m0(), sh.n0()), b(sh.m1(), sh.n1());
  for (std::size_t i = 0; i < sh.n0(); ++i) {
    std::vector<std::size_t> xs{i};
    Vector v = f.value(1, 0, 0, xs, {});
    for (std::size_t t = 0; t < v.size(); ++t) a(t, i) = v[t];
  }
  for (std::size_t al = 0; al < sh.n1(); ++al) {
    std::vector<std::size_t> as{al};
    Vector v = f.value(0, 1, 1, {}, as);
    for (std::size_t t = 0; t < v.size(); ++t) b(t, al) = v[t];
  }
  return {a, b};
}

}  // namespace lie2
