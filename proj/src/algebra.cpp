#include "lie2/algebra.hpp"

#include <sstream>

#include "lie2/errors.hpp"

namespace lie2 {

std::vector<std::string> default_labels(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

TwoTermComplex::TwoTermComplex(std::size_t d0, std::size_t d1)
    : dim0(d0), dim1(d1), partial(d0, d1), labels0(default_labels("e", d0)),
      labels1(default_labels("f", d1)) {}

TwoTermComplex::TwoTermComplex(std::size_t d0, std::size_t d1, Matrix partial_map)
    : dim0(d0), dim1(d1), partial(std::move(partial_map)), labels0(default_labels("e", d0)),
      labels1(default_labels("f", d1)) {
  check_shape();
}

void TwoTermComplex::check_shape() const {
  if (partial.rows() != dim0 || partial.cols() != dim1) {
    throw InputError("differential must be a " + std::to_string(dim0) + "x" + std::to_string(dim1) +
                     " matrix, got " + std::to_string(partial.rows()) + "x" +
                     std::to_string(partial.cols()));
  }
  if (labels0.size() != dim0 || labels1.size() != dim1) {
    throw InputError("basis label count does not match dimensions");
  }
}

// --- End(V) ------------------------------------------------------------------

Degree0Endo operator+(const Degree0Endo& a, const Degree0Endo& b) { return {a.x0 + b.x0, a.x1 + b.x1}; }
Degree0Endo operator-(const Degree0Endo& a, const Degree0Endo& b) { return {a.x0 - b.x0, a.x1 - b.x1}; }
Degree0Endo operator*(const Rational& s, const Degree0Endo& a) { return {s * a.x0, s * a.x1}; }

Degree0Endo bracket(const Degree0Endo& x, const Degree0Endo& y) {
  return {commutator(x.x0, y.x0), commutator(x.x1, y.x1)};
}

Degree1Endo bracket(const Degree0Endo& x, const Degree1Endo& d) { return {x.x1 * d.d - d.d * x.x0}; }

Vector EndCoordinates::pack(const Degree0Endo& x) const {
  Vector out = x.x0.flatten();
  const auto& tail = x.x1.flatten();
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

Vector EndCoordinates::pack(const Degree1Endo& d) const { return d.d.flatten(); }

Degree0Endo EndCoordinates::unpack_pair(std::span<const Rational> v) const {
  const std::size_t n0 = v_.dim0 * v_.dim0;
  if (v.size() != pair_dim()) throw InputError("pair coordinate vector has wrong length");
  return {Matrix::unflatten(v_.dim0, v_.dim0, v.subspan(0, n0)),
          Matrix::unflatten(v_.dim1, v_.dim1, v.subspan(n0))};
}

Degree1Endo EndCoordinates::unpack_hom(std::span<const Rational> v) const {
  return {Matrix::unflatten(v_.dim1, v_.dim0, v)};
}

Degree0Endo EndCoordinates::delta(const Degree1Endo& d) const {
  return {v_.partial * d.d, d.d * v_.partial};
}

SubspaceBasis EndCoordinates::end0_partial() const {
  Matrix constraint = matrix_of(pair_dim(), v_.dim0 * v_.dim1, [&](const Vector& v) {
    Degree0Endo x = unpack_pair(v);
    return (x.x0 * v_.partial - v_.partial * x.x1).flatten();
  });
  return kernel_basis(constraint);
}

// --- StrictLie2Algebra ---------------------------------------------------------

StrictLie2Algebra::StrictLie2Algebra(TwoTermComplex complex) : complex_(std::move(complex)) {
  complex_.check_shape();
  c00_.assign(dim0() * dim0(), zero_vector(dim0()));
  c01_.assign(dim0() * dim1(), zero_vector(dim1()));
}

void StrictLie2Algebra::set_bracket00(std::size_t i, std::size_t j, const Vector& v) {
  if (i == j && !is_zero(v)) throw InputError("[e_i, e_i] must vanish");
  set_bracket00_entry(i, j, v);
  set_bracket00_entry(j, i, Rational(-1) * v);
}

void StrictLie2Algebra::set_bracket00_entry(std::size_t i, std::size_t j, const Vector& v) {
  if (i >= dim0() || j >= dim0()) throw InputError("bracket00 index out of range");
  if (v.size() != dim0()) throw InputError("bracket00 value must have length dim0");
  c00_[i * dim0() + j] = v;
}

void StrictLie2Algebra::set_bracket01(std::size_t i, std::size_t alpha, const Vector& v) {
  if (i >= dim0() || alpha >= dim1()) throw InputError("bracket01 index out of range");
  if (v.size() != dim1()) throw InputError("bracket01 value must have length dim1");
  c01_[i * dim1() + alpha] = v;
}

Vector StrictLie2Algebra::bracket(const Vector& x, const Vector& y) const {
  Vector out(dim0());
  for (std::size_t i = 0; i < dim0(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim0(); ++j) {
      if (y[j].is_zero()) continue;
      axpy(out, x[i] * y[j], bracket00(i, j));
    }
  }
  return out;
}

Vector StrictLie2Algebra::bracket_mixed(const Vector& x, const Vector& a) const {
  Vector out(dim1());
  for (std::size_t i = 0; i < dim0(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t al = 0; al < dim1(); ++al) {
      if (a[al].is_zero()) continue;
      axpy(out, x[i] * a[al], bracket01(i, al));
    }
  }
  return out;
}

Matrix StrictLie2Algebra::ad00(const Vector& x) const {
  return matrix_of(dim0(), dim0(), [&](const Vector& y) { return bracket(x, y); });
}

Matrix StrictLie2Algebra::ad01(const Vector& x) const {
  return matrix_of(dim1(), dim1(), [&](const Vector& a) { return bracket_mixed(x, a); });
}

Matrix StrictLie2Algebra::ad1(const Vector& a) const {
  return matrix_of(dim0(), dim1(), [&](const Vector& x) { return Rational(-1) * bracket_mixed(x, a); });
}

bool operator==(const StrictLie2Algebra& a, const StrictLie2Algebra& b) {
  return a.complex_.partial == b.complex_.partial && a.dim0() == b.dim0() && a.dim1() == b.dim1() &&
         a.c00_ == b.c00_ && a.c01_ == b.c01_;
}

// --- ValidationReport ----------------------------------------------------------

bool ValidationReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const CheckResult& ValidationReport::at(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named " + name);
}

std::vector<std::string> ValidationReport::failing() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

void ValidationReport::add(const std::string& name) {
  for (const auto& c : checks) {
    if (c.name == name) return;
  }
  checks.push_back(CheckResult{name, true, {}, {}, {}});
}

void ValidationReport::expect(const std::string& name, const std::string& witness, const Vector& lhs,
                              const Vector& rhs) {
  add(name);
  for (auto& c : checks) {
    if (c.name != name) continue;
    if (c.passed && lhs != rhs) {
      c.passed = false;
      c.witness = witness;
      c.lhs = lhs;
      c.rhs = rhs;
    }
    return;
  }
}

void ValidationReport::merge(const ValidationReport& other) {
  for (const auto& c : other.checks) checks.push_back(c);
}

void require_passed(const ValidationReport& report, const std::string& what) {
  if (report.passed()) return;
  std::ostringstream os;
  os << what << " fails:";
  for (const auto& c : report.checks) {
    if (!c.passed) os << ' ' << c.name << " at " << c.witness;
  }
  throw MathError(os.str());
}

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

}  // namespace

ValidationReport validate_algebra(const StrictLie2Algebra& g) {
  ValidationReport r;
  for (const char* name : {"antisym", "(a)", "(b)", "(c)", "(d)"}) r.add(name);
  const std::size_t n0 = g.dim0(), n1 = g.dim1();
  const auto& l0 = g.complex().labels0;
  const auto& l1 = g.complex().labels1;
  auto e0 = [&](std::size_t i) { return unit_vector(n0, i); };
  auto e1 = [&](std::size_t i) { return unit_vector(n1, i); };
  const Rational minus_one(-1);

  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = i; j < n0; ++j)
      r.expect("antisym", tuple_label({l0[i], l0[j]}), g.bracket00(i, j), minus_one * g.bracket00(j, i));

  // (a) d[x,a] = [x, d a]
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t al = 0; al < n1; ++al)
      r.expect("(a)", tuple_label({l0[i], l1[al]}), g.differential(g.bracket_mixed(e0(i), e1(al))),
               g.bracket(e0(i), g.differential(e1(al))));

  // (b) [d a, b] = [a, d b] = -[d b, a]
  for (std::size_t al = 0; al < n1; ++al)
    for (std::size_t be = al; be < n1; ++be)
      r.expect("(b)", tuple_label({l1[al], l1[be]}), g.bracket_mixed(g.differential(e1(al)), e1(be)),
               minus_one * g.bracket_mixed(g.differential(e1(be)), e1(al)));

  // (c) [[x,y],z] + [[y,z],x] + [[z,x],y] = 0
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j)
      for (std::size_t k = 0; k < n0; ++k) {
        Vector x = e0(i), y = e0(j), z = e0(k);
        Vector lhs = g.bracket(g.bracket(x, y), z) + g.bracket(g.bracket(y, z), x) +
                     g.bracket(g.bracket(z, x), y);
        r.expect("(c)", tuple_label({l0[i], l0[j], l0[k]}), lhs, zero_vector(n0));
      }

  // (d) [[x,y],a] + [[y,a],x] + [[a,x],y] = 0, i.e. [[x,y],a] - [x,[y,a]] + [y,[x,a]] = 0
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j)
      for (std::size_t al = 0; al < n1; ++al) {
        Vector x = e0(i), y = e0(j), a = e1(al);
        Vector lhs = g.bracket_mixed(g.bracket(x, y), a) - g.bracket_mixed(x, g.bracket_mixed(y, a)) +
                     g.bracket_mixed(y, g.bracket_mixed(x, a));
        r.expect("(d)", tuple_label({l0[i], l0[j], l1[al]}), lhs, zero_vector(n1));
      }
  return r;
}

ValidationReport validate_homomorphism(const StrictHom& f, const StrictLie2Algebra& src,
                                       const StrictLie2Algebra& dst) {
  if (f.f0.rows() != dst.dim0() || f.f0.cols() != src.dim0() || f.f1.rows() != dst.dim1() ||
      f.f1.cols() != src.dim1()) {
    throw InputError("homomorphism matrices have the wrong shape");
  }
  ValidationReport r;
  for (const char* name : {"d", "bracket00", "bracket01"}) r.add(name);
  const auto& l0 = src.complex().labels0;
  const auto& l1 = src.complex().labels1;
  for (std::size_t al = 0; al < src.dim1(); ++al) {
    Vector a = unit_vector(src.dim1(), al);
    r.expect("d", tuple_label({l1[al]}), dst.differential(f.f1.apply(a)), f.f0.apply(src.differential(a)));
  }
  for (std::size_t i = 0; i < src.dim0(); ++i) {
    Vector x = unit_vector(src.dim0(), i);
    for (std::size_t j = 0; j < src.dim0(); ++j) {
      Vector y = unit_vector(src.dim0(), j);
      r.expect("bracket00", tuple_label({l0[i], l0[j]}), f.f0.apply(src.bracket(x, y)),
               dst.bracket(f.f0.apply(x), f.f0.apply(y)));
    }
    for (std::size_t al = 0; al < src.dim1(); ++al) {
      Vector a = unit_vector(src.dim1(), al);
      r.expect("bracket01", tuple_label({l0[i], l1[al]}), f.f1.apply(src.bracket_mixed(x, a)),
               dst.bracket_mixed(f.f0.apply(x), f.f1.apply(a)));
    }
  }
  return r;
}

StrictLie2Algebra realize_in_end(const TwoTermComplex& v, const SubspaceBasis& deg0,
                                 const SubspaceBasis& deg1, const std::string& prefix0,
                                 const std::string& prefix1) {
  EndCoordinates ec(v);
  if (deg0.ambient_dim() != ec.pair_dim() || deg1.ambient_dim() != ec.hom_dim()) {
    throw InputError("subspaces do not live in End(V) coordinates");
  }
  const std::size_t n0 = deg0.dim(), n1 = deg1.dim();
  std::vector<Degree0Endo> xs;
  std::vector<Degree1Endo> ds;
  for (const auto& b : deg0.vectors()) xs.push_back(ec.unpack_pair(b));
  for (const auto& b : deg1.vectors()) ds.push_back(ec.unpack_hom(b));

  Matrix d(n0, n1);
  for (std::size_t be = 0; be < n1; ++be) {
    Vector c = deg0.coordinates_or_throw(ec.pack(ec.delta(ds[be])), "delta of a degree-1 element");
    for (std::size_t i = 0; i < n0; ++i) d(i, be) = c[i];
  }
  TwoTermComplex cx(n0, n1, d);
  cx.labels0 = default_labels(prefix0, n0);
  cx.labels1 = default_labels(prefix1, n1);
  StrictLie2Algebra out(cx);
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = i + 1; j < n0; ++j) {
      out.set_bracket00(i, j, deg0.coordinates_or_throw(ec.pack(bracket(xs[i], xs[j])), "degree-0 bracket"));
    }
    for (std::size_t be = 0; be < n1; ++be) {
      out.set_bracket01(i, be, deg1.coordinates_or_throw(ec.pack(bracket(xs[i], ds[be])), "mixed bracket"));
    }
  }
  return out;
}

StrictLie2Algebra end_algebra(const TwoTermComplex& v) {
  EndCoordinates ec(v);
  return realize_in_end(v, ec.end0_partial(), SubspaceBasis::full(ec.hom_dim()), "X", "D");
}

}  // namespace lie2
