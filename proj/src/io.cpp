#include "lie2/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lie2/errors.hpp"

namespace lie2::io {

// --- Node --------------------------------------------------------------------

void Node::fail(const std::string& msg) const {
  throw InputError(file_ + ": " + (path_.empty() ? "/" : path_) + ": " + msg);
}

Node Node::operator[](const char* key) const {
  if (!j_->is_object()) fail("expected an object");
  auto it = j_->find(key);
  if (it == j_->end()) fail(std::string("missing key \"") + key + "\"");
  return Node(*it, file_, path_ + "/" + key);
}

Node Node::operator[](std::size_t i) const {
  if (!j_->is_array()) fail("expected an array");
  if (i >= j_->size()) fail("index " + std::to_string(i) + " out of range");
  return Node((*j_)[i], file_, path_ + "/" + std::to_string(i));
}

bool Node::has(const char* key) const { return j_->is_object() && j_->contains(key); }

std::size_t Node::size() const {
  if (!j_->is_array()) fail("expected an array");
  return j_->size();
}

std::size_t Node::as_size() const {
  if (!j_->is_number_integer() || j_->get<long long>() < 0) fail("expected a non-negative integer");
  return j_->get<std::size_t>();
}

std::size_t Node::as_index(std::size_t bound) const {
  std::size_t i = as_size();
  if (i >= bound) fail("index " + std::to_string(i) + " out of range (size " + std::to_string(bound) + ")");
  return i;
}

std::string Node::as_string() const {
  if (!j_->is_string()) fail("expected a string");
  return j_->get<std::string>();
}

Rational Node::as_scalar() const {
  if (j_->is_number_integer()) return Rational(j_->get<long>());
  if (!j_->is_string()) fail("expected a scalar string such as \"3/4\"");
  try {
    return Rational::parse(j_->get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Vector Node::as_vector(std::size_t n) const {
  if (!j_->is_array()) fail("expected an array of " + std::to_string(n) + " scalars");
  if (j_->size() != n) fail("expected " + std::to_string(n) + " scalars, got " + std::to_string(j_->size()));
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = (*this)[i].as_scalar();
  return v;
}

Matrix Node::as_matrix(std::size_t rows, std::size_t cols) const {
  const std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
  if (!j_->is_array()) fail("expected a " + shape + " matrix");
  if (j_->size() != rows) {
    fail("expected a " + shape + " matrix, got " + std::to_string(j_->size()) + " rows");
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vector row = (*this)[r].as_vector(cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

std::vector<std::size_t> Node::as_indices(std::size_t bound) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i].as_index(bound));
  return out;
}

// --- files -------------------------------------------------------------------

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError(path + ": cannot write file");
  out << dump(j);
}

namespace {

constexpr std::size_t kInlineWidth = 100;

// Scalars and arrays without objects inside print on one line; objects of
// such values do too when they fit.
bool flat(const Json& j) {
  if (j.is_object()) return false;
  if (j.is_array()) {
    for (const auto& e : j) {
      if (!flat(e)) return false;
    }
  }
  return true;
}

void dump_to(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    if (std::all_of(j.begin(), j.end(), [](const Json& v) { return flat(v); })) {
      std::string flat = "{";
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        flat += (first ? "" : ", ") + Json(k).dump() + ": ";
        first = false;
        dump_to(flat, v, indent);
      }
      flat += "}";
      if (flat.size() + static_cast<std::size_t>(indent) <= kInlineWidth) {
        out += flat;
        return;
      }
    }
    out += "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(k).dump() + ": ";
      dump_to(out, v, indent + 2);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array()) {
    if (flat(j)) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        dump_to(out, j[i], indent);
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      dump_to(out, j[i], indent + 2);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  dump_to(out, j, 0);
  return out + "\n";
}

// --- scalars -----------------------------------------------------------------

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

namespace {

std::vector<std::string> labels_from(const Node& n, const char* key, std::size_t dim, const std::string& prefix) {
  if (!n.has(key)) return default_labels(prefix, dim);
  Node b = n[key];
  if (b.size() != dim) b.fail("expected " + std::to_string(dim) + " labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back(b[i].as_string());
  return out;
}

Json labels_to_json(const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const auto& l : labels) out.push_back(l);
  return out;
}

}  // namespace

// --- algebras ----------------------------------------------------------------

Json algebra_to_json(const StrictLie2Algebra& g) {
  Json j;
  j["dim0"] = g.dim0();
  j["dim1"] = g.dim1();
  j["basis0"] = labels_to_json(g.complex().labels0);
  j["basis1"] = labels_to_json(g.complex().labels1);
  j["d"] = to_json(g.d());
  Json b00 = Json::array(), b01 = Json::array();
  for (std::size_t i = 0; i < g.dim0(); ++i) {
    for (std::size_t k = i + 1; k < g.dim0(); ++k) {
      Vector v = g.bracket00(i, k);
      if (!is_zero(v)) b00.push_back(Json{{"i", i}, {"j", k}, {"value", to_json(v)}});
    }
    for (std::size_t al = 0; al < g.dim1(); ++al) {
      Vector v = g.bracket01(i, al);
      if (!is_zero(v)) b01.push_back(Json{{"i", i}, {"alpha", al}, {"value", to_json(v)}});
    }
  }
  j["bracket00"] = b00;
  j["bracket01"] = b01;
  return j;
}

StrictLie2Algebra algebra_from_json(const Node& n) {
  const std::size_t n0 = n["dim0"].as_size(), n1 = n["dim1"].as_size();
  TwoTermComplex cx(n0, n1, n.has("d") ? n["d"].as_matrix(n0, n1) : Matrix(n0, n1));
  cx.labels0 = labels_from(n, "basis0", n0, "e");
  cx.labels1 = labels_from(n, "basis1", n1, "f");
  StrictLie2Algebra g(cx);
  std::vector<bool> seen00(n0 * n0, false), seen01(n0 * n1, false);
  if (n.has("bracket00")) {
    Node list = n["bracket00"];
    for (std::size_t k = 0; k < list.size(); ++k) {
      Node e = list[k];
      std::size_t i = e["i"].as_index(n0), j = e["j"].as_index(n0);
      if (i == j) e.fail("i and j must differ ([x, x] = 0 is implied)");
      if (seen00[i * n0 + j]) e.fail("duplicate entry for this pair");
      seen00[i * n0 + j] = seen00[j * n0 + i] = true;
      g.set_bracket00(i, j, e["value"].as_vector(n0));
    }
  }
  if (n.has("bracket01")) {
    Node list = n["bracket01"];
    for (std::size_t k = 0; k < list.size(); ++k) {
      Node e = list[k];
      std::size_t i = e["i"].as_index(n0), al = e["alpha"].as_index(n1);
      if (seen01[i * n1 + al]) e.fail("duplicate entry for this pair");
      seen01[i * n1 + al] = true;
      g.set_bracket01(i, al, e["value"].as_vector(n1));
    }
  }
  return g;
}

Json complex_to_json(const TwoTermComplex& v) {
  Json j;
  j["dim0"] = v.dim0;
  j["dim1"] = v.dim1;
  j["basis0"] = labels_to_json(v.labels0);
  j["basis1"] = labels_to_json(v.labels1);
  j["partial"] = to_json(v.partial);
  return j;
}

TwoTermComplex complex_from_json(const Node& n) {
  const std::size_t d0 = n["dim0"].as_size(), d1 = n["dim1"].as_size();
  TwoTermComplex v(d0, d1, n.has("partial") ? n["partial"].as_matrix(d0, d1) : Matrix(d0, d1));
  v.labels0 = labels_from(n, "basis0", d0, "e");
  v.labels1 = labels_from(n, "basis1", d1, "f");
  return v;
}

// --- representations ---------------------------------------------------------

Json representation_to_json(const Representation2& rho) {
  Json j;
  j["target"] = complex_to_json(rho.target);
  Json r0 = Json::array(), r1 = Json::array();
  for (const auto& e : rho.rho0) r0.push_back(Json{{"x0", to_json(e.x0)}, {"x1", to_json(e.x1)}});
  for (const auto& e : rho.rho1) r1.push_back(to_json(e.d));
  j["rho0"] = r0;
  j["rho1"] = r1;
  return j;
}

Representation2 representation_from_json(const Node& n, const StrictLie2Algebra& g) {
  Representation2 rho;
  rho.target = complex_from_json(n["target"]);
  const std::size_t v0 = rho.target.dim0, v1 = rho.target.dim1;
  Node r0 = n["rho0"], r1 = n["rho1"];
  if (r0.size() != g.dim0()) r0.fail("expected one entry per g0 basis element (" + std::to_string(g.dim0()) + ")");
  if (r1.size() != g.dim1()) r1.fail("expected one entry per g1 basis element (" + std::to_string(g.dim1()) + ")");
  for (std::size_t i = 0; i < g.dim0(); ++i) {
    rho.rho0.push_back(Degree0Endo{r0[i]["x0"].as_matrix(v0, v0), r0[i]["x1"].as_matrix(v1, v1)});
  }
  for (std::size_t al = 0; al < g.dim1(); ++al) rho.rho1.push_back(Degree1Endo{r1[al].as_matrix(v1, v0)});
  return rho;
}

// --- cochains ----------------------------------------------------------------

Json cochain_to_json(const Cochain& f) {
  Json j;
  j["degree"] = f.degree();
  Json comps = Json::array();
  for (const auto& c : f.shape().components()) {
    Json entries = Json::array();
    for (std::size_t r = 0; r < c.rows.size(); ++r) {
      for (std::size_t s = 0; s < c.syms.size(); ++s) {
        for (std::size_t t = 0; t < c.target_dim; ++t) {
          const Rational& x = f.coeffs()[c.index(r, s, t)];
          if (x.is_zero()) continue;
          entries.push_back(Json{{"rows", c.rows[r]}, {"sym", c.syms[s]}, {"target", t}, {"value", to_json(x)}});
        }
      }
    }
    comps.push_back(Json{{"p", c.p}, {"q", c.q}, {"s", c.s}, {"entries", entries}});
  }
  j["components"] = comps;
  return j;
}

Cochain cochain_from_json(const Node& n, const ShapePtr& shape) {
  const std::size_t deg = n["degree"].as_size();
  if (deg != static_cast<std::size_t>(shape->degree())) {
    n["degree"].fail("expected degree " + std::to_string(shape->degree()));
  }
  Cochain f(shape);
  Node comps = n["components"];
  for (std::size_t k = 0; k < comps.size(); ++k) {
    Node c = comps[k];
    int p = static_cast<int>(c["p"].as_size()), q = static_cast<int>(c["q"].as_size());
    int s = static_cast<int>(c["s"].as_size());
    const ComponentLayout* lay = shape->find(p, q, s);
    if (!lay) c.fail("no component (p, q, s) = (" + std::to_string(p) + ", " + std::to_string(q) + ", " +
                     std::to_string(s) + ") in degree " + std::to_string(deg));
    Node entries = c["entries"];
    for (std::size_t e = 0; e < entries.size(); ++e) {
      Node en = entries[e];
      std::vector<std::size_t> rows = en["rows"].as_indices(shape->n0());
      std::vector<std::size_t> sym = en["sym"].as_indices(shape->n1());
      auto ri = lay->row_index(rows);
      auto si = lay->sym_index(sym);
      if (!ri) en["rows"].fail("expected a strictly increasing tuple of " + std::to_string(p) + " g0 indices");
      if (!si) en["sym"].fail("expected a non-decreasing tuple of " + std::to_string(q) + " g1 indices");
      std::size_t t = en["target"].as_index(lay->target_dim);
      f.coeffs()[lay->index(*ri, *si, t)] = en["value"].as_scalar();
    }
  }
  return f;
}

// --- extensions --------------------------------------------------------------

Json extension_data_to_json(const ExtensionData& d) {
  Json j;
  Json a = Json::array(), b = Json::array(), c = Json::array();
  for (const auto& m : d.mu0_0) a.push_back(to_json(m));
  for (const auto& m : d.mu0_1) b.push_back(to_json(m));
  for (const auto& m : d.mu1) c.push_back(to_json(m));
  j["mu0_0"] = a;
  j["mu0_1"] = b;
  j["mu1"] = c;
  j["phi"] = to_json(d.phi);
  Json om = Json::array(), nu = Json::array();
  for (std::size_t i = 0; i < d.n0; ++i) {
    for (std::size_t k = i + 1; k < d.n0; ++k) {
      if (!is_zero(d.omega_at(i, k))) om.push_back(Json{{"i", i}, {"j", k}, {"value", to_json(d.omega_at(i, k))}});
    }
    for (std::size_t al = 0; al < d.n1; ++al) {
      if (!is_zero(d.nu_at(i, al))) nu.push_back(Json{{"i", i}, {"alpha", al}, {"value", to_json(d.nu_at(i, al))}});
    }
  }
  j["omega"] = om;
  j["nu"] = nu;
  return j;
}

ExtensionData extension_data_from_json(const Node& n, const StrictLie2Algebra& g, const StrictLie2Algebra& h) {
  const std::size_t n0 = g.dim0(), n1 = g.dim1(), m0 = h.dim0(), m1 = h.dim1();
  ExtensionData d(n0, n1, m0, m1);
  auto per_basis = [&](const char* key, std::size_t count, std::size_t rows, std::size_t cols,
                       std::vector<Matrix>& out) {
    if (!n.has(key)) return;
    Node list = n[key];
    if (list.size() != count) list.fail("expected " + std::to_string(count) + " matrices, one per basis element");
    for (std::size_t i = 0; i < count; ++i) out[i] = list[i].as_matrix(rows, cols);
  };
  per_basis("mu0_0", n0, m0, m0, d.mu0_0);
  per_basis("mu0_1", n0, m1, m1, d.mu0_1);
  per_basis("mu1", n1, m1, m0, d.mu1);
  if (n.has("phi")) d.phi = n["phi"].as_matrix(m0, n1);
  if (n.has("omega")) {
    Node list = n["omega"];
    for (std::size_t k = 0; k < list.size(); ++k) {
      Node e = list[k];
      std::size_t i = e["i"].as_index(n0), j = e["j"].as_index(n0);
      if (i == j) e.fail("i and j must differ");
      d.set_omega(i, j, e["value"].as_vector(m0));
    }
  }
  if (n.has("nu")) {
    Node list = n["nu"];
    for (std::size_t k = 0; k < list.size(); ++k) {
      Node e = list[k];
      std::size_t i = e["i"].as_index(n0), al = e["alpha"].as_index(n1);
      d.set_nu(i, al, e["value"].as_vector(m1));
    }
  }
  return d;
}

Json extension_to_json(const Extension& e) {
  Json j = algebra_to_json(e.total);
  j["g_dims"] = Json::array({e.g.dim0(), e.g.dim1()});
  j["h_dims"] = Json::array({e.h.dim0(), e.h.dim1()});
  return j;
}

Extension extension_from_json(const Node& n) {
  StrictLie2Algebra total = algebra_from_json(n);
  Node gd = n["g_dims"], hd = n["h_dims"];
  if (gd.size() != 2) gd.fail("expected [dim0, dim1]");
  if (hd.size() != 2) hd.fail("expected [dim0, dim1]");
  const std::size_t n0 = gd[std::size_t{0}].as_size(), n1 = gd[std::size_t{1}].as_size();
  if (n0 + hd[std::size_t{0}].as_size() != total.dim0() || n1 + hd[std::size_t{1}].as_size() != total.dim1()) {
    hd.fail("g_dims + h_dims must equal the total dimensions");
  }
  return from_total(total, n0, n1);
}

Json section_to_json(const Section& s) { return Json{{"sigma0", to_json(s.sigma0)}, {"sigma1", to_json(s.sigma1)}}; }

Section section_from_json(const Node& n, const Extension& e) {
  return {n["sigma0"].as_matrix(e.total.dim0(), e.g.dim0()), n["sigma1"].as_matrix(e.total.dim1(), e.g.dim1())};
}

Json outer_hom_to_json(const OuterHom& m) {
  Json a = Json::array(), b = Json::array();
  for (std::size_t i = 0; i < m.f0.cols(); ++i) a.push_back(to_json(m.f0.column(i)));
  for (std::size_t i = 0; i < m.f1.cols(); ++i) b.push_back(to_json(m.f1.column(i)));
  return Json{{"barmu0", a}, {"barmu1", b}};
}

OuterHom outer_hom_from_json(const Node& n, const StrictLie2Algebra& g, const DerivationSpaces& hs) {
  OuterHom m{Matrix(hs.sout0.dim(), g.dim0()), Matrix(hs.sout1.dim(), g.dim1())};
  auto read = [&](const char* key, std::size_t count, std::size_t len, Matrix& out) {
    Node list = n[key];
    if (list.size() != count) {
      list.fail("expected " + std::to_string(count) + " coordinate vectors, one per basis element");
    }
    for (std::size_t i = 0; i < count; ++i) {
      Vector v = list[i].as_vector(len);
      for (std::size_t k = 0; k < len; ++k) out(k, i) = v[k];
    }
  };
  read("barmu0", g.dim0(), hs.sout0.dim(), m.f0);
  read("barmu1", g.dim1(), hs.sout1.dim(), m.f1);
  return m;
}

Json witness_to_json(const IsoWitness& w) { return Json{{"xi", to_json(w.xi)}, {"eta", to_json(w.eta)}}; }

Json report_to_json(const ValidationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) {
      e["witness"] = c.witness;
      e["lhs"] = to_json(c.lhs);
      e["rhs"] = to_json(c.rhs);
    }
    checks.push_back(e);
  }
  return Json{{"passed", r.passed()}, {"checks", checks}};
}

}  // namespace lie2::io
