#include "lie2/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "lie2/errors.hpp"
#include "lie2/io.hpp"

namespace lie2::cli {

namespace {

using io::Json;
using io::Node;

// Rows of cells printed with every column padded to its widest entry.
class Table {
 public:
  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      width.resize(std::max(width.size(), r.size()), 0);
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c) {
        line += r[c];
        if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
      }
      out << line << "\n";
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string show(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + "]";
}

// Keeps the parsed document alive next to the Node that points into it.
struct Document {
  std::string path;
  Json json;
  Node node() const { return Node(json, path); }
};

Document load(const std::string& path) { return {path, io::read_file(path)}; }

StrictLie2Algebra load_algebra(const std::string& path) { return io::algebra_from_json(load(path).node()); }

Extension load_extension(const std::string& path) { return io::extension_from_json(load(path).node()); }

Section load_section(const std::optional<std::string>& path, const Extension& e) {
  if (!path) return canonical_section(e);
  Section s = io::section_from_json(load(*path).node(), e);
  check_section(e, s);
  return s;
}

void emit(const std::optional<std::string>& path, const Json& j) {
  if (path) io::write_file(*path, j);
}

void print_report(std::ostream& out, const ValidationReport& r) {
  Table t;
  t.row({"check", "result", "witness"});
  for (const auto& c : r.checks) {
    if (c.passed) {
      t.row({c.name, "PASS"});
    } else {
      t.row({c.name, "FAIL", c.witness + "  lhs " + show(c.lhs) + "  rhs " + show(c.rhs)});
    }
  }
  t.print(out);
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

struct Options {
  bool json = false;
  std::string file1, file2, file3;
  std::optional<std::string> emit, rep, section, mubar, emit_basis;
  std::optional<std::uint64_t> section_seed;
  int degree = 0;
  bool require_extensible = false;
};

int cmd_validate(const Options& o, std::ostream& out) {
  StrictLie2Algebra g = load_algebra(o.file1);
  ValidationReport r = validate_algebra(g);
  if (o.json) {
    Json j{{"dim0", g.dim0()}, {"dim1", g.dim1()}, {"axioms", verdict(r.passed())}};
    j["checks"] = io::report_to_json(r)["checks"];
    out << io::dump(j);
  } else {
    print_report(out, r);
    out << "axioms a–d: " << verdict(r.passed()) << "\n";
  }
  return r.passed() ? 0 : 1;
}

int cmd_derivations(const Options& o, std::ostream& out) {
  StrictLie2Algebra g = load_algebra(o.file1);
  DerivationSpaces s = sder_spaces(g);
  const std::vector<std::pair<std::string, std::size_t>> dims{
      {"sder0", s.sder0.dim()}, {"sder1", s.sder1.dim()}, {"sinn0", s.sinn0.dim()}, {"sinn1", s.sinn1.dim()},
      {"sout0", s.sout0.dim()}, {"sout1", s.sout1.dim()}, {"cen0", s.cen0.dim()},   {"cen1", s.cen1.dim()}};
  if (o.json) {
    Json j;
    for (const auto& [k, v] : dims) j[k] = v;
    out << io::dump(j);
  } else {
    Table t;
    t.row({"space", "dim"});
    for (const auto& [k, v] : dims) t.row({k, std::to_string(v)});
    t.print(out);
  }
  if (o.emit_basis) {
    auto vecs = [](const SubspaceBasis& b) {
      Json a = Json::array();
      for (const auto& v : b.vectors()) a.push_back(io::to_json(v));
      return a;
    };
    Json b{{"sder0", vecs(s.sder0)}, {"sder1", vecs(s.sder1)},
           {"sinn0", vecs(s.sinn0)}, {"sinn1", vecs(s.sinn1)},
           {"sout0", vecs(s.sout0.complement())}, {"sout1", vecs(s.sout1.complement())},
           {"cen0", vecs(s.cen0)}, {"cen1", vecs(s.cen1)}};
    io::write_file(*o.emit_basis, b);
  }
  return 0;
}

int cmd_cohomology(const Options& o, std::ostream& out) {
  StrictLie2Algebra g = load_algebra(o.file1);
  require_passed(validate_algebra(g), "algebra");
  Representation2 rho = adjoint_representation(g);
  if (o.rep) {
    rho = io::representation_from_json(load(*o.rep).node(), g);
    require_passed(validate_representation(g, rho), "representation");
  }
  CohomologyData h = cohomology_basis(g, rho, o.degree);
  const std::vector<std::pair<std::string, std::size_t>> dims{{"cochains", h.shape->dim()},
                                                              {"cocycles", h.cocycles.dim()},
                                                              {"coboundaries", h.coboundaries.dim()},
                                                              {"betti", h.betti}};
  if (o.json) {
    Json j{{"degree", o.degree}};
    for (const auto& [k, v] : dims) j[k] = v;
    out << io::dump(j);
  } else {
    Table t;
    t.row({"degree", std::to_string(o.degree)});
    for (const auto& [k, v] : dims) t.row({k, std::to_string(v)});
    t.print(out);
  }
  if (o.emit) {
    Json basis = Json::array();
    for (const auto& c : h.reps) basis.push_back(io::cochain_to_json(c));
    io::write_file(*o.emit, Json{{"degree", o.degree}, {"basis", basis}});
  }
  return 0;
}

int cmd_extend(const Options& o, std::ostream& out) {
  StrictLie2Algebra g = load_algebra(o.file1);
  StrictLie2Algebra h = load_algebra(o.file2);
  require_passed(validate_algebra(g), "g");
  require_passed(validate_algebra(h), "h");
  ExtensionData d = io::extension_data_from_json(load(o.file3).node(), g, h);
  ValidationReport r = check_extension_data(g, h, d);
  std::optional<Extension> e;
  if (r.passed()) e = build_total(g, h, d);
  if (o.json) {
    Json j{{"conditions", verdict(r.passed())}};
    j["checks"] = io::report_to_json(r)["checks"];
    if (e) j["total_dims"] = Json::array({e->total.dim0(), e->total.dim1()});
    out << io::dump(j);
  } else {
    print_report(out, r);
    out << "conditions p1–p13: " << verdict(r.passed()) << "\n";
    if (e) out << "total dims: (" << e->total.dim0() << ", " << e->total.dim1() << ")\n";
  }
  if (e) emit(o.emit, io::extension_to_json(*e));
  return r.passed() ? 0 : 1;
}

int cmd_extract(const Options& o, std::ostream& out) {
  Extension e = load_extension(o.file1);
  ExtensionData d = extract_data(e, load_section(o.section, e));
  Json j = io::extension_data_to_json(d);
  if (o.json) {
    out << io::dump(j);
  } else {
    Table t;
    t.row({"table", "entries"});
    for (const auto& [k, v] : j.items()) t.row({k, std::to_string(v.size())});
    t.print(out);
  }
  emit(o.emit, j);
  return 0;
}

int cmd_outer_hom(const Options& o, std::ostream& out) {
  Extension e = load_extension(o.file1);
  ExtensionData d = extract_data(e, load_section(o.section, e));
  OuterHom m = induced_outer_hom(e.g, e.h, d);
  Json j = io::outer_hom_to_json(m);
  if (o.json) {
    out << io::dump(j);
  } else {
    Table t;
    t.row({"basis", "SOut coordinates"});
    for (std::size_t i = 0; i < m.f0.cols(); ++i) t.row({e.g.complex().labels0[i], show(m.f0.column(i))});
    for (std::size_t i = 0; i < m.f1.cols(); ++i) t.row({e.g.complex().labels1[i], show(m.f1.column(i))});
    t.print(out);
  }
  emit(o.emit, j);
  return 0;
}

struct HomInput {
  StrictLie2Algebra g, h;
  OuterHom m;
};

HomInput load_hom_input(const Options& o) {
  StrictLie2Algebra g = load_algebra(o.file1);
  StrictLie2Algebra h = load_algebra(o.file2);
  require_passed(validate_algebra(g), "g");
  require_passed(validate_algebra(h), "h");
  DerivationSpaces hs = sder_spaces(h);
  OuterHom m = io::outer_hom_from_json(load(*o.mubar).node(), g, hs);
  return {std::move(g), std::move(h), std::move(m)};
}

int cmd_obstruction(const Options& o, std::ostream& out) {
  HomInput in = load_hom_input(o);
  LiftOptions lo;
  lo.section_seed = o.section_seed;
  ObstructionReport r = obstruction_class(in.g, in.h, in.m, lo);
  if (o.json) {
    out << io::dump(Json{{"extensible", r.extensible},
                         {"h3_dim", r.h3_dim},
                         {"class", io::to_json(r.class_coords)},
                         {"omega", io::cochain_to_json(r.omega)}});
  } else {
    Table t;
    t.row({"center dims", "(" + std::to_string(r.center.cen0.dim()) + ", " + std::to_string(r.center.cen1.dim()) + ")"});
    t.row({"h3_dim", std::to_string(r.h3_dim)});
    t.row({"class", show(r.class_coords)});
    t.row({"extensible", r.extensible ? "yes" : "no"});
    t.print(out);
  }
  emit(o.emit, io::cochain_to_json(r.omega));
  return (o.require_extensible && !r.extensible) ? 1 : 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  HomInput in = load_hom_input(o);
  Classification c = classify(in.g, in.h, in.m);
  if (o.json) {
    Json basis = Json::array();
    for (const auto& b : c.basis()) basis.push_back(io::cochain_to_json(b));
    out << io::dump(Json{{"h2_dim", c.dim()}, {"basis", basis}});
  } else {
    Table t;
    t.row({"h2_dim", std::to_string(c.dim())});
    t.print(out);
  }
  if (o.emit) {
    std::vector<Rational> zero(c.dim());
    emit(o.emit, io::extension_to_json(c.make_extension(zero)));
  }
  return 0;
}

int cmd_iso_check(const Options& o, std::ostream& out) {
  Extension a = load_extension(o.file1);
  Extension b = load_extension(o.file2);
  std::optional<IsoWitness> w = iso_witness(a, b);
  if (o.json) {
    out << io::dump(Json{{"isomorphic", w.has_value()}, {"witness", w ? io::witness_to_json(*w) : Json()}});
  } else {
    out << "isomorphic: " << (w ? "yes" : "no") << "\n";
    if (w) {
      Table t;
      t.row({"basis", "xi / eta"});
      for (std::size_t i = 0; i < w->xi.cols(); ++i) t.row({a.g.complex().labels0[i], show(w->xi.column(i))});
      for (std::size_t i = 0; i < w->eta.cols(); ++i) t.row({a.g.complex().labels1[i], show(w->eta.column(i))});
      t.print(out);
    }
  }
  emit(o.emit, w ? io::witness_to_json(*w) : Json());
  return w ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strict Lie 2-algebras: derivations, cohomology and non-abelian extensions", "lie2ext"};
  app.require_subcommand(1);
  Options o;

  auto json_flag = [&](CLI::App* c) { c->add_flag("--json", o.json, "machine-readable output"); };
  auto emit_opt = [&](CLI::App* c, const std::string& what) { c->add_option("--emit", o.emit, what); };

  auto* validate = app.add_subcommand("validate", "check the Lie 2-algebra axioms");
  validate->add_option("algebra", o.file1)->required();
  json_flag(validate);

  auto* derivations = app.add_subcommand("derivations", "dimensions of SDer, SInn, SOut and the center");
  derivations->add_option("algebra", o.file1)->required();
  derivations->add_option("--emit-basis", o.emit_basis, "write the basis vectors to this file");
  json_flag(derivations);

  auto* cohomology = app.add_subcommand("cohomology", "cohomology with coefficients in a representation");
  cohomology->add_option("algebra", o.file1)->required();
  cohomology->add_option("--degree", o.degree)->required()->check(CLI::Range(0, 3));
  cohomology->add_option("--rep", o.rep, "representation file (default: adjoint)");
  emit_opt(cohomology, "write representative cocycles to this file");
  json_flag(cohomology);

  auto* extend = app.add_subcommand("extend", "check extension data and build the total algebra");
  extend->add_option("base", o.file1, "the algebra g")->required();
  extend->add_option("kernel", o.file2, "the algebra h")->required();
  extend->add_option("data", o.file3)->required();
  emit_opt(extend, "write the extension to this file");
  json_flag(extend);

  auto* extract = app.add_subcommand("extract", "read extension data off an extension");
  extract->add_option("extension", o.file1)->required();
  extract->add_option("--section", o.section, "section file (default: the block inclusion)");
  emit_opt(extract, "write the data to this file");
  json_flag(extract);

  auto* outer = app.add_subcommand("outer-hom", "the induced homomorphism g -> SOut(h)");
  outer->add_option("extension", o.file1)->required();
  outer->add_option("--section", o.section, "section file (default: the block inclusion)");
  emit_opt(outer, "write the homomorphism to this file");
  json_flag(outer);

  auto* obstruction = app.add_subcommand("obstruction", "obstruction class of an outer homomorphism");
  obstruction->add_option("base", o.file1, "the algebra g")->required();
  obstruction->add_option("kernel", o.file2, "the algebra h")->required();
  obstruction->add_option("--mubar", o.mubar)->required();
  obstruction->add_option("--section-seed", o.section_seed, "random section of SDer(h) -> SOut(h)");
  obstruction->add_flag("--require-extensible", o.require_extensible, "exit 1 when not extensible");
  emit_opt(obstruction, "write the obstruction cocycle to this file");
  json_flag(obstruction);

  auto* cls = app.add_subcommand("classify", "extensions realizing an outer homomorphism");
  cls->add_option("base", o.file1, "the algebra g")->required();
  cls->add_option("kernel", o.file2, "the algebra h")->required();
  cls->add_option("--mubar", o.mubar)->required();
  emit_opt(cls, "write the base extension to this file");
  json_flag(cls);

  auto* iso = app.add_subcommand("iso-check", "search for an isomorphism of extensions");
  iso->add_option("first", o.file1)->required();
  iso->add_option("second", o.file2)->required();
  emit_opt(iso, "write the witness to this file");
  json_flag(iso);

  if (!args.empty() && !args[0].starts_with("-")) {
    bool known = false;
    for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == args[0];
    if (!known) {
      err << "input error: unknown verb \"" << args[0] << "\" (run with --help for the list)\n";
      return 2;
    }
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*derivations) return cmd_derivations(o, out);
    if (*cohomology) return cmd_cohomology(o, out);
    if (*extend) return cmd_extend(o, out);
    if (*extract) return cmd_extract(o, out);
    if (*outer) return cmd_outer_hom(o, out);
    if (*obstruction) return cmd_obstruction(o, out);
    if (*cls) return cmd_classify(o, out);
    if (*iso) return cmd_iso_check(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    err << "math error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace lie2::cli
