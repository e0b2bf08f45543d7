#pragma once

#include <string>

#include <json.hpp>

#include "lie2/cohomology.hpp"
#include "lie2/derivations.hpp"
#include "lie2/extensions.hpp"
#include "lie2/obstruction.hpp"

namespace lie2::io {

using Json = nlohmann::ordered_json;

/// Reading context: the file name and the JSON pointer of the current node,
/// used to point at the offending element in error messages.
class Node {
 public:
  Node(const Json& j, std::string file, std::string path = "") : j_(&j), file_(std::move(file)), path_(std::move(path)) {}

  const Json& json() const { return *j_; }
  const std::string& path() const { return path_; }
  Node operator[](const char* key) const;
  Node operator[](std::size_t i) const;
  bool has(const char* key) const;
  std::size_t size() const;

  std::size_t as_index(std::size_t bound) const;  // 0 <= value < bound
  std::size_t as_size() const;
  std::string as_string() const;
  Rational as_scalar() const;
  Vector as_vector(std::size_t n) const;
  Matrix as_matrix(std::size_t rows, std::size_t cols) const;
  std::vector<std::size_t> as_indices(std::size_t bound) const;

  [[noreturn]] void fail(const std::string& msg) const;

 private:
  const Json* j_;
  std::string file_;
  std::string path_;
};

/// Parses a file; InputError names the file on failure.
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);
/// Two-space indented with scalar arrays and matrices on one line, trailing
/// newline.
std::string dump(const Json& j);

Json to_json(const Rational& r);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);

Json algebra_to_json(const StrictLie2Algebra& g);
StrictLie2Algebra algebra_from_json(const Node& n);

Json complex_to_json(const TwoTermComplex& v);
TwoTermComplex complex_from_json(const Node& n);

Json representation_to_json(const Representation2& rho);
Representation2 representation_from_json(const Node& n, const StrictLie2Algebra& g);

/// Only nonzero entries at canonical tuples are written.
Json cochain_to_json(const Cochain& f);
Cochain cochain_from_json(const Node& n, const ShapePtr& shape);

Json extension_data_to_json(const ExtensionData& d);
ExtensionData extension_data_from_json(const Node& n, const StrictLie2Algebra& g, const StrictLie2Algebra& h);

Json extension_to_json(const Extension& e);
Extension extension_from_json(const Node& n);

Json section_to_json(const Section& s);
Section section_from_json(const Node& n, const Extension& e);

/// {"barmu0": [coords per g0 basis], "barmu1": [coords per g1 basis]}.
Json outer_hom_to_json(const OuterHom& m);
OuterHom outer_hom_from_json(const Node& n, const StrictLie2Algebra& g, const DerivationSpaces& hs);

Json witness_to_json(const IsoWitness& w);

Json report_to_json(const ValidationReport& r);

}  // namespace lie2::io
