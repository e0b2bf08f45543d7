#pragma once

#include <optional>
#include <vector>

#include "lie2/algebra.hpp"
#include "lie2/derivations.hpp"

namespace lie2 {

/// The maps a section of an extension h -> E -> g induces:
///   mu0_0(x) = [s x, .] on h0,  mu0_1(x) = [s x, .] on h1,  mu1(a) = [s a, .] : h0 -> h1,
///   phi(a) = d s(a) - s(d a),  omega(x, y) = [s x, s y] - s[x, y],  nu(x, a) = [s x, s a] - s[x, a].
/// nu is stored on (g0, g1) index pairs; nu(a, x) means -nu(x, a).
struct ExtensionData {
  std::size_t n0 = 0, n1 = 0;  // dims of g
  std::size_t m0 = 0, m1 = 0;  // dims of h
  std::vector<Matrix> mu0_0;   // per g0 basis, m0 x m0
  std::vector<Matrix> mu0_1;   // per g0 basis, m1 x m1
  std::vector<Matrix> mu1;     // per g1 basis, m1 x m0
  Matrix phi;                  // m0 x n1
  std::vector<Vector> omega;   // n0 x n0 table of h0 vectors, antisymmetric
  std::vector<Vector> nu;      // n0 x n1 table of h1 vectors

  ExtensionData() = default;
  /// All-zero data (the direct product).
  ExtensionData(std::size_t g0, std::size_t g1, std::size_t h0, std::size_t h1);

  const Vector& omega_at(std::size_t i, std::size_t j) const { return omega[i * n0 + j]; }
  const Vector& nu_at(std::size_t i, std::size_t alpha) const { return nu[i * n1 + alpha]; }
  /// Sets omega(i, j) = v and omega(j, i) = -v.
  void set_omega(std::size_t i, std::size_t j, const Vector& v);
  void set_nu(std::size_t i, std::size_t alpha, const Vector& v) { nu[i * n1 + alpha] = v; }

  // Bilinear extensions to arbitrary arguments.
  Degree0Endo mu0(std::span<const Rational> x) const;
  Matrix mu1_of(std::span<const Rational> a) const;
  Vector omega_of(std::span<const Rational> x, std::span<const Rational> y) const;
  Vector nu_of(std::span<const Rational> x, std::span<const Rational> a) const;

  /// Throws InputError unless every table has the declared shape.
  void check_shape() const;

  friend bool operator==(const ExtensionData&, const ExtensionData&) = default;
};

/// An extension in block layout: total_k = g_k (+) h_k with the g-block first.
struct Extension {
  StrictLie2Algebra g;
  StrictLie2Algebra h;
  StrictLie2Algebra total;
  StrictHom incl;  // h -> total
  StrictHom proj;  // total -> g
};

struct Section {
  Matrix sigma0;  // total0 x n0
  Matrix sigma1;  // total1 x n1
};

/// theta0(x + u) = x + xi(x) + u, theta1(a + m) = a + eta(a) + m, mapping the
/// first extension's total onto the second's.
struct IsoWitness {
  Matrix xi;   // m0 x n0
  Matrix eta;  // m1 x n1
};

/// g -> SOut(h): columns are SOut coordinates (see DerivationSpaces).
using OuterHom = StrictHom;

/// Conditions (p1)..(p13) on the data, named "p1".."p13".
ValidationReport check_extension_data(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const ExtensionData& d);

/// The bracket and differential on g (+) h defined by the data, without
/// checking anything beyond shapes.
Extension assemble_total(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const ExtensionData& d);
/// assemble_total after check_extension_data; throws MathError when the data fail.
Extension build_total(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const ExtensionData& d);

/// Reads g and h back out of a block-layout total algebra.
Extension from_total(const StrictLie2Algebra& total, std::size_t n0, std::size_t n1);

Section canonical_section(const Extension& e);
/// Throws InputError unless p o s = id in both degrees.
void check_section(const Extension& e, const Section& s);
ExtensionData extract_data(const Extension& e, const Section& s);

/// Homomorphism checks on incl and proj, p o i = 0, i injective, p onto,
/// im i = ker p.
ValidationReport check_exactness(const Extension& e);

/// mu composed with the quotient SDer(h) -> SOut(h); validated as a
/// homomorphism into outer_algebra(h). Throws MathError when mu leaves SDer(h).
OuterHom induced_outer_hom(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const ExtensionData& d);
OuterHom induced_outer_hom(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const DerivationSpaces& hs,
                           const ExtensionData& d);

/// The homomorphism theta between the totals (src -> dst) that a witness describes.
StrictHom witness_map(const Extension& src, const Extension& dst, const IsoWitness& w);
/// theta is a strict homomorphism, commutes with inclusions and projections,
/// and is invertible.
ValidationReport check_iso_witness(const Extension& src, const Extension& dst, const IsoWitness& w);

/// Searches for an isomorphism src -> dst of the form above. xi and eta are
/// determined up to central maps by the mu data; the remaining equations are
/// linear in the central part, so the search is exact and complete.
std::optional<IsoWitness> iso_witness(const Extension& src, const Extension& dst);
/// The same search restricted to the case of equal mu data, where xi and eta
/// take values in the center. Throws InputError when the mu data differ.
std::optional<IsoWitness> central_iso_witness(const Extension& src, const Extension& dst);

}  // namespace lie2
