#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lie2/cohomology.hpp"
#include "lie2/derivations.hpp"
#include "lie2/extensions.hpp"

namespace lie2 {

/// Alternative choices for the lift. Without seeds the section of
/// SDer(h) -> SOut(h) is the complement inclusion and phi, omega, nu are the
/// free-variables-to-zero solutions.
struct LiftOptions {
  std::optional<std::uint64_t> section_seed;   // adds random inner derivations to the section
  std::optional<std::uint64_t> solution_seed;  // adds random central values to phi, omega, nu
};

/// mu = s o mbar with phi, omega, nu solving
///   delta(mu1(a)) - mu0(d a) = ad0(phi(a)),
///   [mu0(x), mu0(y)] - mu0([x, y]) = ad0(omega(x, y)),
///   [mu1(a), mu0(x)] - mu1([a, x]) = ad1(nu(a, x)).
struct LiftedData {
  ExtensionData data;
  std::string section_id;
};

/// The center of h as a 2-term complex, with its bases inside h.
struct CenterComplex {
  SubspaceBasis cen0;
  SubspaceBasis cen1;
  TwoTermComplex complex;  // d_h restricted, in cen-basis coordinates
};

CenterComplex center_complex(const StrictLie2Algebra& h, const DerivationSpaces& hs);

/// Throws MathError unless m is a strict homomorphism g -> SOut(h).
void check_outer_hom(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const DerivationSpaces& hs,
                     const OuterHom& m);

LiftedData lift_outer_hom(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const DerivationSpaces& hs,
                          const OuterHom& m, const LiftOptions& opts = {});
LiftedData lift_outer_hom(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const OuterHom& m,
                          const LiftOptions& opts = {});

/// (mu0, mu1) of the data read as an assignment g -> End(h); not a
/// representation in general.
Representation2 formal_representation(const StrictLie2Algebra& h, const ExtensionData& d);
/// phi + omega + nu as a degree-2 cochain over formal_representation.
Cochain lambda_cochain(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const ExtensionData& d);
/// The four obstruction components as a degree-3 cochain with values in h:
///   (1,1,0)  mu0(x) phi(a) - phi([x,a]) + omega(x, d a) - d_h nu(x,a)
///   (0,2,1)  mu1(a) phi(b) + mu1(b) phi(a) - nu(d a, b) - nu(d b, a)
///   (3,0,0)  mu0(x) omega(y,z) - omega([x,y], z) + c.p.
///   (2,1,1)  mu1(a) omega(x,y) + mu^1(x) nu(y,a) - mu^1(y) nu(x,a) - (nu([x,y],a) + c.p.)
Cochain omega_cochain(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const ExtensionData& d);

/// mu restricted to the center of h.
Representation2 restrict_to_center(const StrictLie2Algebra& g, const CenterComplex& c, const ExtensionData& d);
Representation2 induced_center_rep(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const OuterHom& m);

struct ObstructionReport {
  LiftedData lift;
  CenterComplex center;
  Representation2 muhat;
  Cochain omega;        // degree 3 over muhat, values in cen-basis coordinates
  Vector class_coords;  // coordinates of [omega] in H^3
  std::size_t h3_dim = 0;
  bool extensible = false;
};

/// Throws MathError if m is not a homomorphism, if a value of omega leaves
/// the center, or if omega fails to be a cocycle.
ObstructionReport obstruction_class(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const OuterHom& m,
                                    const LiftOptions& opts = {});

/// Adds sign * tau to (phi, omega, nu), where tau is a degree-2 cochain over
/// the center representation.
ExtensionData shift_data(const ExtensionData& d, const CenterComplex& c, const Cochain& tau, const Rational& sign);

struct Extensibility {
  bool extensible = false;
  ObstructionReport report;
  std::optional<ExtensionData> data;  // (mu, phi - s1, omega - s2, nu - s3) with D(s) = omega
};

Extensibility is_extensible(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const OuterHom& m,
                            const LiftOptions& opts = {});

/// Extensions with outer class m, parameterized by H^2 over the center.
struct Classification {
  StrictLie2Algebra g;
  StrictLie2Algebra h;
  CenterComplex center;
  Representation2 muhat;
  ExtensionData base;
  CohomologyData h2;

  std::size_t dim() const { return h2.betti; }
  const std::vector<Cochain>& basis() const { return h2.reps; }
  /// base shifted by sum_i t_i basis[i].
  ExtensionData data_at(std::span<const Rational> t) const;
  Extension make_extension(std::span<const Rational> t) const;
};

/// Throws MathError when m is not extensible.
Classification classify(const StrictLie2Algebra& g, const StrictLie2Algebra& h, const OuterHom& m,
                        const LiftOptions& opts = {});

}  // namespace lie2
