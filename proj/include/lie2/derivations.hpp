#pragma once

#include "lie2/algebra.hpp"

namespace lie2 {

/// Derivation, inner-derivation and center subspaces of a strict Lie
/// 2-algebra g, plus the outer quotients.
///
/// Degree-0 derivations live in End(g) pair coordinates (X0 then X1,
/// row-major), degree-1 derivations in Hom(g0, g1) coordinates; see
/// EndCoordinates. The outer quotient SOut = SDer / SInn is represented by a
/// pivot-greedy complement of SInn inside SDer.
struct DerivationSpaces {
  SubspaceBasis sder0;
  SubspaceBasis sder1;
  SubspaceBasis sinn0;  // image of ad0
  SubspaceBasis sinn1;  // image of ad1
  SubspaceBasis cen0;   // kernel of ad0, inside g0
  SubspaceBasis cen1;   // kernel of ad1, inside g1
  QuotientData sout0;
  QuotientData sout1;
};

/// ad0(x) = ([x, .] on g0, [x, .] on g1).
Degree0Endo ad0(const StrictLie2Algebra& g, const Vector& x);
/// ad1(a) = [a, .] : g0 -> g1.
Degree1Endo ad1(const StrictLie2Algebra& g, const Vector& a);

/// Matrix of x -> ad0(x) into pair coordinates (pair_dim x dim0).
Matrix ad0_matrix(const StrictLie2Algebra& g);
/// Matrix of a -> ad1(a) into Hom(g0, g1) coordinates (hom_dim x dim1).
Matrix ad1_matrix(const StrictLie2Algebra& g);

/// Throws MathError if g fails validation.
DerivationSpaces sder_spaces(const StrictLie2Algebra& g);

/// SDer1(g) --delta--> SDer0(g) with the commutator brackets, in the
/// canonical sder bases.
StrictLie2Algebra derivation_algebra(const StrictLie2Algebra& g);
StrictLie2Algebra derivation_algebra(const StrictLie2Algebra& g, const DerivationSpaces& s);

/// (ad0, ad1) as a homomorphism g -> derivation_algebra(g).
StrictHom adjoint_hom(const StrictLie2Algebra& g);

/// SOut(g) = SDer(g) / SInn(g) in quotient coordinates.
StrictLie2Algebra outer_algebra(const StrictLie2Algebra& g, const DerivationSpaces& s);

/// Checks, on every pair (basis derivation, basis element):
///   [X, ad1(a)] = ad1(X1 a),  [X, ad0(x)] = ad0(X0 x),  [Theta, ad0(x)] = ad1(Theta x).
ValidationReport check_inner_ideal_identities(const StrictLie2Algebra& g);
/// Same, with derivation bases supplied by the caller (they need not be
/// derivations of g; that is how a broken table gets caught).
ValidationReport check_inner_ideal_identities(const StrictLie2Algebra& g, const DerivationSpaces& s);

}  // namespace lie2
