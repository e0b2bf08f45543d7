#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lie2/linalg.hpp"

namespace lie2 {

/// V1 --partial--> V0.
struct TwoTermComplex {
  std::size_t dim0 = 0;
  std::size_t dim1 = 0;
  Matrix partial;  // dim0 x dim1
  std::vector<std::string> labels0;
  std::vector<std::string> labels1;

  TwoTermComplex() = default;
  TwoTermComplex(std::size_t d0, std::size_t d1);
  TwoTermComplex(std::size_t d0, std::size_t d1, Matrix partial_map);
  void check_shape() const;
};

std::vector<std::string> default_labels(const std::string& prefix, std::size_t n);

/// Pair (X0, X1) of endomorphisms of V0 and V1.
struct Degree0Endo {
  Matrix x0;
  Matrix x1;
  friend bool operator==(const Degree0Endo&, const Degree0Endo&) = default;
};

/// A map V0 -> V1, stored as a dim1 x dim0 matrix.
struct Degree1Endo {
  Matrix d;
  friend bool operator==(const Degree1Endo&, const Degree1Endo&) = default;
};

Degree0Endo operator+(const Degree0Endo& a, const Degree0Endo& b);
Degree0Endo operator-(const Degree0Endo& a, const Degree0Endo& b);
Degree0Endo operator*(const Rational& s, const Degree0Endo& a);

/// ([X0,Y0], [X1,Y1]).
Degree0Endo bracket(const Degree0Endo& x, const Degree0Endo& y);
/// X1 D - D X0.
Degree1Endo bracket(const Degree0Endo& x, const Degree1Endo& d);

/// Coordinates on End(V): a pair (X0, X1) flattens to X0 then X1 (row-major,
/// length dim0^2 + dim1^2); a degree-1 map D flattens row-major
/// (length dim1 * dim0).
class EndCoordinates {
 public:
  explicit EndCoordinates(const TwoTermComplex& v) : v_(v) {}

  std::size_t pair_dim() const { return v_.dim0 * v_.dim0 + v_.dim1 * v_.dim1; }
  std::size_t hom_dim() const { return v_.dim1 * v_.dim0; }

  Vector pack(const Degree0Endo& x) const;
  Vector pack(const Degree1Endo& d) const;
  Degree0Endo unpack_pair(std::span<const Rational> v) const;
  Degree1Endo unpack_hom(std::span<const Rational> v) const;

  /// (partial o D, D o partial).
  Degree0Endo delta(const Degree1Endo& d) const;
  /// The subspace {X0 partial = partial X1} in pair coordinates.
  SubspaceBasis end0_partial() const;

  const TwoTermComplex& complex() const { return v_; }

 private:
  TwoTermComplex v_;
};

/// A strict Lie 2-algebra g1 --d--> g0 given by structure constants.
/// Only [g0, g0] and [g0, g1] are stored; [a, x] is -[x, a] and the g1 x g1
/// bracket is identically zero.
class StrictLie2Algebra {
 public:
  StrictLie2Algebra() = default;
  explicit StrictLie2Algebra(TwoTermComplex complex);

  std::size_t dim0() const { return complex_.dim0; }
  std::size_t dim1() const { return complex_.dim1; }
  const TwoTermComplex& complex() const { return complex_; }
  const Matrix& d() const { return complex_.partial; }

  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket00(std::size_t i, std::size_t j, const Vector& v);
  /// Sets only the (i, j) table entry; used by parsers so that an
  /// inconsistent table reaches the validator instead of being repaired.
  void set_bracket00_entry(std::size_t i, std::size_t j, const Vector& v);
  void set_bracket01(std::size_t i, std::size_t alpha, const Vector& v);

  const Vector& bracket00(std::size_t i, std::size_t j) const { return c00_[i * dim0() + j]; }
  const Vector& bracket01(std::size_t i, std::size_t alpha) const { return c01_[i * dim1() + alpha]; }

  /// [x, y] for x, y in g0.
  Vector bracket(const Vector& x, const Vector& y) const;
  /// [x, a] for x in g0, a in g1.
  Vector bracket_mixed(const Vector& x, const Vector& a) const;
  Vector differential(const Vector& a) const { return d().apply(a); }

  /// y -> [x, y] on g0.
  Matrix ad00(const Vector& x) const;
  /// a -> [x, a] on g1.
  Matrix ad01(const Vector& x) const;
  /// x -> [a, x], a map g0 -> g1.
  Matrix ad1(const Vector& a) const;

  friend bool operator==(const StrictLie2Algebra&, const StrictLie2Algebra&);

 private:
  TwoTermComplex complex_;
  std::vector<Vector> c00_;  // dim0 x dim0 table of g0 vectors
  std::vector<Vector> c01_;  // dim0 x dim1 table of g1 vectors
};

/// f = (f0: g0 -> g0', f1: g1 -> g1').
struct StrictHom {
  Matrix f0;
  Matrix f1;
  friend bool operator==(const StrictHom&, const StrictHom&) = default;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string witness;  // labels of the first violating basis tuple
  Vector lhs;
  Vector rhs;
};

/// Per-condition PASS or the first violating basis tuple with both sides.
struct ValidationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult& at(const std::string& name) const;
  std::vector<std::string> failing() const;

  /// Registers a condition (passing until a violation is recorded).
  void add(const std::string& name);
  /// Records lhs == rhs for the named condition; only the first violation
  /// is kept.
  void expect(const std::string& name, const std::string& witness, const Vector& lhs,
              const Vector& rhs);
  void merge(const ValidationReport& other);
};

/// Checks skew-symmetry and axioms (a)-(d).
ValidationReport validate_algebra(const StrictLie2Algebra& a);
/// Checks d'f1 = f0 d, f0[x,y] = [f0 x, f0 y], f1[x,a] = [f0 x, f1 a].
ValidationReport validate_homomorphism(const StrictHom& f, const StrictLie2Algebra& source,
                                       const StrictLie2Algebra& target);

/// The sub-Lie-2-algebra of End(V) spanned by deg0 (pair coordinates, must
/// lie in End0_partial) and deg1 (degree-1 coordinates), expressed in those
/// bases. Throws MathError when the subspaces are not closed.
StrictLie2Algebra realize_in_end(const TwoTermComplex& v, const SubspaceBasis& deg0,
                                 const SubspaceBasis& deg1, const std::string& prefix0,
                                 const std::string& prefix1);

/// End(V) with End0 = {X0 partial = partial X1} (canonical kernel basis) and
/// End1 = Hom(V0, V1) (elementary matrices, row-major).
StrictLie2Algebra end_algebra(const TwoTermComplex& v);

/// Throws MathError with the failing condition names when the report fails.
void require_passed(const ValidationReport& report, const std::string& what);

}  // namespace lie2
