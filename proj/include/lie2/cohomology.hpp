#pragma once

#include <optional>
#include <vector>

#include "lie2/algebra.hpp"
#include "lie2/cochain.hpp"

namespace lie2 {

/// rho = (rho0, rho1): g -> End(V), one endomorphism per basis element.
///
/// Nothing here requires rho to be a homomorphism; coboundary() happily
/// evaluates the formulas for any assignment, which is what the obstruction
/// computation relies on.
struct Representation2 {
  TwoTermComplex target;
  std::vector<Degree0Endo> rho0;  // indexed by g0 basis
  std::vector<Degree1Endo> rho1;  // indexed by g1 basis

  Degree0Endo act0(std::span<const Rational> x) const;
  Degree1Endo act1(std::span<const Rational> a) const;
};

/// Checks End0 membership and the three homomorphism conditions:
/// "End0", "delta rho1 = rho0 d", "rho0 bracket", "rho1 bracket".
ValidationReport validate_representation(const StrictLie2Algebra& g, const Representation2& rho);

Representation2 adjoint_representation(const StrictLie2Algebra& g);
/// Zero action on V.
Representation2 trivial_representation(const StrictLie2Algebra& g, const TwoTermComplex& v);

struct ComponentDim {
  int p;
  int q;
  int s;
  std::size_t dim;
};

/// Admissible components of C^i with their dimensions (0 <= i <= 4).
std::vector<ComponentDim> cochain_space(const StrictLie2Algebra& g, const Representation2& rho, int i);
ShapePtr cochain_shape(const StrictLie2Algebra& g, const Representation2& rho, int i);

/// D_rho f. Requires f.degree() <= 3 and a shape matching (g, rho).
Cochain coboundary(const StrictLie2Algebra& g, const Representation2& rho, const Cochain& f);
/// Matrix of D_rho : C^i -> C^{i+1} in flat cochain coordinates.
Matrix coboundary_matrix(const StrictLie2Algebra& g, const Representation2& rho, int i);

struct CohomologyData {
  int degree = 0;
  ShapePtr shape;
  SubspaceBasis cocycles;
  SubspaceBasis coboundaries;
  QuotientData quotient;      // H^i = Z^i / B^i
  std::vector<Cochain> reps;  // lifts of the unit class coordinates
  std::size_t betti = 0;
};

/// Z^i, B^i and a representative basis of H^i for 0 <= i <= 3.
CohomologyData cohomology_basis(const StrictLie2Algebra& g, const Representation2& rho, int i);

/// Coordinates of [z] in the representative basis, or nullopt when z is not
/// a cocycle.
std::optional<Vector> class_coordinates(const CohomologyData& h, const Cochain& z);
std::optional<Vector> class_coordinates(const StrictLie2Algebra& g, const Representation2& rho, const Cochain& z);

/// A degree-1 cochain from its two parts: on_g0 (m0 x n0) fills (1,0,0) and
/// on_g1 (m1 x n1) fills (0,1,1).
Cochain degree1_cochain(const ShapePtr& shape, const Matrix& on_g0, const Matrix& on_g1);
/// Inverse of degree1_cochain.
std::pair<Matrix, Matrix> degree1_parts(const Cochain& f);

}  // namespace lie2
