#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lie2/rational.hpp"

namespace lie2 {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Vector& axpy(Vector& y, const Rational& a, const Vector& x);  // y += a*x
std::string to_string(const Vector& v);

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  /// Inverse of flatten(): entries are read row-major.
  static Matrix unflatten(std::size_t rows, std::size_t cols, std::span<const Rational> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  const Vector& flatten() const { return data_; }

  Vector apply(std::span<const Rational> v) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

/// Commutator a*b - b*a of square matrices.
Matrix commutator(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix reduced;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// nullopt when m is singular or not square.
std::optional<Matrix> inverse(const Matrix& m);

/// Matrix of a linear map given as a function, by evaluating it on the
/// standard basis of the source.
Matrix matrix_of(std::size_t in_dim, std::size_t out_dim,
                 const std::function<Vector(const Vector&)>& f);

/// A subspace of Q^n stored as the nonzero rows of its reduced row echelon
/// form. Equal subspaces compare equal as values.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static SubspaceBasis span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static SubspaceBasis full(std::size_t ambient_dim);
  /// Column space of m.
  static SubspaceBasis image(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return vectors_.size(); }
  const std::vector<Vector>& vectors() const { return vectors_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Rational> v) const;
  bool contains(const SubspaceBasis& other) const;
  /// Coordinates of v in this basis, or nullopt when v is not in the span.
  std::optional<Vector> coordinates(std::span<const Rational> v) const;
  /// Throws MathError when v is outside the span.
  Vector coordinates_or_throw(std::span<const Rational> v, const char* what) const;
  Vector combine(std::span<const Rational> coords) const;
  /// ambient_dim x dim matrix whose columns are the basis vectors.
  Matrix as_columns() const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.ambient_ == b.ambient_ && a.vectors_ == b.vectors_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> vectors_;
  std::vector<std::size_t> pivots_;
};

SubspaceBasis kernel_basis(const Matrix& m);

/// Some v with m v = b: pivot variables solved, free variables set to zero.
/// nullopt when the system is inconsistent.
std::optional<Vector> solve_particular(const Matrix& m, std::span<const Rational> b);

/// W = U (+) C for a pivot-greedy complement C of U inside W, together with
/// the projection W -> C-coordinates that kills U.
class QuotientData {
 public:
  QuotientData() = default;
  /// Throws MathError when sub is not contained in whole.
  QuotientData(const SubspaceBasis& sub, const SubspaceBasis& whole);

  const SubspaceBasis& sub() const { return sub_; }
  const SubspaceBasis& whole() const { return whole_; }
  const SubspaceBasis& complement() const { return complement_; }
  std::size_t dim() const { return complement_.dim(); }

  /// Quotient coordinates of w (throws MathError when w is not in W).
  Vector project(std::span<const Rational> w) const;
  /// The canonical section: coordinates -> element of the complement.
  Vector lift(std::span<const Rational> coords) const { return complement_.combine(coords); }

 private:
  SubspaceBasis sub_;
  SubspaceBasis whole_;
  SubspaceBasis complement_;
  Matrix joint_;  // columns: sub basis then complement basis
};

}  // namespace lie2
