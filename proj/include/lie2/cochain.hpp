#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "lie2/linalg.hpp"

namespace lie2 {

/// One summand Hom(wedge^p g0 (x) sym^q g1, V_s) of a cochain space.
///
/// Coefficients are stored for canonical argument tuples only: strictly
/// increasing g0 indices and non-decreasing g1 indices. Within a component
/// the flat layout is (g0 tuple, g1 tuple, target index), each in
/// lexicographic order.
struct ComponentLayout {
  int p = 0;
  int q = 0;
  int s = 0;
  std::vector<std::vector<std::size_t>> rows;  // g0 tuples
  std::vector<std::vector<std::size_t>> syms;  // g1 multisets
  std::size_t target_dim = 0;
  std::size_t offset = 0;

  std::size_t size() const { return rows.size() * syms.size() * target_dim; }
  std::size_t index(std::size_t row, std::size_t sym, std::size_t target) const {
    return offset + (row * syms.size() + sym) * target_dim + target;
  }
  std::optional<std::size_t> row_index(const std::vector<std::size_t>& tuple) const;
  std::optional<std::size_t> sym_index(const std::vector<std::size_t>& tuple) const;

 private:
  friend class CochainShape;
  std::map<std::vector<std::size_t>, std::size_t> row_lookup_;
  std::map<std::vector<std::size_t>, std::size_t> sym_lookup_;
};

/// The degree-i cochain space for g of dims (n0, n1) with coefficients in
/// V of dims (m0, m1): components with p + 2q - s = i, p != i + 1, listed in
/// ascending p, then q.
class CochainShape {
 public:
  static constexpr int kMaxDegree = 4;

  CochainShape(std::size_t n0, std::size_t n1, std::size_t m0, std::size_t m1, int degree);

  int degree() const { return degree_; }
  std::size_t n0() const { return n0_; }
  std::size_t n1() const { return n1_; }
  std::size_t m0() const { return m0_; }
  std::size_t m1() const { return m1_; }
  std::size_t dim() const { return dim_; }
  const std::vector<ComponentLayout>& components() const { return components_; }
  const ComponentLayout* find(int p, int q, int s) const;

  friend bool operator==(const CochainShape& a, const CochainShape& b) {
    return a.n0_ == b.n0_ && a.n1_ == b.n1_ && a.m0_ == b.m0_ && a.m1_ == b.m1_ && a.degree_ == b.degree_;
  }

 private:
  std::size_t n0_, n1_, m0_, m1_;
  int degree_;
  std::size_t dim_ = 0;
  std::vector<ComponentLayout> components_;
};

using ShapePtr = std::shared_ptr<const CochainShape>;
ShapePtr make_shape(std::size_t n0, std::size_t n1, std::size_t m0, std::size_t m1, int degree);

/// A sparse argument: nonzero (basis index, coefficient) pairs.
using SparseArg = std::vector<std::pair<std::size_t, Rational>>;
SparseArg sparse(std::span<const Rational> v);
SparseArg basis_arg(std::size_t i);

/// An element of a cochain space, stored as a flat coefficient vector over
/// the canonical layout of its shape.
class Cochain {
 public:
  Cochain() = default;
  explicit Cochain(ShapePtr shape);
  Cochain(ShapePtr shape, Vector coeffs);

  const CochainShape& shape() const { return *shape_; }
  const ShapePtr& shape_ptr() const { return shape_; }
  int degree() const { return shape_->degree(); }
  const Vector& coeffs() const { return coeffs_; }
  Vector& coeffs() { return coeffs_; }
  bool is_zero() const { return lie2::is_zero(coeffs_); }

  /// Value on basis indices given in any order: antisymmetric in the g0
  /// slots, symmetric in the g1 slots. Zero for a missing component.
  Vector value(int p, int q, int s, std::span<const std::size_t> xs, std::span<const std::size_t> as) const;
  /// Multilinear extension to arbitrary arguments.
  Vector eval(int p, int q, int s, const std::vector<SparseArg>& xs, const std::vector<SparseArg>& as) const;

  /// Sets the value at a canonical tuple (tuples are sorted here; a repeated
  /// g0 index is rejected).
  void set(int p, int q, int s, std::vector<std::size_t> xs, std::vector<std::size_t> as,
           const Vector& value);

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return *a.shape_ == *b.shape_ && a.coeffs_ == b.coeffs_;
  }
  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Rational& c, Cochain a) {
    for (auto& x : a.coeffs_) x *= c;
    return a;
  }

 private:
  ShapePtr shape_;
  Vector coeffs_;
};

}  // namespace lie2
