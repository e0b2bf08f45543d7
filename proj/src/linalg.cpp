#include "lie2/linalg.hpp"

#include <cassert>
#include <sstream>

#include "lie2/errors.hpp"

namespace lie2 {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= s;
  return r;
}

Vector& axpy(Vector& y, const Rational& a, const Vector& x) {
  assert(y.size() == x.size());
  if (a.is_zero()) return y;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
  return y;
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

// --- Matrix ----------------------------------------------------------------

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("matrix row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("matrix column has wrong length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::unflatten(std::size_t rows, std::size_t cols, std::span<const Rational> entries) {
  if (entries.size() != rows * cols) throw InputError("flattened matrix has wrong length");
  Matrix m(rows, cols);
  std::copy(entries.begin(), entries.end(), m.data_.begin());
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::apply(std::span<const Rational> v) const {
  assert(v.size() == cols_);
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const auto& e = (*this)(r, c);
      if (!e.is_zero()) out[r] += e * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return lie2::is_zero(data_); }

Matrix& Matrix::operator+=(const Matrix& o) {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  assert(a.cols_ == b.rows_);
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const auto& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix operator*(const Rational& s, Matrix m) {
  for (auto& x : m.data_) x *= s;
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// --- elimination -------------------------------------------------------------

Echelon rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    }
    Rational inv = Rational(1) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  Matrix reduced(pivots.size(), a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) reduced(r, c) = a(r, c);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) return std::nullopt;
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Rational(1);
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = e.reduced(r, n + c);
  }
  return out;
}

Matrix matrix_of(std::size_t in_dim, std::size_t out_dim,
                 const std::function<Vector(const Vector&)>& f) {
  Matrix m(out_dim, in_dim);
  for (std::size_t k = 0; k < in_dim; ++k) {
    Vector col = f(unit_vector(in_dim, k));
    if (col.size() != out_dim) throw InputError("linear map returned a vector of wrong length");
    for (std::size_t r = 0; r < out_dim; ++r) m(r, k) = col[r];
  }
  return m;
}

// --- SubspaceBasis -------------------------------------------------------------

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  SubspaceBasis s(ambient_dim);
  if (vectors.empty()) return s;
  Echelon e = rref(Matrix::from_rows(vectors, ambient_dim));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.vectors_.push_back(e.reduced.row(r));
  s.pivots_ = std::move(e.pivots);
  return s;
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient_dim) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < ambient_dim; ++i) basis.push_back(unit_vector(ambient_dim, i));
  return span(ambient_dim, basis);
}

SubspaceBasis SubspaceBasis::image(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return span(m.rows(), cols);
}

std::optional<Vector> SubspaceBasis::coordinates(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw InputError("vector length does not match subspace ambient dimension");
  Vector coords(vectors_.size());
  for (std::size_t i = 0; i < vectors_.size(); ++i) coords[i] = v[pivots_[i]];
  // In RREF the pivot entries are the coordinates; verify the reconstruction.
  Vector back = combine(coords);
  for (std::size_t k = 0; k < ambient_; ++k) {
    if (back[k] != v[k]) return std::nullopt;
  }
  return coords;
}

Vector SubspaceBasis::coordinates_or_throw(std::span<const Rational> v, const char* what) const {
  auto c = coordinates(v);
  if (!c) throw MathError(std::string(what) + ": vector lies outside the subspace");
  return *c;
}

bool SubspaceBasis::contains(std::span<const Rational> v) const { return coordinates(v).has_value(); }

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  if (other.ambient_ != ambient_) return false;
  for (const auto& v : other.vectors_) {
    if (!contains(v)) return false;
  }
  return true;
}

Vector SubspaceBasis::combine(std::span<const Rational> coords) const {
  if (coords.size() != vectors_.size()) throw InputError("coordinate count does not match subspace dimension");
  Vector out(ambient_);
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(out, coords[i], vectors_[i]);
  return out;
}

Matrix SubspaceBasis::as_columns() const { return Matrix::from_columns(vectors_, ambient_); }

SubspaceBasis kernel_basis(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return SubspaceBasis::span(m.cols(), basis);
}

std::optional<Vector> solve_particular(const Matrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw InputError("right-hand side length does not match matrix rows");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Echelon e = rref(aug);
  Vector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

// --- QuotientData --------------------------------------------------------------

QuotientData::QuotientData(const SubspaceBasis& sub, const SubspaceBasis& whole)
    : sub_(sub), whole_(whole) {
  if (sub.ambient_dim() != whole.ambient_dim()) throw InputError("quotient of subspaces in different ambients");
  if (!whole.contains(sub)) throw MathError("quotient: subspace is not contained in the whole space");
  std::vector<Vector> current = sub.vectors();
  std::vector<Vector> chosen;
  std::size_t have = sub.dim();
  for (const auto& w : whole.vectors()) {
    current.push_back(w);
    std::size_t r = rank(Matrix::from_rows(current, whole.ambient_dim()));
    if (r > have) {
      chosen.push_back(w);
      have = r;
    } else {
      current.pop_back();
    }
  }
  complement_ = SubspaceBasis::span(whole.ambient_dim(), chosen);
  std::vector<Vector> cols = sub_.vectors();
  for (const auto& c : complement_.vectors()) cols.push_back(c);
  joint_ = Matrix::from_columns(cols, whole.ambient_dim());
}

Vector QuotientData::project(std::span<const Rational> w) const {
  auto z = solve_particular(joint_, w);
  if (!z) throw MathError("quotient projection: vector lies outside the whole space");
  return Vector(z->begin() + static_cast<std::ptrdiff_t>(sub_.dim()), z->end());
}

}  // namespace lie2
