#include "lie2/cochain.hpp"

#include <algorithm>

#include "lie2/errors.hpp"

namespace lie2 {

namespace {

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

void multisets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    multisets(n, k, i, cur, out);
    cur.pop_back();
  }
}

// Sorts in place; returns the permutation sign, or 0 on a repeated entry.
int sort_with_sign(std::vector<std::size_t>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] == v[i - 1]) return 0;
  }
  return sign;
}

}  // namespace

std::optional<std::size_t> ComponentLayout::row_index(const std::vector<std::size_t>& tuple) const {
  auto it = row_lookup_.find(tuple);
  if (it == row_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ComponentLayout::sym_index(const std::vector<std::size_t>& tuple) const {
  auto it = sym_lookup_.find(tuple);
  if (it == sym_lookup_.end()) return std::nullopt;
  return it->second;
}

CochainShape::CochainShape(std::size_t n0, std::size_t n1, std::size_t m0, std::size_t m1, int degree)
    : n0_(n0), n1_(n1), m0_(m0), m1_(m1), degree_(degree) {
  if (degree < 0 || degree > kMaxDegree) {
    throw InputError("cochain degree must lie in [0, 4], got " + std::to_string(degree));
  }
  std::vector<ComponentLayout> comps;
  for (int s = 0; s <= 1; ++s) {
    for (int q = 0; 2 * q <= degree + s; ++q) {
      int p = degree + s - 2 * q;
      if (p == degree + 1) continue;
      ComponentLayout c;
      c.p = p;
      c.q = q;
      c.s = s;
      comps.push_back(std::move(c));
    }
  }
  std::sort(comps.begin(), comps.end(),
            [](const ComponentLayout& a, const ComponentLayout& b) { return std::tie(a.p, a.q) < std::tie(b.p, b.q); });
  std::size_t offset = 0;
  for (auto& c : comps) {
    std::vector<std::size_t> cur;
    combinations(n0, static_cast<std::size_t>(c.p), 0, cur, c.rows);
    multisets(n1, static_cast<std::size_t>(c.q), 0, cur, c.syms);
    for (std::size_t i = 0; i < c.rows.size(); ++i) c.row_lookup_[c.rows[i]] = i;
    for (std::size_t i = 0; i < c.syms.size(); ++i) c.sym_lookup_[c.syms[i]] = i;
    c.target_dim = c.s == 0 ? m0 : m1;
    c.offset = offset;
    offset += c.size();
  }
  dim_ = offset;
  components_ = std::move(comps);
}

const ComponentLayout* CochainShape::find(int p, int q, int s) const {
  for (const auto& c : components_) {
    if (c.p == p && c.q == q && c.s == s) return &c;
  }
  return nullptr;
}

ShapePtr make_shape(std::size_t n0, std::size_t n1, std::size_t m0, std::size_t m1, int degree) {
  return std::make_shared<const CochainShape>(n0, n1, m0, m1, degree);
}

SparseArg sparse(std::span<const Rational> v) {
  SparseArg out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  }
  return out;
}

SparseArg basis_arg(std::size_t i) { return {{i, Rational(1)}}; }

// --- Cochain -----------------------------------------------------------------

Cochain::Cochain(ShapePtr shape) : shape_(std::move(shape)), coeffs_(shape_->dim()) {}

Cochain::Cochain(ShapePtr shape, Vector coeffs) : shape_(std::move(shape)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != shape_->dim()) throw InputError("cochain coefficient vector has wrong length");
}

Vector Cochain::value(int p, int q, int s, std::span<const std::size_t> xs,
                      std::span<const std::size_t> as) const {
  const std::size_t tdim = s == 0 ? shape_->m0() : shape_->m1();
  Vector out(tdim);
  const ComponentLayout* c = shape_->find(p, q, s);
  if (c == nullptr) return out;
  std::vector<std::size_t> rx(xs.begin(), xs.end());
  std::vector<std::size_t> ra(as.begin(), as.end());
  int sign = sort_with_sign(rx);
  if (sign == 0) return out;
  std::sort(ra.begin(), ra.end());
  auto ri = c->row_index(rx);
  auto si = c->sym_index(ra);
  if (!ri || !si) throw InputError("cochain argument index out of range");
  for (std::size_t t = 0; t < tdim; ++t) {
    const auto& v = coeffs_[c->index(*ri, *si, t)];
    out[t] = sign > 0 ? v : -v;
  }
  return out;
}

Vector Cochain::eval(int p, int q, int s, const std::vector<SparseArg>& xs,
                     const std::vector<SparseArg>& as) const {
  const std::size_t tdim = s == 0 ? shape_->m0() : shape_->m1();
  Vector out(tdim);
  if (shape_->find(p, q, s) == nullptr) return out;
  if (xs.size() != static_cast<std::size_t>(p) || as.size() != static_cast<std::size_t>(q)) {
    throw InputError("cochain evaluated with the wrong number of arguments");
  }
  std::vector<std::size_t> ix(xs.size()), ia(as.size());
  const std::size_t total = xs.size() + as.size();
  // Depth-first over the nonzero coordinates of every argument.
  auto recurse = [&](auto&& self, std::size_t slot, const Rational& coeff) -> void {
    if (slot == total) {
      axpy(out, coeff, value(p, q, s, ix, ia));
      return;
    }
    const SparseArg& arg = slot < xs.size() ? xs[slot] : as[slot - xs.size()];
    for (const auto& [idx, c] : arg) {
      if (slot < xs.size()) {
        ix[slot] = idx;
      } else {
        ia[slot - xs.size()] = idx;
      }
      self(self, slot + 1, coeff * c);
    }
  };
  recurse(recurse, 0, Rational(1));
  return out;
}

void Cochain::set(int p, int q, int s, std::vector<std::size_t> xs, std::vector<std::size_t> as,
                  const Vector& value) {
  const ComponentLayout* c = shape_->find(p, q, s);
  if (c == nullptr) throw InputError("cochain has no component (" + std::to_string(p) + "," +
                                     std::to_string(q) + "," + std::to_string(s) + ")");
  if (xs.size() != static_cast<std::size_t>(p) || as.size() != static_cast<std::size_t>(q)) {
    throw InputError("cochain entry has the wrong number of indices");
  }
  if (value.size() != c->target_dim) throw InputError("cochain entry value has wrong length");
  int sign = sort_with_sign(xs);
  if (sign == 0) throw InputError("cochain entry repeats a g0 index");
  std::sort(as.begin(), as.end());
  auto ri = c->row_index(xs);
  auto si = c->sym_index(as);
  if (!ri || !si) throw InputError("cochain entry index out of range");
  for (std::size_t t = 0; t < c->target_dim; ++t) {
    coeffs_[c->index(*ri, *si, t)] = sign > 0 ? value[t] : -value[t];
  }
}

Cochain& Cochain::operator+=(const Cochain& o) {
  if (!(*shape_ == *o.shape_)) throw InputError("adding cochains of different shapes");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  if (!(*shape_ == *o.shape_)) throw InputError("subtracting cochains of different shapes");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

}  // namespace lie2
