#pragma once

#include <initializer_list>

#include "lie2/linalg.hpp"

namespace lie2::testing {

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> rs;
  std::size_t cols = 0;
  for (auto r : rows) {
    rs.push_back(vec(r));
    cols = r.size();
  }
  return Matrix::from_rows(rs, cols);
}

inline Rational q(long n, long d = 1) { return Rational(n, d); }

}  // namespace lie2::testing
