#pragma once

#include <vector>

#include "field.hpp"

namespace higgslab {

// Fraction-free determinant over an integral domain R (Poly or BiPoly):
// Bareiss one-step elimination, all divisions exact. Entries row-major.
template <class R>
R bareiss_det(std::vector<R> m, int n, Field f) {
  if (n == 0) return R::one(f);
  bool neg = false;
  R denom = R::one(f);
  auto at = [&](int i, int j) -> R& { return m[i * n + j]; };
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!at(i, k).is_zero()) { piv = i; break; }
      if (piv < 0) return R::zero(f);
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
      neg = !neg;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)).exact_div(denom);
      at(i, k) = R::zero(f);
    }
    denom = at(k, k);
  }
  R det = at(n - 1, n - 1);
  return neg ? -det : det;
}

}  // namespace higgslab
