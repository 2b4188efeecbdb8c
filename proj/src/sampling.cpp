#include "sampling.hpp"

namespace higgslab {

Scalar random_scalar(Rng& rng, Field f) {
  if (f.is_prime_field()) return Scalar::from_residue(f, rng.below(f.modulus));
  return Scalar(f, rng.range(-9, 9));
}

Scalar random_nonzero_scalar(Rng& rng, Field f) {
  for (;;) {
    Scalar s = random_scalar(rng, f);
    if (!s.is_zero()) return s;
  }
}

Poly random_poly(Rng& rng, Field f, int deg) {
  std::vector<Scalar> c;
  c.reserve(deg + 1);
  for (int i = 0; i < deg; ++i) c.push_back(random_scalar(rng, f));
  c.push_back(random_nonzero_scalar(rng, f));
  return Poly(f, std::move(c));
}

Poly random_poly_upto(Rng& rng, Field f, int max_deg) {
  std::vector<Scalar> c;
  for (int i = 0; i <= max_deg; ++i) c.push_back(random_scalar(rng, f));
  return Poly(f, std::move(c));
}

Poly random_monic_split(Rng& rng, Field f, int deg) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Scalar> roots;
    for (int i = 0; i < deg; ++i) roots.push_back(random_scalar(rng, f));
    bool distinct = true;
    for (size_t i = 0; i < roots.size() && distinct; ++i)
      for (size_t j = i + 1; j < roots.size(); ++j)
        if (roots[i] == roots[j]) { distinct = false; break; }
    if (!distinct) continue;
    Poly p = Poly::one(f);
    for (const auto& r : roots) p = p * Poly::linear_root(r);
    return p;
  }
  throw HlError(Errc::internal, "could not draw distinct roots");
}

MatPoly random_unimodular(Rng& rng, Field f, int n, int ops) {
  MatPoly u = MatPoly::identity(f, n);
  for (int k = 0; k < ops; ++k) {
    int kind = (int)rng.below(3);
    int i = (int)rng.below(n), j = (int)rng.below(n);
    if (kind == 0 && i != j) {
      for (int r = 0; r < n; ++r) std::swap(u.at(r, i), u.at(r, j));
    } else if (kind == 1) {
      Scalar s = random_nonzero_scalar(rng, f);
      for (int r = 0; r < n; ++r) u.at(r, i) = u.at(r, i) * s;
    } else if (i != j) {
      Poly q = random_poly_upto(rng, f, (int)rng.below(3));
      for (int r = 0; r < n; ++r) u.at(r, i) = u.at(r, i) + q * u.at(r, j);
    }
  }
  return u;
}

MatScalar random_symmetric_nondegenerate(Rng& rng, Field f, int n) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    MatScalar m(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Scalar s = random_scalar(rng, f);
        m.at(i, j) = s;
        m.at(j, i) = s;
      }
    if (!det(m).is_zero()) return m;
  }
  throw HlError(Errc::internal, "could not draw a nondegenerate form");
}

SpectralCoeffs random_regular_sc(Rng& rng, Field f, int p, int q, int g,
                                 int deg_ap, bool split_ap) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    SpectralCoeffs sc;
    sc.p = p;
    sc.q = q;
    sc.g = g;
    sc.a.clear();
    for (int i = 1; i < p; ++i) {
      int d = (int)rng.below((std::uint64_t)deg_ap + 1);
      sc.a.push_back(random_poly_upto(rng, f, d));
    }
    Poly ap = split_ap
                  ? random_monic_split(rng, f, deg_ap) * random_nonzero_scalar(rng, f)
                  : random_poly(rng, f, deg_ap);
    sc.a.push_back(ap);
    RegularityReport rep = regularity_check(sc);
    if (rep.ok()) return sc;
  }
  throw HlError(Errc::internal, "could not draw regular spectral data");
}

}  // namespace higgslab
