#pragma once

#include <cstdint>

#include "matrix.hpp"
#include "spectral.hpp"

namespace higgslab {

// SplitMix64: tiny, seedable, identical output on every platform. The
// standard <random> distributions are not cross-platform stable, and report
// bytes must be.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) {
    // rejection sampling keeps the draw unbiased
    std::uint64_t limit = ~0ull - ~0ull % n;
    std::uint64_t v;
    do { v = next(); } while (v >= limit);
    return v % n;
  }
  long long range(long long lo, long long hi) {  // inclusive
    return lo + (long long)below((std::uint64_t)(hi - lo + 1));
  }
  bool coin() { return next() & 1; }
};

Scalar random_scalar(Rng& rng, Field f);
Scalar random_nonzero_scalar(Rng& rng, Field f);
Poly random_poly(Rng& rng, Field f, int deg);          // exact degree
Poly random_poly_upto(Rng& rng, Field f, int max_deg); // degree <= max_deg, may be zero
Poly random_monic_split(Rng& rng, Field f, int deg);   // distinct roots in the field
MatPoly random_unimodular(Rng& rng, Field f, int n, int ops);
MatScalar random_symmetric_nondegenerate(Rng& rng, Field f, int n);

// Spectral data passing regularity_check, resampled until regular. With
// split_ap the last coefficient is a unit times a product of distinct
// monic linear factors.
SpectralCoeffs random_regular_sc(Rng& rng, Field f, int p, int q, int g,
                                 int deg_ap, bool split_ap);

}  // namespace higgslab
