#pragma once

#include <vector>

#include "langlands.hpp"

namespace higgslab {

// (4p^2 + 2p)(g-1) + 1, the two-group exponent of a regular fiber.
long long fiber_exponent(int p, int g);

// 2 g_quotient + 4p(g-1) - 1 == fiber_exponent(p, g).
bool exponent_identity(int p, int g);

// Regular Hitchin fiber over a point with split a_p: a finite two-group for
// q = 1, a Prym torus times the same two-group for q = 2.
struct FiberOrder {
  long long exponent = 0;
  BigInt component_order;
  long long prym_dim = 0;
};
FiberOrder fiber_order(int p, int q, int g);

// 2^{4p(g-1)-1}, the sign-vector torsor acting on a fixed fiber.
BigInt torsor_order(int p, int g);

// Connected component count for the q = 2 extra-component family, with its
// three-part breakdown.
struct GothenCounts {
  BigInt hitchin_like;  // 2^{2g}
  BigInt middle;        // 2g - 2
  BigInt paired;        // 2(2^{2g} - 1)
  BigInt total;         // 3*2^{2g} + 2g - 4
};
GothenCounts gothen_counts(int g);

struct CensusRow {
  int p = 0;
  int q = 0;
  int g = 0;
  CoverGenera genera;
  BigInt torsor;
  long long fiber_exp = 0;      // valid when q <= 2
  long long prym_dim = 0;       // valid when q == 2
  long long stack_dim = 0;      // at degL = half_degree, q >= 1
  bool rh_ok = false;
  bool exponent_ok = false;
};

// Deterministic (p, q, g) table; every row carries its consistency flags.
std::vector<CensusRow> census_grid(const std::vector<int>& ps,
                                   const std::vector<int>& qs,
                                   const std::vector<int>& gs);

}  // namespace higgslab
