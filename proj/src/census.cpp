#include "census.hpp"

#include <sstream>

namespace higgslab {

namespace {

void check_pg(int p, int g) {
  if (p < 1 || g < 2) throw HlError(Errc::bad_input, "need p >= 1 and g >= 2");
}

}  // namespace

long long fiber_exponent(int p, int g) {
  check_pg(p, g);
  return (4LL * p * p + 2 * p) * (g - 1) + 1;
}

bool exponent_identity(int p, int g) {
  CoverGenera cg = cover_genera(p, g);
  return 2 * cg.g_quotient + 4LL * p * (g - 1) - 1 == fiber_exponent(p, g);
}

FiberOrder fiber_order(int p, int q, int g) {
  check_pg(p, g);
  if (q != 1 && q != 2)
    throw HlError(Errc::unsupported,
                  "closed fiber form only for q in {1,2}; use the equivariant "
                  "reconstruction for larger q");
  FiberOrder out;
  out.exponent = fiber_exponent(p, g);
  out.component_order = BigInt(1) << out.exponent;
  if (q == 2) {
    out.prym_dim = (2LL * p + 1) * (g - 1);
    CoverGenera cg = cover_genera(p, g);
    if (cg.g_auxiliary - g != out.prym_dim)
      throw HlError(Errc::internal, "Prym dimension disagrees with the cover genus");
  }
  return out;
}

BigInt torsor_order(int p, int g) {
  check_pg(p, g);
  if (!exponent_identity(p, g))
    throw HlError(Errc::internal, "exponent decomposition identity failed");
  return BigInt(1) << (4LL * p * (g - 1) - 1);
}

GothenCounts gothen_counts(int g) {
  if (g < 2) throw HlError(Errc::bad_input, "need g >= 2");
  GothenCounts out;
  out.hitchin_like = BigInt(1) << (2 * g);
  out.middle = 2 * g - 2;
  out.paired = 2 * ((BigInt(1) << (2 * g)) - 1);
  out.total = 3 * (BigInt(1) << (2 * g)) + 2 * g - 4;
  if (out.hitchin_like + out.middle + out.paired != out.total)
    throw HlError(Errc::internal, "component breakdown does not sum");
  return out;
}

std::vector<CensusRow> census_grid(const std::vector<int>& ps,
                                   const std::vector<int>& qs,
                                   const std::vector<int>& gs) {
  std::vector<CensusRow> rows;
  for (int p : ps)
    for (int q : qs)
      for (int g : gs) {
        check_pg(p, g);
        if (q < 0) throw HlError(Errc::bad_input, "q must be nonnegative");
        CensusRow row;
        row.p = p;
        row.q = q;
        row.g = g;
        row.genera = cover_genera(p, g);
        row.torsor = torsor_order(p, g);
        row.rh_ok = row.genera.rh_identity;
        row.exponent_ok = exponent_identity(p, g);
        if (q == 1 || q == 2) {
          FiberOrder fo = fiber_order(p, q, g);
          row.fiber_exp = fo.exponent;
          row.prym_dim = fo.prym_dim;
        }
        if (q >= 1)
          row.stack_dim = stack_dimension(q, g, (int)row.genera.half_degree);
        rows.push_back(row);
      }
  return rows;
}

}  // namespace higgslab
