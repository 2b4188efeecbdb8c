#include "census.hpp"

#include <doctest.h>

using namespace higgslab;

TEST_CASE("fiber orders and Prym dimensions") {
  FiberOrder f122 = fiber_order(1, 2, 2);
  CHECK(f122.exponent == 7);
  CHECK(f122.component_order == 128);
  CHECK(f122.prym_dim == 3);

  FiberOrder f212 = fiber_order(2, 1, 2);
  CHECK(f212.exponent == 21);
  CHECK(f212.component_order == BigInt(1) << 21);
  CHECK(f212.prym_dim == 0);

  try {
    fiber_order(1, 3, 2);
    CHECK(false);
  } catch (const HlError& e) {
    CHECK(e.code == Errc::unsupported);
  }
  CHECK_THROWS_AS(fiber_order(0, 1, 2), HlError);
}

TEST_CASE("torsor orders and the exponent decomposition identity") {
  CHECK(torsor_order(1, 2) == 8);
  CHECK(torsor_order(2, 3) == BigInt(1) << 15);
  for (int p = 1; p <= 20; ++p)
    for (int g = 2; g <= 20; ++g) CHECK(exponent_identity(p, g));
}

TEST_CASE("Gothen-style component counts") {
  GothenCounts g2 = gothen_counts(2);
  CHECK(g2.total == 48);
  CHECK(g2.hitchin_like == 16);
  CHECK(g2.middle == 2);
  CHECK(g2.paired == 30);
  CHECK(gothen_counts(3).total == 194);
  for (int g = 2; g <= 10; ++g) {
    GothenCounts c = gothen_counts(g);
    CHECK(c.hitchin_like + c.middle + c.paired == c.total);
    CHECK(c.total == 3 * (BigInt(1) << (2 * g)) + 2 * g - 4);
  }
  CHECK_THROWS_AS(gothen_counts(1), HlError);
}

TEST_CASE("census grid rows carry consistent invariants") {
  std::vector<CensusRow> rows = census_grid({1, 2}, {1, 2}, {2, 3});
  REQUIRE(rows.size() == 8);
  for (const CensusRow& r : rows) {
    CHECK(r.rh_ok);
    CHECK(r.exponent_ok);
    CHECK(r.torsor == BigInt(1) << (4LL * r.p * (r.g - 1) - 1));
  }
  const CensusRow* r222 = nullptr;
  for (const CensusRow& r : rows)
    if (r.p == 2 && r.q == 2 && r.g == 2) r222 = &r;
  REQUIRE(r222 != nullptr);
  CHECK(r222->genera.g_spectral == 17);
  CHECK(r222->genera.g_quotient == 7);
  CHECK(r222->fiber_exp == 21);
  CHECK(r222->prym_dim == 5);

  const CensusRow* r122 = nullptr;
  for (const CensusRow& r : rows)
    if (r.p == 1 && r.q == 2 && r.g == 2) r122 = &r;
  REQUIRE(r122 != nullptr);
  // degL defaults to the divisor degree 2p(g-1) = 2, so dim = 1 + 2
  CHECK(r122->stack_dim == 3);

  CHECK(census_grid({}, {1}, {2}).empty());
  CHECK_THROWS_AS(census_grid({1}, {-1}, {2}), HlError);
}
