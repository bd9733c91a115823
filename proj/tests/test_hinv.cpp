#include <doctest.h>

#include "lspace/corpus.hpp"
#include "lspace/errors.hpp"
#include "lspace/hinv.hpp"

using namespace lspace;

namespace {
HalfInt h(std::int64_t doubled) { return HalfInt::from_doubled(doubled); }
}  // namespace

TEST_CASE("knot V") {
  const StableSeries unknot = expand_tail(LaurentPoly1(1));
  CHECK(knot_v(unknot, HalfInt(-3)) == 3);
  CHECK(knot_v(unknot, HalfInt(0)) == 0);
  CHECK(knot_v(unknot, HalfInt(4)) == 0);
  const StableSeries trefoil = expand_tail(LaurentPoly1::from_terms({{1, 1}, {0, -1}, {-1, 1}}));
  CHECK(knot_v(trefoil, HalfInt(0)) == 1);
  CHECK(knot_v(trefoil, HalfInt(1)) == 0);
  CHECK(knot_v(trefoil, HalfInt(-2)) == 2);
}

TEST_CASE("n values") {
  const NTable l1(corpus::whitehead());
  CHECK(l1.n_plus(Axis::L2, HalfInt(0), HalfInt(0)) == 1);
  CHECK(l1.n_plus(Axis::L2, HalfInt(-4), HalfInt(-4)) == 4);
  CHECK(l1.n_plus(Axis::L2, HalfInt(3), HalfInt(1)) == 0);

  const NTable l4(corpus::two_bridge_ln(4));
  CHECK(l4.n_plus(Axis::L2, HalfInt(0), HalfInt(-1)) == 3);

  const NTable unlink(corpus::unlink());
  for (std::int64_t s2 = -5; s2 <= 5; ++s2)
    CHECK(unlink.n_plus(Axis::L2, HalfInt(2), HalfInt(s2)) == std::max<std::int64_t>(0, -s2));

  SUBCASE("lattice coset is enforced") {
    const NTable hopf(corpus::hopf());
    CHECK_NOTHROW(hopf.n_plus(Axis::L1, h(1), h(-1)));
    CHECK_THROWS(hopf.n_plus(Axis::L1, HalfInt(0), HalfInt(0)));
  }
  SUBCASE("negative values are rejected unless allowed") {
    CHECK_THROWS_AS(NTable(corpus::l7n2()).n_plus(Axis::L1, HalfInt(0), HalfInt(0)), NotLSpaceLink);
    CHECK(NTable(corpus::l7n2(), true).n_plus(Axis::L1, HalfInt(0), HalfInt(0)) == -1);
  }
}

TEST_CASE("nu thresholds") {
  const NTable l3(corpus::two_bridge_ln(3));
  CHECK(nu(l3, Axis::L2, HalfInt(0)) == HalfInt(3));
  CHECK(nu(l3, Axis::L2, HalfInt(1)) == HalfInt(2));
  CHECK(nu(l3, Axis::L2, HalfInt(-1)) == HalfInt(2));
  CHECK(nu(l3, Axis::L2, HalfInt(5)) == HalfInt(0));
  CHECK(nu(l3, Axis::L2, HalfInt(-5)) == HalfInt(0));
  CHECK(nu(l3, Axis::L1, HalfInt(0)) == HalfInt(3));

  const NTable hopf(corpus::hopf());
  CHECK(nu(hopf, Axis::L2, h(1)) == h(1));
  CHECK(nu(hopf, Axis::L2, h(-1)) == h(-1));
}

TEST_CASE("truncation bound") {
  for (std::int64_t n = 1; n <= 4; ++n) CHECK(truncation_bound(NTable(corpus::two_bridge_ln(n))) == HalfInt(n));
  CHECK(truncation_bound(NTable(corpus::hopf())) == HalfInt(1));
  CHECK(truncation_bound(NTable(corpus::unlink())) == HalfInt(1));
}

TEST_CASE("nmatrix layout and lattice windows") {
  const NMatrix m = nmatrix(NTable(corpus::whitehead()), HalfInt(2));
  REQUIRE(m.rows.size() == 5);
  CHECK(m.s2_values.front() == HalfInt(2));
  CHECK(m.s1_values.front() == HalfInt(-2));
  CHECK(m.rows[2][2] == 1);
  CHECK(m.rows[4] == std::vector<std::int64_t>(5, 2));

  CHECK(lattice_window(0, HalfInt(1)) == std::vector<HalfInt>{HalfInt(-1), HalfInt(0), HalfInt(1)});
  CHECK(lattice_window(1, HalfInt(1)) == std::vector<HalfInt>{h(-1), h(1)});
}

TEST_CASE("invariant scan") {
  const NInvariantScan good = scan_invariants(NTable(corpus::two_bridge_ln(2)), HalfInt(6));
  CHECK_FALSE(good.negative);
  CHECK_FALSE(good.bad_step);
  const NInvariantScan bad = scan_invariants(NTable(corpus::l7n2(), true), HalfInt(3));
  REQUIRE(bad.negative);
  CHECK(bad.negative->value == -1);
}
