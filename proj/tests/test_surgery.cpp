#include <doctest.h>

#include "lspace/corpus.hpp"
#include "lspace/errors.hpp"
#include "lspace/surgery.hpp"

using namespace lspace;

TEST_CASE("spin^c structures") {
  CHECK(spinc_reps(Framing{1, 1, 0}).size() == 1);
  CHECK(spinc_reps(Framing{3, 3, 2}).size() == 5);
  CHECK(spinc_reps(Framing{2, -3, 0}).size() == 6);
  const SpinCLattice lattice(Framing{2, 3, 1});
  CHECK(lattice.order() == 5);
  const auto reps = lattice.representatives();
  for (const SpinC& u : reps) CHECK(lattice.canonical(u.s1, u.s2) == u);
  // shifting by a column of Lambda stays in the class
  const SpinC u = reps.front();
  CHECK(lattice.canonical(u.s1 + HalfInt(2), u.s2 + HalfInt(1)) == u);
}

TEST_CASE("truncation cases") {
  CHECK(truncation_case(Framing{1, 1, 0}) == TruncationCase::I);
  CHECK(truncation_case(Framing{-2, -3, 0}) == TruncationCase::II);
  CHECK(truncation_case(Framing{2, -3, 0}) == TruncationCase::III);
  CHECK(truncation_case(Framing{-2, 3, 0}) == TruncationCase::IV);
  CHECK(truncation_case(Framing{1, 1, 2}) == TruncationCase::V);
  CHECK(truncation_case(Framing{1, 1, -2}) == TruncationCase::VI);
  CHECK(is_boundary_framing(Framing{1, -1, 1}));
  CHECK_THROWS_AS(truncation_case(Framing{1, 1, 1}), UnsupportedFraming);

  const Truncation t = choose_truncation(Framing{1, 1, 0}, HalfInt(1));
  CHECK(t.i0 >= 2);
  CHECK(t.j0 >= 2);
  CHECK(admissible(Framing{1, 1, 0}, t));
}

TEST_CASE("Euler characteristic per spin^c") {
  const NTable wh(corpus::whitehead());
  for (const Framing& f : {Framing{1, 1, 0}, Framing{-2, -3, 0}, Framing{2, -3, 0}}) {
    const Truncation t = choose_truncation(f, truncation_bound(wh));
    const std::int64_t sign = f.det() > 0 ? 1 : -1;
    for (const SpinC& u : spinc_reps(f)) CHECK(make_regions(f, t, u).euler() == sign);
  }
}

TEST_CASE("hat dimensions") {
  CHECK(hf_hat(NTable(corpus::whitehead()), Framing{1, 1, 0}).total == 1);
  CHECK(hf_hat(NTable(corpus::two_bridge_ln(2)), Framing{1, 1, 0}).total == 9);
  CHECK(hf_hat(NTable(corpus::hopf()), Framing{2, 3, 1}).total == 5);
  CHECK(hf_hat(NTable(corpus::unlink()), Framing{2, 3, 0}).total == 6);
  const HFResult hf = hf_hat(NTable(corpus::whitehead()), Framing{2, 3, 0});
  for (const SpinCResult& r : hf.per_spinc) CHECK(r.cross_checked);
  CHECK_THROWS_AS(hf_hat(NTable(corpus::hopf()), Framing{1, 1, 1}), UnsupportedFraming);
}

TEST_CASE("L-space criterion") {
  const NTable wh(corpus::whitehead());
  const LSpaceVerdict yes = is_lspace(wh, Framing{2, 3, 0});
  CHECK(yes.lspace);
  CHECK(yes.certificate.entries.size() == 6);
  for (const auto& e : yes.certificate.entries) CHECK(e.holds);
  CHECK_FALSE(is_lspace(wh, Framing{-1, 5, 0}).lspace);

  const LSpaceVerdict l3 = is_lspace(NTable(corpus::two_bridge_ln(3)), Framing{1, 1, 0});
  CHECK_FALSE(l3.lspace);
  REQUIRE(l3.certificate.entries.size() == 1);
  CHECK(l3.certificate.entries[0].ker_ker >= 13);
  CHECK_FALSE(l3.certificate.entries[0].holds);
}

TEST_CASE("dense cross-check agrees with the sparse route") {
  SurgeryOptions sparse;
  sparse.cross_check_limit = 0;
  const NTable l2(corpus::two_bridge_ln(2));
  for (std::int64_t p = -3; p <= 3; ++p)
    for (std::int64_t q = -3; q <= 3; ++q) {
      if (p * q == 0) continue;
      const Framing f{p, q, 0};
      CHECK(hf_hat(l2, f).total == hf_hat(l2, f, sparse).total);
    }
}
