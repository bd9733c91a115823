#include <doctest.h>

#include "properties.hpp"

TEST_CASE("zigzag supports against plain elimination") { CHECK(props::zigzag_vs_bruteforce(150, 1) == ""); }

TEST_CASE("square lemma against the full rank") { CHECK(props::square_lemma_vs_rank(80, 2) == ""); }

TEST_CASE("truncation stability") { CHECK(props::truncation_stability(3) == ""); }

TEST_CASE("hat symmetries") { CHECK(props::hf_symmetries(3) == ""); }

TEST_CASE("n-table invariants") { CHECK(props::ntable_invariants() == ""); }

TEST_CASE("Seifert oracle on known fillings") {
  using lspace::Verdict;
  CHECK(oracle::seifert_torus(3, 3, 7) == Verdict::Lspace);
  CHECK(oracle::seifert_torus(3, 1, 9) == Verdict::B1Positive);
  CHECK(oracle::seifert_torus(3, -2, -2) == Verdict::NotLspace);
  CHECK(oracle::seifert_torus(2, 3, 3) == Verdict::Lspace);
}
