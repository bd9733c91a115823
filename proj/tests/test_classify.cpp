#include <doctest.h>

#include "lspace/classify.hpp"
#include "lspace/corpus.hpp"
#include "lspace/errors.hpp"

using namespace lspace;

TEST_CASE("torus closed form") {
  CHECK(torus_oracle(2, 3, 3) == Verdict::Lspace);
  CHECK(torus_oracle(2, 2, 2) == Verdict::B1Positive);
  CHECK(torus_oracle(10, 11, 11) == Verdict::Lspace);
  CHECK(torus_oracle(10, 12, 8) == Verdict::Lspace);
  CHECK(torus_oracle(3, -2, -2) == Verdict::NotLspace);
  for (std::int64_t q = -8; q <= 8; ++q)
    if (q != 4) CHECK(torus_oracle(4, 4, q) == Verdict::Lspace);
}

TEST_CASE("region scan") {
  const NTable t24(corpus::torus(2));
  const RegionVerdict region = region_scan(t24, GridRange{-4, 4});
  CHECK(region.grid.size() == 81);
  CHECK(region.at(3, 3) == Verdict::Lspace);
  CHECK(region.at(2, 2) == Verdict::B1Positive);
  CHECK(region.at(1, 4) == Verdict::B1Positive);
  for (const auto& [cell, v] : region.grid)
    if (v != Verdict::B1Positive) CHECK(v == torus_oracle(2, cell.first, cell.second));

  SUBCASE("independent of threading") {
    const RegionVerdict single = region_scan(t24, GridRange{-4, 4}, 1);
    CHECK(single.grid == region.grid);
  }
  SUBCASE("empty range") {
    const RegionVerdict none = region_scan(t24, GridRange{1, 0});
    CHECK(none.grid.empty());
    CHECK(render(none, RenderFormat::Ascii).empty());
  }
}

TEST_CASE("ascii rendering of the Whitehead region") {
  const RegionVerdict region = region_scan(NTable(corpus::whitehead()), GridRange{-3, 3});
  const std::string text = render(region, RenderFormat::Ascii);
  CHECK_FALSE(text.empty());
  CHECK(lspace_cells(region).size() == 9);
  for (auto [p1, p2] : lspace_cells(region)) {
    CHECK(p1 > 0);
    CHECK(p2 > 0);
  }
  CHECK(render(region, RenderFormat::Svg).find("<svg") != std::string::npos);
  CHECK(parse_render_format("json") == RenderFormat::Json);
  CHECK_THROWS_AS(parse_render_format("png"), InputError);
}

TEST_CASE("propagation") {
  const GridRange range{-6, 6};
  CertificateSet seeds;
  seeds.lk = 0;
  seeds.add(1, 1, "seed");
  const CertificateSet closure = propagate_induction(seeds, ComponentSlopes::unknots(), range);
  for (std::int64_t p1 = 1; p1 <= 6; ++p1)
    for (std::int64_t p2 = 1; p2 <= 6; ++p2) CHECK(closure.contains(p1, p2));

  CHECK(propagate_induction(CertificateSet{}, ComponentSlopes::unknots(), range).facts.empty());

  SUBCASE("certificates are sound") {
    const RegionVerdict region = region_scan(NTable(corpus::whitehead()), range);
    for (const auto& [cell, c] : closure.facts) CHECK(region.at(cell.first, cell.second) == Verdict::Lspace);
  }
}
