#include <doctest.h>

#include <filesystem>

#include "lspace/corpus.hpp"
#include "lspace/errors.hpp"
#include "lspace/link_io.hpp"

using namespace lspace;

TEST_CASE("shipped descriptors") {
  const std::filesystem::path dir = std::filesystem::path(LSPACE_DATA_DIR) / "links";
  const LinkData wh = parse_link_file((dir / "whitehead.json").string());
  CHECK(wh.lk == 0);
  CHECK(wh.delta.coeff(HalfInt::half(1), HalfInt::half(1)) == -1);
  CHECK(wh.delta == corpus::whitehead().delta);

  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    CAPTURE(entry.path().string());
    const LinkData link = parse_link_file(entry.path().string());
    const std::string once = serialize_link(link);
    CHECK(serialize_link(parse_link_json(once)) == once);
    ++count;
  }
  CHECK(count >= 10);
}

TEST_CASE("round trip of the built-in corpus") {
  for (const std::string& name : corpus::names()) {
    if (name.rfind("t2,", 0) == 0 && name != "t2,4") continue;
    CAPTURE(name);
    const LinkData link = corpus::by_name(name);
    const LinkData back = parse_link_json(serialize_link(link));
    CHECK(back.delta == link.delta);
    CHECK(back.lk == link.lk);
    CHECK(back.component2 == link.component2);
  }
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_link_json("{"), InputError);
  CHECK_THROWS_AS(parse_link_json(R"({"lk": 0})"), InputError);
  CHECK_THROWS_AS(parse_link_json(R"({"lk": 0, "delta": [[1, 1, 1]]})"), InputError);
  CHECK_THROWS_AS(parse_link_json(R"({"lk": "one", "delta": []})"), InputError);
  CHECK_THROWS_AS(parse_link_file("/nonexistent/link.json"), InputError);
}
