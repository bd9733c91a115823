#include "lspace/corpus.hpp"

#include <cstdlib>
#include <stdexcept>

#include "lspace/errors.hpp"

namespace lspace::corpus {

namespace {
const HalfInt kHalf = HalfInt::half(1);
}

LinkData hopf() { return make_link_data("hopf", 1, LaurentPoly2::from_terms({{0, 0, 1}})); }

LinkData negative_hopf() { return make_link_data("hopf-", -1, LaurentPoly2::from_terms({{0, 0, 1}})); }

LinkData torus(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("T(2,2n) needs n >= 1");
  LaurentPoly2 d;
  for (std::int64_t k = 0; k < n; ++k) {
    HalfInt e = HalfInt::half(2 * k - (n - 1));
    d.add_term(e, e, 1);
  }
  return make_link_data("t2," + std::to_string(2 * n), n, d);
}

LinkData unlink() {
  return make_link_data("unlink", 0, LaurentPoly2(), LaurentPoly1(1), LaurentPoly1(1));
}

LinkData two_bridge_ln(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("L_n needs n >= 1");
  LaurentPoly2 d;
  for (std::int64_t j = -n; j <= n - 1; ++j) {
    const HalfInt aj = HalfInt::from_doubled(std::abs(2 * j + 1));  // |j + 1/2|
    const HalfInt lo = HalfInt(-n) - kHalf + aj, hi = HalfInt(n) - kHalf - aj;
    for (std::int64_t i = lo.ceil(); HalfInt(i) <= hi; ++i) {
      const std::int64_t sign = ((i + j) % 2 == 0) ? 1 : -1;
      d.add_term(HalfInt(i) + kHalf, HalfInt(j) + kHalf, sign);
    }
  }
  std::string name = n == 1 ? "whitehead" : "ln:" + std::to_string(n);
  return make_link_data(name, 0, d, LaurentPoly1(1), LaurentPoly1(1));
}

LinkData whitehead() { return two_bridge_ln(1); }

LinkData l7n2() {
  const HalfInt h = kHalf;
  LaurentPoly2 d = LaurentPoly2::from_terms({{h, h, 1}, {h, -h, -1}, {-h, h, -1}, {-h, -h, 1}});
  LaurentPoly1 trefoil = LaurentPoly1::from_terms({{1, 1}, {0, -1}, {-1, 1}});
  return make_link_data("l7n2", 0, d, LaurentPoly1(1), trefoil);
}

std::vector<std::int64_t> l7a7_mirror_coefficients() { return {1, -1, -1, 2, -2, 1, 1, -1}; }

LinkData by_name(const std::string& name) {
  if (name == "hopf") return hopf();
  if (name == "hopf-") return negative_hopf();
  if (name == "unlink") return unlink();
  if (name == "whitehead") return whitehead();
  if (name == "l7n2") return l7n2();
  auto number = [&](std::size_t from) {
    std::size_t used = 0;
    long long v = std::stoll(name.substr(from), &used);
    if (from + used != name.size()) throw InputError("unknown corpus link '" + name + "'");
    return static_cast<std::int64_t>(v);
  };
  try {
    if (name.rfind("t2,", 0) == 0) {
      std::int64_t m = number(3);
      if (m % 2 != 0) throw InputError("T(2,m) with odd m is a knot");
      return torus(m / 2);
    }
    if (name.rfind("ln:", 0) == 0) return two_bridge_ln(number(3));
  } catch (const std::logic_error&) {
    throw InputError("unknown corpus link '" + name + "'");
  }
  throw InputError("unknown corpus link '" + name + "'");
}

std::vector<std::string> names() {
  return {"hopf", "hopf-", "unlink", "whitehead", "ln:2", "ln:3", "ln:4", "l7n2", "t2,4", "t2,6"};
}

}  // namespace lspace::corpus
