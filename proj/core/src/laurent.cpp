#include "lspace/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "lspace/errors.hpp"

namespace lspace {

namespace {

template <class M, class K>
void accumulate(M& m, const K& k, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

std::string term_coeff(std::int64_t c, bool first, bool has_monomial) {
  std::string s;
  if (c < 0) s = first ? "-" : " - ";
  else if (!first) s = " + ";
  std::int64_t a = c < 0 ? -c : c;
  if (a != 1 || !has_monomial) s += std::to_string(a);
  return s;
}

std::string power(char v, HalfInt e) {
  if (e == HalfInt(0)) return "";
  if (e == HalfInt(1)) return std::string(1, v);
  return std::string(1, v) + "^" + (e.is_integral() ? e.str() : "(" + e.str() + ")");
}

}  // namespace

LaurentPoly1::LaurentPoly1(std::int64_t c) { accumulate(c_, HalfInt(0), c); }

LaurentPoly1 LaurentPoly1::from_terms(const std::vector<std::pair<HalfInt, std::int64_t>>& terms) {
  LaurentPoly1 p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

void LaurentPoly1::add_term(HalfInt e, std::int64_t c) { accumulate(c_, e, c); }

std::int64_t LaurentPoly1::coeff(HalfInt e) const {
  auto it = c_.find(e);
  return it == c_.end() ? 0 : it->second;
}

HalfInt LaurentPoly1::min_exponent() const {
  if (c_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return c_.begin()->first;
}

HalfInt LaurentPoly1::max_exponent() const {
  if (c_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return c_.rbegin()->first;
}

std::int64_t LaurentPoly1::eval_at_one() const {
  std::int64_t s = 0;
  for (const auto& kv : c_) s += kv.second;
  return s;
}

LaurentPoly1 LaurentPoly1::shifted(HalfInt by) const {
  LaurentPoly1 p;
  for (const auto& [e, c] : c_) p.c_.emplace(e + by, c);
  return p;
}

LaurentPoly1 LaurentPoly1::centered() const {
  if (c_.empty()) return *this;
  std::int64_t span = min_exponent().doubled() + max_exponent().doubled();
  if (span % 2 != 0) throw InputError("polynomial " + str() + " cannot be centered on (1/2)Z");
  return shifted(HalfInt::from_doubled(-span / 2));
}

bool LaurentPoly1::is_palindromic() const {
  return std::all_of(c_.begin(), c_.end(), [&](const auto& kv) { return coeff(-kv.first) == kv.second; });
}

LaurentPoly1 LaurentPoly1::operator-() const {
  LaurentPoly1 p = *this;
  for (auto& kv : p.c_) kv.second = -kv.second;
  return p;
}

LaurentPoly1 LaurentPoly1::operator+(const LaurentPoly1& o) const {
  LaurentPoly1 p = *this;
  for (const auto& [e, c] : o.c_) p.add_term(e, c);
  return p;
}

LaurentPoly1 LaurentPoly1::operator-(const LaurentPoly1& o) const { return *this + (-o); }

LaurentPoly1 LaurentPoly1::operator*(const LaurentPoly1& o) const {
  LaurentPoly1 p;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) p.add_term(e1 + e2, c1 * c2);
  return p;
}

std::string LaurentPoly1::str(char var) const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    std::string mono = power(var, it->first);
    s += term_coeff(it->second, first, !mono.empty()) + mono;
    first = false;
  }
  return s;
}

bool divide_exact(const LaurentPoly1& num, const LaurentPoly1& den, LaurentPoly1& quotient) {
  if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
  quotient = LaurentPoly1();
  if (num.is_zero()) return true;
  HalfInt n0 = num.min_exponent(), d0 = den.min_exponent();
  auto index = [](HalfInt e, HalfInt base) -> std::int64_t {
    HalfInt off = e - base;
    if (!off.is_integral()) throw InputError("mixed exponent cosets in division");
    return off.to_int();
  };
  std::vector<std::int64_t> r(static_cast<std::size_t>(index(num.max_exponent(), n0)) + 1, 0);
  std::vector<std::int64_t> d(static_cast<std::size_t>(index(den.max_exponent(), d0)) + 1, 0);
  for (const auto& [e, c] : num.terms()) r[index(e, n0)] = c;
  for (const auto& [e, c] : den.terms()) d[index(e, d0)] = c;
  if (d.size() > r.size()) return false;
  const std::int64_t lead = d.back();
  std::vector<std::int64_t> q(r.size() - d.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    std::int64_t top = r[k + d.size() - 1];
    if (top % lead != 0) return false;
    q[k] = top / lead;
    for (std::size_t t = 0; t < d.size(); ++t) r[k + t] -= q[k] * d[t];
  }
  if (std::any_of(r.begin(), r.end(), [](std::int64_t v) { return v != 0; })) return false;
  for (std::size_t k = 0; k < q.size(); ++k)
    quotient.add_term(n0 - d0 + HalfInt(static_cast<std::int64_t>(k)), q[k]);
  return true;
}

LaurentPoly2 LaurentPoly2::from_terms(const std::vector<std::tuple<HalfInt, HalfInt, std::int64_t>>& terms) {
  LaurentPoly2 p;
  for (const auto& [i, j, c] : terms) p.add_term(i, j, c);
  return p;
}

void LaurentPoly2::add_term(HalfInt i, HalfInt j, std::int64_t c) { accumulate(c_, Key{i, j}, c); }

std::int64_t LaurentPoly2::coeff(HalfInt i, HalfInt j) const {
  auto it = c_.find(Key{i, j});
  return it == c_.end() ? 0 : it->second;
}

#define LSPACE_EXTREME(name, field, cmp)                                        \
  HalfInt LaurentPoly2::name() const {                                         \
    if (c_.empty()) throw std::logic_error(#name " of zero polynomial");        \
    HalfInt best = c_.begin()->first.field;                                    \
    for (const auto& kv : c_)                                                  \
      if (kv.first.field cmp best) best = kv.first.field;                      \
    return best;                                                               \
  }
LSPACE_EXTREME(min_x, first, <)
LSPACE_EXTREME(max_x, first, >)
LSPACE_EXTREME(min_y, second, <)
LSPACE_EXTREME(max_y, second, >)
#undef LSPACE_EXTREME

HalfInt LaurentPoly2::max_abs_exponent() const {
  HalfInt m(0);
  for (const auto& kv : c_) {
    for (HalfInt e : {kv.first.first, kv.first.second}) m = std::max(m, e < HalfInt(0) ? -e : e);
  }
  return m;
}

LaurentPoly1 LaurentPoly2::substitute_one(Variable which) const {
  LaurentPoly1 p;
  for (const auto& [k, c] : c_) p.add_term(which == Variable::Y ? k.first : k.second, c);
  return p;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 p = *this;
  for (auto& kv : p.c_) kv.second = -kv.second;
  return p;
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
  LaurentPoly2 p;
  for (const auto& [k1, c1] : c_)
    for (const auto& [k2, c2] : o.c_) p.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return p;
}

LaurentPoly2 LaurentPoly2::shifted(HalfInt di, HalfInt dj) const {
  LaurentPoly2 p;
  for (const auto& [k, c] : c_) p.c_.emplace(Key{k.first + di, k.second + dj}, c);
  return p;
}

LaurentPoly2 LaurentPoly2::transposed() const {
  LaurentPoly2 p;
  for (const auto& [k, c] : c_) p.c_.emplace(Key{k.second, k.first}, c);
  return p;
}

LaurentPoly2 LaurentPoly2::invert_y() const {
  LaurentPoly2 p;
  for (const auto& [k, c] : c_) p.c_.emplace(Key{k.first, -k.second}, c);
  return p;
}

LaurentPoly2 LaurentPoly2::centered() const {
  if (c_.empty()) return *this;
  std::int64_t sx = min_x().doubled() + max_x().doubled();
  std::int64_t sy = min_y().doubled() + max_y().doubled();
  if (sx % 2 != 0 || sy % 2 != 0) throw InputError("polynomial cannot be centered on (1/2)Z^2");
  return shifted(HalfInt::from_doubled(-sx / 2), HalfInt::from_doubled(-sy / 2));
}

bool LaurentPoly2::is_conjugation_symmetric(Key* witness) const {
  for (const auto& [k, c] : c_) {
    if (coeff(-k.first, -k.second) != c) {
      if (witness) *witness = k;
      return false;
    }
  }
  return true;
}

bool LaurentPoly2::exponents_in_coset(HalfInt offset, Key* witness) const {
  for (const auto& kv : c_) {
    if (!same_coset(kv.first.first, offset) || !same_coset(kv.first.second, offset)) {
      if (witness) *witness = kv.first;
      return false;
    }
  }
  return true;
}

std::string LaurentPoly2::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    std::string mono = power('x', it->first.first);
    std::string my = power('y', it->first.second);
    if (!mono.empty() && !my.empty()) mono += "*";
    mono += my;
    os << term_coeff(it->second, first, !mono.empty()) << mono;
    first = false;
  }
  return os.str();
}

}  // namespace lspace
