#include "lspace/alexander.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "lspace/errors.hpp"
#include "lspace/hinv.hpp"

namespace lspace {

namespace {

const HalfInt kHalf = HalfInt::half(1);

std::string pt(HalfInt i, HalfInt j) { return "(" + i.str() + ", " + j.str() + ")"; }

}  // namespace

LaurentPoly1 symmetrize_knot(const LaurentPoly1& delta) {
  if (delta.is_zero()) throw InputError("knot polynomial is zero");
  LaurentPoly1 c = delta.centered();
  if (!c.is_palindromic()) throw InputError("knot polynomial " + delta.str() + " is not symmetric");
  for (const auto& kv : c.terms())
    if (!kv.first.is_integral()) throw InputError("knot polynomial " + delta.str() + " has half-integer span");
  std::int64_t at1 = c.eval_at_one();
  if (at1 == -1) return -c;
  if (at1 != 1) throw InputError("knot polynomial " + delta.str() + " has |Delta(1)| != 1");
  return c;
}

LaurentPoly1 murasugi_component(const LaurentPoly2& delta, std::int64_t lk, int which) {
  if (lk == 0) throw InputError("lk = 0: components required");
  if (which != 1 && which != 2) throw std::invalid_argument("component index must be 1 or 2");
  LaurentPoly1 reduced = delta.substitute_one(which == 1 ? Variable::Y : Variable::X);
  if (reduced.is_zero()) throw InputError("Delta_L vanishes at 1; Murasugi relation cannot determine component");
  LaurentPoly1 den;
  for (std::int64_t k = 0; k < std::abs(lk); ++k) den.add_term(HalfInt(k), 1);
  LaurentPoly1 q;
  if (!divide_exact(reduced, den, q))
    throw InputError("Delta_L(t,1) = " + reduced.str() + " is not divisible by (1-t^lk)/(1-t)");
  return symmetrize_knot(q);
}

LaurentPoly2 normalize(const LaurentPoly2& delta, std::int64_t lk, const StableSeries& series2) {
  if (delta.is_zero()) return delta;
  HalfInt j0 = delta.max_y();
  HalfInt i0 = HalfInt::from_doubled(INT64_MIN / 4);
  for (const auto& kv : delta.terms())
    if (kv.first.second == j0) i0 = std::max(i0, kv.first.first);
  HalfInt k = j0 - HalfInt::half(lk) + kHalf;
  int want = series2.coefficient(k) == 1 ? 1 : -1;
  std::int64_t a = delta.coeff(i0, j0);
  return (a > 0) == (want > 0) ? delta : -delta;
}

LinkData make_link_data(std::string name, std::int64_t lk, const LaurentPoly2& raw_delta,
                        std::optional<LaurentPoly1> c1, std::optional<LaurentPoly1> c2) {
  LinkData L;
  L.name = std::move(name);
  L.lk = lk;
  LaurentPoly2 d = raw_delta.centered();
  LaurentPoly2::Key w;
  if (!d.exponents_in_coset(L.delta_coset(), &w))
    throw InputError("exponent " + pt(w.first, w.second) + " not in Z + (lk-1)/2 for lk = " +
                     std::to_string(lk));
  if (!d.is_conjugation_symmetric(&w))
    throw InputError("symmetry violation: a" + pt(w.first, w.second) + " != a" +
                     pt(-w.first, -w.second));
  if (lk == 0 && (!c1 || !c2)) throw InputError("lk = 0: components required");
  for (int which : {1, 2}) {
    std::optional<LaurentPoly1>& given = which == 1 ? c1 : c2;
    LaurentPoly1& out = which == 1 ? L.component1 : L.component2;
    if (given) {
      out = symmetrize_knot(*given);
      if (lk != 0 && !d.is_zero() && murasugi_component(d, lk, which) != out)
        throw InputError("component " + std::to_string(which) + " polynomial " + out.str() +
                         " disagrees with the Murasugi relation");
    } else {
      out = murasugi_component(d, lk, which);
    }
  }
  L.series1 = expand_tail(L.component1);
  L.series2 = expand_tail(L.component2);
  L.delta = normalize(d, lk, L.series2);
  return L;
}

LinkData reverse_second_component(const LinkData& link) {
  return make_link_data(link.name + "-rev2", -link.lk, link.delta.invert_y(), link.component1,
                        link.component2);
}

LinkData swap_components(const LinkData& link) {
  return make_link_data(link.name + "-swap", link.lk, link.delta.transposed(), link.component2,
                        link.component1);
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "n/a";
  }
  return "?";
}

bool ObstructionReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

std::vector<char> ObstructionReport::failed_ids() const {
  std::vector<char> ids;
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) ids.push_back(c.id);
  return ids;
}

std::string ObstructionReport::verdict() const {
  auto ids = failed_ids();
  if (ids.empty()) return "passes all polynomial obstructions";
  std::string s = "fails obstruction ";
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k) s += ", ";
    s += std::string("(") + ids[k] + ")";
  }
  return s;
}

CheckResult coefficient_bound_check(const std::vector<std::int64_t>& coeffs, int components) {
  CheckResult r{'a', "coefficient bound |a| <= 2^(l-2)", CheckStatus::Pass, ""};
  if (components < 2) {
    r.status = CheckStatus::NotApplicable;
    return r;
  }
  std::int64_t bound = std::int64_t{1} << (components - 2);
  for (std::int64_t c : coeffs) {
    if (std::abs(c) > bound) {
      r.status = CheckStatus::Fail;
      r.witness = "coefficient " + std::to_string(c) + " exceeds " + std::to_string(bound);
      return r;
    }
  }
  return r;
}

namespace {

CheckResult check_alternating(const LaurentPoly2& d) {
  CheckResult r{'b', "coefficients in {-1,1}, alternating along rows and columns", CheckStatus::Pass, ""};
  if (d.is_zero()) {
    r.status = CheckStatus::NotApplicable;
    return r;
  }
  for (const auto& [k, c] : d.terms()) {
    if (c != 1 && c != -1) {
      r.status = CheckStatus::Fail;
      r.witness = "a" + pt(k.first, k.second) + " = " + std::to_string(c);
      return r;
    }
  }
  // Group nonzero entries by row (fixed j) and by column (fixed i), in increasing order.
  std::map<HalfInt, std::vector<std::pair<HalfInt, std::int64_t>>> rows, cols;
  for (const auto& [k, c] : d.terms()) {
    rows[k.second].push_back({k.first, c});
    cols[k.first].push_back({k.second, c});
  }
  auto scan = [&](const auto& lines, bool is_row) {
    for (const auto& [fixed, entries] : lines) {
      auto sorted = entries;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t t = 1; t < sorted.size(); ++t) {
        if (sorted[t].second == sorted[t - 1].second) {
          HalfInt a = sorted[t - 1].first, b = sorted[t].first;
          r.status = CheckStatus::Fail;
          r.witness = std::string(is_row ? "row j = " : "column i = ") + fixed.str() +
                      ": equal signs at " + (is_row ? pt(a, fixed) : pt(fixed, a)) + " and " +
                      (is_row ? pt(b, fixed) : pt(fixed, b));
          return false;
        }
      }
    }
    return true;
  };
  if (scan(rows, true)) scan(cols, false);
  return r;
}

CheckResult check_series(const LinkData& L) {
  CheckResult r{'c', "component series coefficients in {0,1}", CheckStatus::Pass, ""};
  for (int which : {1, 2}) {
    const StableSeries& s = which == 1 ? L.series1 : L.series2;
    if (s.tail_value() != 1) {
      r.status = CheckStatus::Fail;
      r.witness = "component " + std::to_string(which) + " tail " + std::to_string(s.tail_value());
      return r;
    }
    for (std::size_t t = 0; t < s.window().size(); ++t) {
      std::int64_t c = s.window()[t];
      if (c != 0 && c != 1) {
        r.status = CheckStatus::Fail;
        r.witness = "a^{L" + std::to_string(which) + "}_" +
                    (s.lower() + HalfInt(static_cast<std::int64_t>(t))).str() + " = " + std::to_string(c);
        return r;
      }
    }
  }
  return r;
}

// Every corner (i0, j0) with nothing to its right in the row and nothing above it in the column.
CheckResult check_corners(const LinkData& L) {
  CheckResult r{'d', "corner compatibility of link and component series", CheckStatus::Pass, ""};
  const LaurentPoly2& d = L.delta;
  if (d.is_zero()) {
    r.status = CheckStatus::NotApplicable;
    return r;
  }
  std::map<HalfInt, HalfInt> row_max, col_max;
  for (const auto& kv : d.terms()) {
    auto [i, j] = kv.first;
    auto rm = row_max.find(j);
    if (rm == row_max.end() || rm->second < i) row_max[j] = i;
    auto cm = col_max.find(i);
    if (cm == col_max.end() || cm->second < j) col_max[i] = j;
  }
  const HalfInt shift = HalfInt::half(L.lk) - kHalf;
  for (const auto& [k, c] : d.terms()) {
    auto [i, j] = k;
    if (row_max[j] != i || col_max[i] != j) continue;
    std::int64_t a1 = L.series1.coefficient(i - shift);
    std::int64_t a2 = L.series2.coefficient(j - shift);
    bool ok = (c == 1 && a1 == 1 && a2 == 1) || (c == -1 && a1 == 0 && a2 == 0);
    if (!ok) {
      r.status = CheckStatus::Fail;
      r.witness = "corner a" + pt(i, j) + " = " + std::to_string(c) + " but a^{L1}_" +
                  (i - shift).str() + " = " + std::to_string(a1) + ", a^{L2}_" + (j - shift).str() +
                  " = " + std::to_string(a2);
      return r;
    }
  }
  return r;
}

std::string describe(const NValueWitness& w, const char* what) {
  std::ostringstream os;
  os << what << "^{+" << (w.axis == Axis::L1 ? "L1" : "L2") << "}_{" << w.s1.str() << ","
     << w.s2.str() << "} = " << w.value;
  return os.str();
}

}  // namespace

ObstructionReport obstruction_report(const LinkData& link, int components) {
  ObstructionReport rep;
  std::vector<std::int64_t> coeffs;
  for (const auto& kv : link.delta.terms()) coeffs.push_back(kv.second);
  rep.checks.push_back(coefficient_bound_check(coeffs, components));
  rep.checks.push_back(check_alternating(link.delta));
  CheckResult series = check_series(link);
  rep.checks.push_back(series);
  rep.checks.push_back(check_corners(link));

  CheckResult neg{'e', "n^{+L1}, n^{+L2} non-negative", CheckStatus::Pass, ""};
  CheckResult step{'f', "n steps in {0,1}", CheckStatus::Pass, ""};
  NTable table(link, true);
  HalfInt radius = table.support_radius() + HalfInt(2);
  NInvariantScan scan = scan_invariants(table, radius);
  if (scan.negative) {
    neg.status = CheckStatus::Fail;
    neg.witness = describe(*scan.negative, "n");
    rep.negative_n = scan.negative;
  }
  if (scan.bad_step) {
    step.status = CheckStatus::Fail;
    step.witness = describe(*scan.bad_step, "step of n");
  }
  rep.checks.push_back(neg);
  rep.checks.push_back(step);
  return rep;
}

}  // namespace lspace
