#include "lspace/hinv.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "lspace/errors.hpp"

namespace lspace {

namespace {

const HalfInt kHalf = HalfInt::half(1);

HalfInt habs(HalfInt h) { return h < HalfInt(0) ? -h : h; }

std::string axis_name(Axis a) { return a == Axis::L1 ? "L1" : "L2"; }

}  // namespace

std::int64_t knot_v(const StableSeries& series, HalfInt k) { return series.sum_above(k); }

NTable::NTable(LinkData link, bool allow_negative)
    : link_(std::move(link)), allow_negative_(allow_negative) {
  const LaurentPoly2& d = link_.delta;
  if (d.is_zero()) {
    suffix_.assign(1, 0);
    return;
  }
  imin_ = d.min_x();
  jmin_ = d.min_y();
  ni_ = (d.max_x() - imin_).to_int() + 1;
  nj_ = (d.max_y() - jmin_).to_int() + 1;
  suffix_.assign(static_cast<std::size_t>((ni_ + 1) * (nj_ + 1)), 0);
  auto at = [&](std::int64_t a, std::int64_t b) -> std::int64_t& {
    return suffix_[static_cast<std::size_t>(a * (nj_ + 1) + b)];
  };
  for (std::int64_t a = ni_ - 1; a >= 0; --a)
    for (std::int64_t b = nj_ - 1; b >= 0; --b)
      at(a, b) = d.coeff(imin_ + HalfInt(a), jmin_ + HalfInt(b)) + at(a + 1, b) + at(a, b + 1) -
                 at(a + 1, b + 1);
}

void NTable::check_lattice(HalfInt s1, HalfInt s2) const {
  HalfInt c = link_.lattice_coset();
  if (!same_coset(s1, c) || !same_coset(s2, c))
    throw std::invalid_argument("(" + s1.str() + ", " + s2.str() + ") is not in H(L) for lk = " +
                                std::to_string(link_.lk));
}

std::int64_t NTable::corner_sum(HalfInt s1, HalfInt s2) const {
  if (link_.delta.is_zero()) return 0;
  auto idx = [](HalfInt first, HalfInt lo, std::int64_t n) {
    return std::clamp<std::int64_t>((first - lo).to_int(), 0, n);
  };
  std::int64_t a = idx(s1 + kHalf, imin_, ni_);
  std::int64_t b = idx(s2 + kHalf, jmin_, nj_);
  return suffix_[static_cast<std::size_t>(a * (nj_ + 1) + b)];
}

std::int64_t NTable::v(Axis axis, HalfInt k) const {
  return knot_v(axis == Axis::L1 ? link_.series1 : link_.series2, k);
}

std::int64_t NTable::n_plus_raw(Axis axis, HalfInt s1, HalfInt s2) const {
  check_lattice(s1, s2);
  HalfInt shift = HalfInt::half(link_.lk);
  HalfInt own = axis == Axis::L1 ? s1 : s2;
  return v(axis, own - shift) - corner_sum(s1, s2);
}

std::int64_t NTable::n_plus(Axis axis, HalfInt s1, HalfInt s2) const {
  std::int64_t n = n_plus_raw(axis, s1, s2);
  if (n < 0 && !allow_negative_)
    throw NotLSpaceLink("n^{+" + axis_name(axis) + "}_{" + s1.str() + "," + s2.str() +
                        "} = " + std::to_string(n) + " < 0");
  return n;
}

HalfInt NTable::support_radius() const {
  HalfInt r = link_.delta.max_abs_exponent();
  for (const StableSeries* s : {&link_.series1, &link_.series2}) {
    r = std::max({r, habs(s->lower()), habs(s->upper_bound())});
  }
  return HalfInt(r.ceil() + std::abs(link_.lk) + 1);
}

HalfInt nu(const NTable& table, Axis axis, HalfInt s_other) {
  const LinkData& L = table.link();
  const StableSeries& series = axis == Axis::L1 ? L.series1 : L.series2;
  const HalfInt shift = HalfInt::half(L.lk);
  const HalfInt c = L.lattice_coset();
  auto value = [&](HalfInt t) {
    return axis == Axis::L2 ? table.n_plus_raw(Axis::L2, s_other, t)
                            : table.n_plus_raw(Axis::L1, t, s_other);
  };
  auto snap_up = [&](HalfInt t) { return same_coset(t, c) ? t : t + kHalf; };
  auto snap_down = [&](HalfInt t) { return same_coset(t, c) ? t : t - kHalf; };

  HalfInt own_max = L.delta.is_zero() ? HalfInt(0)
                                      : (axis == Axis::L2 ? L.delta.max_y() : L.delta.max_x());
  HalfInt own_min = L.delta.is_zero() ? HalfInt(0)
                                      : (axis == Axis::L2 ? L.delta.min_y() : L.delta.min_x());
  // n vanishes identically from here up: V(t - lk/2) = 0 and D(., t) = 0.
  HalfInt hi = snap_up(std::max(series.upper_bound() + shift, own_max + kHalf));
  // Below here both V and D are in their linear/constant regime.
  HalfInt lo = snap_down(std::min(series.lower() + shift, own_min - kHalf) - HalfInt(1));

  HalfInt t = hi;
  while (t >= lo && value(t) == 0) t -= HalfInt(1);
  HalfInt threshold = t + HalfInt(1);
  if (t < lo) {
    // Everything zero down to the linear regime: only possible for a zero tail.
    throw NotLSpaceLink("n^{+" + axis_name(axis) + "} never becomes positive along " +
                        s_other.str());
  }
  // Below the threshold the column must stay positive with unit steps.
  for (HalfInt u = t; u >= lo; u -= HalfInt(1)) {
    std::int64_t cur = value(u), above = value(u + HalfInt(1));
    if (cur <= 0 || cur - above < 0 || cur - above > 1)
      throw NotLSpaceLink("n^{+" + axis_name(axis) + "} is not a monotone staircase at " +
                          s_other.str() + " (value " + std::to_string(cur) + " at " + u.str() +
                          ")");
  }
  if (series.tail_value() != 1)
    throw NotLSpaceLink("component series tail is " + std::to_string(series.tail_value()) +
                        ", expected 1");
  return threshold;
}

std::vector<HalfInt> lattice_window(std::int64_t lk, HalfInt radius) {
  std::vector<HalfInt> out;
  HalfInt c = coset_of(lk);
  HalfInt start = -radius;
  if (!same_coset(start, c)) start += kHalf;
  for (HalfInt s = start; s <= radius; s += HalfInt(1)) out.push_back(s);
  return out;
}

NuProfile nu_profile(const NTable& table) {
  const LinkData& L = table.link();
  NuProfile p;
  HalfInt radius = table.support_radius();
  for (int attempt = 0; attempt < 4; ++attempt, radius = radius * 2) {
    p.nu1.clear();
    p.nu2.clear();
    for (HalfInt s : lattice_window(L.lk, radius)) {
      p.nu1[s] = nu(table, Axis::L1, s);
      p.nu2[s] = nu(table, Axis::L2, s);
    }
    auto stable = [](const std::map<HalfInt, HalfInt>& m) {
      if (m.size() < 4) return true;
      auto b = m.begin();
      auto e = m.rbegin();
      return b->second == std::next(b)->second && e->second == std::next(e)->second;
    };
    if (stable(p.nu1) && stable(p.nu2)) {
      p.radius = radius;
      HalfInt b(1);
      for (const auto* m : {&p.nu1, &p.nu2})
        for (const auto& kv : *m) b = std::max(b, kv.second);
      // Knot-level maps V(+-s - lk/2) must also be isomorphisms beyond b.
      for (const StableSeries* s : {&L.series1, &L.series2})
        b = std::max(b, s->upper_bound() + HalfInt::half(std::abs(L.lk)));
      p.b = HalfInt(b.ceil());
      return p;
    }
  }
  throw NotLSpaceLink("nu did not stabilize within radius " + radius.str());
}

HalfInt truncation_bound(const NTable& table) { return nu_profile(table).b; }

NMatrix nmatrix(const NTable& table, HalfInt window, Axis axis) {
  NMatrix m;
  m.s1_values = lattice_window(table.link().lk, window);
  m.s2_values.assign(m.s1_values.rbegin(), m.s1_values.rend());
  for (HalfInt s2 : m.s2_values) {
    std::vector<std::int64_t> row;
    row.reserve(m.s1_values.size());
    for (HalfInt s1 : m.s1_values) row.push_back(table.n_plus_raw(axis, s1, s2));
    m.rows.push_back(std::move(row));
  }
  return m;
}

NInvariantScan scan_invariants(const NTable& table, HalfInt radius) {
  NInvariantScan out;
  auto better = [](const NValueWitness& a, const std::optional<NValueWitness>& b) {
    if (!b) return true;
    auto key = [](const NValueWitness& w) {
      return std::make_tuple(habs(w.s1) + habs(w.s2), w.axis == Axis::L1 ? 0 : 1, w.s1, w.s2);
    };
    return key(a) < key(*b);
  };
  const auto win = lattice_window(table.link().lk, radius);
  for (Axis axis : {Axis::L1, Axis::L2}) {
    for (HalfInt s1 : win) {
      for (HalfInt s2 : win) {
        std::int64_t n = table.n_plus_raw(axis, s1, s2);
        if (n < 0) {
          NValueWitness w{axis, s1, s2, n};
          if (better(w, out.negative)) out.negative = w;
        }
        HalfInt t1 = axis == Axis::L1 ? s1 + HalfInt(1) : s1;
        HalfInt t2 = axis == Axis::L2 ? s2 + HalfInt(1) : s2;
        std::int64_t step = n - table.n_plus_raw(axis, t1, t2);
        if (step < 0 || step > 1) {
          NValueWitness w{axis, s1, s2, step};
          if (better(w, out.bad_step)) out.bad_step = w;
        }
      }
    }
  }
  return out;
}

}  // namespace lspace
