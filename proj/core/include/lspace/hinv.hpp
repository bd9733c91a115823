#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lspace/alexander.hpp"
#include "lspace/halfint.hpp"

namespace lspace {

/// V(k) = sum_{i>=1} a_{k+i}.
std::int64_t knot_v(const StableSeries& series, HalfInt k);

/// U-powers n^{+-L_i}_s of the inclusion maps, evaluated from the Alexander data.
///
/// n^{+L_2}_{s1,s2} = V_2(s2 - lk/2) - D(s1, s2) and n^{+L_1}_{s1,s2} = V_1(s1 - lk/2) - D(s1, s2),
/// where D(s1, s2) = sum of a^L_{i,j} over i >= s1 + 1/2, j >= s2 + 1/2. D is tabulated once at
/// construction, so lookups are O(1) and the table is safe to share between threads.
class NTable {
 public:
  /// With allow_negative = false, n_plus throws NotLSpaceLink on a negative value.
  explicit NTable(LinkData link, bool allow_negative = false);

  const LinkData& link() const { return link_; }
  bool allow_negative() const { return allow_negative_; }

  /// Unchecked value; s must lie in H(L) = (Z + lk/2)^2.
  std::int64_t n_plus_raw(Axis axis, HalfInt s1, HalfInt s2) const;
  std::int64_t n_plus(Axis axis, HalfInt s1, HalfInt s2) const;
  /// Conjugation symmetry: n^{-L_i}_s = n^{+L_i}_{-s}.
  std::int64_t n_minus(Axis axis, HalfInt s1, HalfInt s2) const { return n_plus(axis, -s1, -s2); }

  /// V of the component on `axis` at k.
  std::int64_t v(Axis axis, HalfInt k) const;
  /// The corner sum D(s1, s2).
  std::int64_t corner_sum(HalfInt s1, HalfInt s2) const;

  /// Radius beyond which every n value is determined by the knot-level series.
  HalfInt support_radius() const;

 private:
  void check_lattice(HalfInt s1, HalfInt s2) const;

  LinkData link_;
  bool allow_negative_;
  HalfInt imin_, jmin_;  // lowest exponents of delta
  std::int64_t ni_ = 0, nj_ = 0;
  std::vector<std::int64_t> suffix_;  // (ni_+1) x (nj_+1)
};

/// First vanishing threshold: n^{+L_2}_{s,t} = 0 iff t >= nu (axis L2, s = s1), and the same
/// with the roles of the coordinates exchanged for axis L1. Throws NotLSpaceLink if the column is
/// not of that shape.
HalfInt nu(const NTable& table, Axis axis, HalfInt s_other);

struct NuProfile {
  std::map<HalfInt, HalfInt> nu1, nu2;  // keyed by the other coordinate
  HalfInt radius;
  HalfInt b;
};

/// nu on a window large enough that both ends have stabilized, plus the truncation bound b.
NuProfile nu_profile(const NTable& table);
HalfInt truncation_bound(const NTable& table);

struct NMatrix {
  std::vector<HalfInt> s1_values;  // ascending (columns)
  std::vector<HalfInt> s2_values;  // descending (rows)
  std::vector<std::vector<std::int64_t>> rows;
};

/// n^{+axis} over |s1|, |s2| <= window, laid out with s2 descending.
NMatrix nmatrix(const NTable& table, HalfInt window, Axis axis = Axis::L2);

/// H(L) coordinates of one coset within [-radius, radius], ascending.
std::vector<HalfInt> lattice_window(std::int64_t lk, HalfInt radius);

struct NInvariantScan {
  std::optional<NValueWitness> negative;   // smallest |s1|+|s2| first
  std::optional<NValueWitness> bad_step;   // n(s) - n(s + e_axis) not in {0,1}
};

/// Non-negativity and unit-step checks on the window |s_i| <= radius.
NInvariantScan scan_invariants(const NTable& table, HalfInt radius);

}  // namespace lspace
