#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lspace/halfint.hpp"
#include "lspace/laurent.hpp"
#include "lspace/stable_series.hpp"

namespace lspace {

/// Normalized polynomial data of a 2-component link: everything the surgery formula needs.
struct LinkData {
  std::string name;
  std::int64_t lk = 0;
  LaurentPoly2 delta;  // normalized a^L_{i,j}
  LaurentPoly1 component1, component2;  // symmetrized, Delta(1) = 1
  StableSeries series1, series2;  // t/(t-1) Delta_{L_i}(t)

  /// Exponent coset of delta: Z + (lk-1)/2.
  HalfInt delta_coset() const { return coset_of(lk - 1); }
  /// Coset of H(L) in each coordinate: Z + lk/2.
  HalfInt lattice_coset() const { return coset_of(lk); }
};

/// Delta_{L_i}(t) from Delta_L(t,1) = (1 - t^lk)/(1 - t) Delta_{L_1}(t) (which = 1), or the
/// analogue with x = 1 (which = 2). Symmetrized with value 1 at t = 1.
LaurentPoly1 murasugi_component(const LaurentPoly2& delta, std::int64_t lk, int which);

/// Center a knot polynomial and fix its sign so that Delta(1) = 1.
LaurentPoly1 symmetrize_knot(const LaurentPoly1& delta);

/// +-delta with the sign fixed by the corner rule at (i0, j0).
LaurentPoly2 normalize(const LaurentPoly2& delta, std::int64_t lk, const StableSeries& series2);

/// Center, validate cosets/symmetry, derive missing components, normalize.
LinkData make_link_data(std::string name, std::int64_t lk, const LaurentPoly2& raw_delta,
                        std::optional<LaurentPoly1> c1 = std::nullopt,
                        std::optional<LaurentPoly1> c2 = std::nullopt);

/// The same link with the orientation of the second component reversed (lk -> -lk).
LinkData reverse_second_component(const LinkData& link);
/// Components relabelled: x <-> y.
LinkData swap_components(const LinkData& link);

enum class CheckStatus { Pass, Fail, NotApplicable };
const char* to_string(CheckStatus s);

enum class Axis { L1, L2 };

struct NValueWitness {
  Axis axis;
  HalfInt s1, s2;
  std::int64_t value;
};

struct CheckResult {
  char id;  // 'a'..'f'
  std::string title;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string witness;  // nonempty whenever status == Fail
};

struct ObstructionReport {
  std::vector<CheckResult> checks;
  std::optional<NValueWitness> negative_n;  // first negative n found by check (e)

  bool passed() const;
  std::vector<char> failed_ids() const;
  /// "passes all polynomial obstructions" or "fails obstruction (d), (e)".
  std::string verdict() const;
};

/// Checks (a)-(f) on a 2-component link.
ObstructionReport obstruction_report(const LinkData& link, int components = 2);

/// Check (a) alone for an l-component link given only its coefficients: |a| <= 2^{l-2}.
CheckResult coefficient_bound_check(const std::vector<std::int64_t>& coeffs, int components);

}  // namespace lspace
