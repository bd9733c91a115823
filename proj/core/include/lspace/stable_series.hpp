#pragma once

#include <cstdint>
#include <vector>

#include "lspace/halfint.hpp"
#include "lspace/laurent.hpp"

namespace lspace {

/// Coefficients a_k of a one-sided series sum a_k t^k that is constant (tail) for small k
/// and zero for large k. Indices live in a single coset of Z.
class StableSeries {
 public:
  StableSeries() = default;
  StableSeries(HalfInt lower, std::vector<std::int64_t> window, std::int64_t tail);

  /// a_k; k must lie in the series coset.
  std::int64_t coefficient(HalfInt k) const;
  std::int64_t tail_value() const { return tail_; }
  /// a_k = 0 above this index.
  HalfInt upper_bound() const;
  /// a_k = tail below this index.
  HalfInt lower() const { return lower_; }
  const std::vector<std::int64_t>& window() const { return window_; }
  bool in_coset(HalfInt k) const { return same_coset(k, lower_); }

  /// V(k) = sum_{i>=1} a_{k+i}. Finite because the series vanishes above upper_bound.
  std::int64_t sum_above(HalfInt k) const;

  bool operator==(const StableSeries&) const = default;

 private:
  HalfInt lower_;
  std::vector<std::int64_t> window_;  // a_{lower}, a_{lower+1}, ...
  std::int64_t tail_ = 0;
  std::vector<std::int64_t> suffix_;  // suffix_[i] = sum_{t>=i} window_[t]
};

/// Expansion of t*delta(t)/(t-1) in descending powers of t.
StableSeries expand_tail(const LaurentPoly1& delta);

/// Multiply a series back by (t-1)/t, truncated to the window [lo, hi].
LaurentPoly1 collapse_window(const StableSeries& series, HalfInt lo, HalfInt hi);

}  // namespace lspace
