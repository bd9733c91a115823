#include "lspace/stable_series.hpp"

#include <stdexcept>

#include "lspace/errors.hpp"

namespace lspace {

StableSeries::StableSeries(HalfInt lower, std::vector<std::int64_t> window, std::int64_t tail)
    : lower_(lower), window_(std::move(window)), tail_(tail) {
  while (!window_.empty() && window_.back() == 0) window_.pop_back();
  suffix_.assign(window_.size() + 1, 0);
  for (std::size_t i = window_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + window_[i];
}

std::int64_t StableSeries::coefficient(HalfInt k) const {
  if (!in_coset(k)) throw std::invalid_argument("series index " + k.str() + " outside coset");
  if (k < lower_) return tail_;
  std::int64_t off = (k - lower_).to_int();
  return off < static_cast<std::int64_t>(window_.size()) ? window_[off] : 0;
}

HalfInt StableSeries::upper_bound() const {
  if (window_.empty()) return lower_ - HalfInt(1);
  return lower_ + HalfInt(static_cast<std::int64_t>(window_.size()) - 1);
}

std::int64_t StableSeries::sum_above(HalfInt k) const {
  if (!in_coset(k)) throw std::invalid_argument("series index " + k.str() + " outside coset");
  HalfInt first = k + HalfInt(1);
  std::int64_t total = 0;
  if (first < lower_) {
    total += tail_ * (lower_ - first).to_int();
    first = lower_;
  }
  std::int64_t off = (first - lower_).to_int();
  if (off < static_cast<std::int64_t>(window_.size())) total += suffix_[off];
  return total;
}

StableSeries expand_tail(const LaurentPoly1& delta) {
  if (delta.is_zero()) return StableSeries(HalfInt(0), {}, 0);
  // t/(t-1) = sum_{k>=0} t^{-k}, so a_m = sum_{e >= m} delta_e.
  HalfInt lo = delta.min_exponent(), hi = delta.max_exponent();
  for (const auto& kv : delta.terms())
    if (!same_coset(kv.first, lo)) throw InputError("exponents of " + delta.str() + " span two cosets");
  std::int64_t n = (hi - lo).to_int() + 1;
  std::vector<std::int64_t> w(static_cast<std::size_t>(n), 0);
  std::int64_t run = 0;
  for (std::int64_t i = n - 1; i >= 0; --i) {
    run += delta.coeff(lo + HalfInt(i));
    w[static_cast<std::size_t>(i)] = run;
  }
  return StableSeries(lo, std::move(w), delta.eval_at_one());
}

LaurentPoly1 collapse_window(const StableSeries& series, HalfInt lo, HalfInt hi) {
  LaurentPoly1 p;
  for (HalfInt k = lo; k <= hi; k += HalfInt(1))
    p.add_term(k, series.coefficient(k) - series.coefficient(k + HalfInt(1)));
  return p;
}

}  // namespace lspace
