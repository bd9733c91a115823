#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace lspace {

// Floor/ceil division for signed integers (b != 0).
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

/// An element of (1/2)Z. Stored doubled so every operation is integer arithmetic.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(std::int64_t integer) : d_(2 * integer) {}  // NOLINT: integers embed

  static constexpr HalfInt from_doubled(std::int64_t d) {
    HalfInt h;
    h.d_ = d;
    return h;
  }
  /// n/2
  static constexpr HalfInt half(std::int64_t n) { return from_doubled(n); }

  constexpr std::int64_t doubled() const { return d_; }
  constexpr bool is_integral() const { return d_ % 2 == 0; }
  /// Throws std::domain_error unless integral.
  std::int64_t to_int() const;
  constexpr std::int64_t floor() const { return floor_div(d_, 2); }
  constexpr std::int64_t ceil() const { return ceil_div(d_, 2); }

  constexpr HalfInt operator-() const { return from_doubled(-d_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_doubled(d_ + o.d_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_doubled(d_ - o.d_); }
  constexpr HalfInt& operator+=(HalfInt o) { d_ += o.d_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { d_ -= o.d_; return *this; }
  constexpr HalfInt operator*(std::int64_t k) const { return from_doubled(d_ * k); }

  constexpr auto operator<=>(const HalfInt&) const = default;

  /// "3", "-1/2", ...
  std::string str() const;

 private:
  std::int64_t d_ = 0;
};

/// a and b differ by an integer.
constexpr bool same_coset(HalfInt a, HalfInt b) { return (a - b).is_integral(); }

/// Representative of Z + k/2 in {0, 1/2}.
constexpr HalfInt coset_of(std::int64_t k) { return HalfInt::from_doubled(((k % 2) + 2) % 2); }

}  // namespace lspace

template <>
struct std::hash<lspace::HalfInt> {
  std::size_t operator()(lspace::HalfInt h) const noexcept {
    return std::hash<std::int64_t>{}(h.doubled());
  }
};
