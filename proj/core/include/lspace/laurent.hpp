#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lspace/halfint.hpp"

namespace lspace {

/// Finite Laurent polynomial in one variable with exponents in (1/2)Z.
class LaurentPoly1 {
 public:
  using Map = std::map<HalfInt, std::int64_t>;

  LaurentPoly1() = default;
  /// Constant polynomial.
  explicit LaurentPoly1(std::int64_t c);
  static LaurentPoly1 from_terms(const std::vector<std::pair<HalfInt, std::int64_t>>& terms);

  void add_term(HalfInt e, std::int64_t c);
  std::int64_t coeff(HalfInt e) const;
  const Map& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  HalfInt min_exponent() const;  // precondition: nonzero
  HalfInt max_exponent() const;

  std::int64_t eval_at_one() const;
  LaurentPoly1 shifted(HalfInt by) const;
  /// Shift so the support is symmetric about 0. Fails (InputError) if the span is odd in half-steps.
  LaurentPoly1 centered() const;
  bool is_palindromic() const;  // a_e == a_{-e}

  LaurentPoly1 operator-() const;
  LaurentPoly1 operator+(const LaurentPoly1& o) const;
  LaurentPoly1 operator-(const LaurentPoly1& o) const;
  LaurentPoly1 operator*(const LaurentPoly1& o) const;
  bool operator==(const LaurentPoly1& o) const = default;

  std::string str(char var = 't') const;

 private:
  Map c_;
};

/// Exact division by an ordinary polynomial with nonzero constant term; returns false if not exact.
bool divide_exact(const LaurentPoly1& num, const LaurentPoly1& den, LaurentPoly1& quotient);

enum class Variable { X, Y };

/// Finite Laurent polynomial in x, y with half-integer exponents.
class LaurentPoly2 {
 public:
  using Key = std::pair<HalfInt, HalfInt>;
  using Map = std::map<Key, std::int64_t>;

  LaurentPoly2() = default;
  static LaurentPoly2 from_terms(const std::vector<std::tuple<HalfInt, HalfInt, std::int64_t>>& terms);

  void add_term(HalfInt i, HalfInt j, std::int64_t c);
  std::int64_t coeff(HalfInt i, HalfInt j) const;
  const Map& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  HalfInt min_x() const;
  HalfInt max_x() const;
  HalfInt min_y() const;
  HalfInt max_y() const;
  /// Largest |exponent| in either variable (0 for the zero polynomial).
  HalfInt max_abs_exponent() const;

  LaurentPoly1 substitute_one(Variable which) const;
  LaurentPoly2 operator-() const;
  LaurentPoly2 operator*(const LaurentPoly2& o) const;
  LaurentPoly2 shifted(HalfInt di, HalfInt dj) const;
  /// Swap the roles of x and y.
  LaurentPoly2 transposed() const;
  /// y -> 1/y.
  LaurentPoly2 invert_y() const;
  LaurentPoly2 centered() const;
  /// a_{i,j} == a_{-i,-j}; on failure `witness` gets an offending exponent.
  bool is_conjugation_symmetric(Key* witness = nullptr) const;
  /// Every exponent lies in Z + offset (both variables).
  bool exponents_in_coset(HalfInt offset, Key* witness = nullptr) const;

  bool operator==(const LaurentPoly2& o) const = default;
  std::string str() const;

 private:
  Map c_;
};

}  // namespace lspace
