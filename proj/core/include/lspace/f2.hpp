#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace lspace {

/// Dense GF(2) matrix, one packed bit row per row. A map X -> Y is stored with rows = dim Y.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);
  static F2Matrix identity(std::size_t n);
  static F2Matrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool v = true);
  void flip(std::size_t r, std::size_t c);
  bool is_zero() const;

  F2Matrix transpose() const;
  F2Matrix operator*(const F2Matrix& o) const;
  F2Matrix operator+(const F2Matrix& o) const;
  bool operator==(const F2Matrix& o) const = default;

  /// [this; below]
  F2Matrix stack(const F2Matrix& below) const;
  /// [this | right]
  F2Matrix concat(const F2Matrix& right) const;

  /// Basis of the null space {x : M x = 0}, each vector a bit row of length cols().
  F2Matrix kernel_basis() const;

  std::string str() const;

 private:
  friend std::size_t rank(const F2Matrix& m);
  std::size_t words_ = 0;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint64_t> bits_;
  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }
};

std::size_t rank(const F2Matrix& m);

/// Dimension of the intersection of the row spaces spanned by two sets of vectors (same length).
std::size_t intersection_dim(const F2Matrix& a, const F2Matrix& b);

/// Homology of A -> B (+) C -> D with h1: A->B, v1: A->C, v2: B->D, h2: C->D, via
/// 2 dim(Ker h1 & Ker v1) - 2 dim(Im v2 + Im h2) - dim A + dim B + dim C + dim D.
/// Throws InternalError unless v2 h1 = h2 v1.
std::size_t square_dim(std::size_t dimA, std::size_t dimB, std::size_t dimC, std::size_t dimD,
                       const F2Matrix& h1, const F2Matrix& v1, const F2Matrix& h2,
                       const F2Matrix& v2);

/// Same quantity as total generators minus twice the rank of the full differential.
std::size_t square_dim_by_rank(std::size_t dimA, std::size_t dimB, std::size_t dimC,
                               std::size_t dimD, const F2Matrix& h1, const F2Matrix& v1,
                               const F2Matrix& h2, const F2Matrix& v2);

/// Zigzag mapping cone: A_s (s in [a1,a2]) -> B_s via f_s (s in S1) and -> B_{s+1} via g_s (s in S2).
struct ZigzagCode {
  std::int64_t a1 = 0, a2 = -1, b1 = 0, b2 = -1;
  std::set<std::int64_t> S1, S2;

  std::int64_t a_size() const { return a2 >= a1 ? a2 - a1 + 1 : 0; }
  std::int64_t b_size() const { return b2 >= b1 ? b2 - b1 + 1 : 0; }
  /// f/g edges whose source or target falls outside the ranges are dropped.
  ZigzagCode trimmed() const;
  /// Matrix B x A (rows indexed by b, columns by a).
  F2Matrix to_matrix() const;
  /// Arrows reversed and indices negated, so the dual is again a zigzag.
  ZigzagCode dual() const;
};

struct Interval {
  std::int64_t lo, hi;
  bool operator==(const Interval&) const = default;
  auto operator<=>(const Interval&) const = default;
};

/// Supports of a kernel basis: each kernel vector is the sum of A_s over one interval.
std::vector<Interval> zigzag_kernel_support(const ZigzagCode& code);
/// Supports (in B indices) of a basis of Ker of the transpose, i.e. the annihilator of the image.
std::vector<Interval> zigzag_cokernel_support(const ZigzagCode& code);
std::int64_t zigzag_cokernel_dim(const ZigzagCode& code);

}  // namespace lspace
