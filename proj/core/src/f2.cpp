#include "lspace/f2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "lspace/errors.hpp"

namespace lspace {

namespace {
constexpr std::size_t kW = 64;
std::size_t words_for(std::size_t cols) { return (cols + kW - 1) / kW; }
}  // namespace

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : words_(words_for(cols)), rows_(rows), cols_(cols), bits_(rows * words_for(cols), 0) {}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  F2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c] & 1);
  }
  return m;
}

bool F2Matrix::get(std::size_t r, std::size_t c) const {
  return (row(r)[c / kW] >> (c % kW)) & 1U;
}

void F2Matrix::set(std::size_t r, std::size_t c, bool v) {
  std::uint64_t mask = std::uint64_t{1} << (c % kW);
  if (v) row(r)[c / kW] |= mask;
  else row(r)[c / kW] &= ~mask;
}

void F2Matrix::flip(std::size_t r, std::size_t c) { row(r)[c / kW] ^= std::uint64_t{1} << (c % kW); }

bool F2Matrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r);
  return t;
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in F2Matrix product");
  F2Matrix p(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t* out = p.row(r);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      const std::uint64_t* in = o.row(k);
      for (std::size_t w = 0; w < p.words_; ++w) out[w] ^= in[w];
    }
  }
  return p;
}

F2Matrix F2Matrix::operator+(const F2Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in F2Matrix sum");
  F2Matrix s = *this;
  for (std::size_t w = 0; w < bits_.size(); ++w) s.bits_[w] ^= o.bits_[w];
  return s;
}

F2Matrix F2Matrix::stack(const F2Matrix& below) const {
  if (cols_ != below.cols_) throw std::invalid_argument("stack: column mismatch");
  F2Matrix s(rows_ + below.rows_, cols_);
  std::copy(bits_.begin(), bits_.end(), s.bits_.begin());
  std::copy(below.bits_.begin(), below.bits_.end(), s.bits_.begin() + static_cast<std::ptrdiff_t>(bits_.size()));
  return s;
}

F2Matrix F2Matrix::concat(const F2Matrix& right) const {
  if (rows_ != right.rows_) throw std::invalid_argument("concat: row mismatch");
  F2Matrix s(rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) s.set(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c)
      if (right.get(r, c)) s.set(r, cols_ + c);
  }
  return s;
}

std::size_t rank(const F2Matrix& m) {
  F2Matrix a = m;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < a.cols_ && rk < a.rows_; ++c) {
    const std::size_t w = c / kW;
    const std::uint64_t mask = std::uint64_t{1} << (c % kW);
    std::size_t p = rk;
    while (p < a.rows_ && !(a.row(p)[w] & mask)) ++p;
    if (p == a.rows_) continue;
    if (p != rk) std::swap_ranges(a.row(p), a.row(p) + a.words_, a.row(rk));
    const std::uint64_t* piv = a.row(rk);
    for (std::size_t r = rk + 1; r < a.rows_; ++r) {
      std::uint64_t* x = a.row(r);
      if (!(x[w] & mask)) continue;
      for (std::size_t k = w; k < a.words_; ++k) x[k] ^= piv[k];
    }
    ++rk;
  }
  return rk;
}

F2Matrix F2Matrix::kernel_basis() const {
  // Reduced row echelon form, then one basis vector per free column.
  F2Matrix a = *this;
  std::vector<std::size_t> pivots;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols_ && rk < rows_; ++c) {
    std::size_t p = rk;
    while (p < rows_ && !a.get(p, c)) ++p;
    if (p == rows_) continue;
    if (p != rk) std::swap_ranges(a.row(p), a.row(p) + words_, a.row(rk));
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rk || !a.get(r, c)) continue;
      for (std::size_t k = 0; k < words_; ++k) a.row(r)[k] ^= a.row(rk)[k];
    }
    pivots.push_back(c);
    ++rk;
  }
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  F2Matrix basis(cols_ - pivots.size(), cols_);
  std::size_t out = 0;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    basis.set(out, f);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (a.get(r, f)) basis.set(out, pivots[r]);
    ++out;
  }
  return basis;
}

std::string F2Matrix::str() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
    s += '\n';
  }
  return s;
}

std::size_t intersection_dim(const F2Matrix& a, const F2Matrix& b) {
  return rank(a) + rank(b) - rank(a.stack(b));
}

namespace {

void check_shapes(std::size_t A, std::size_t B, std::size_t C, std::size_t D, const F2Matrix& h1,
                  const F2Matrix& v1, const F2Matrix& h2, const F2Matrix& v2) {
  auto ok = [](const F2Matrix& m, std::size_t r, std::size_t c) { return m.rows() == r && m.cols() == c; };
  if (!ok(h1, B, A) || !ok(v1, C, A) || !ok(h2, D, C) || !ok(v2, D, B))
    throw std::invalid_argument("square maps have inconsistent shapes");
  if (!(v2 * h1 + h2 * v1).is_zero()) throw InternalError("square does not commute (d^2 != 0)");
}

}  // namespace

std::size_t square_dim(std::size_t dimA, std::size_t dimB, std::size_t dimC, std::size_t dimD,
                       const F2Matrix& h1, const F2Matrix& v1, const F2Matrix& h2,
                       const F2Matrix& v2) {
  check_shapes(dimA, dimB, dimC, dimD, h1, v1, h2, v2);
  std::size_t kk = intersection_dim(h1.kernel_basis(), v1.kernel_basis());
  std::size_t im = rank(v2.concat(h2));
  return 2 * kk + dimB + dimC + dimD - 2 * im - dimA;
}

std::size_t square_dim_by_rank(std::size_t dimA, std::size_t dimB, std::size_t dimC,
                               std::size_t dimD, const F2Matrix& h1, const F2Matrix& v1,
                               const F2Matrix& h2, const F2Matrix& v2) {
  check_shapes(dimA, dimB, dimC, dimD, h1, v1, h2, v2);
  // Generators ordered A, B, C, D; the differential maps column (source) to row (target).
  const std::size_t n = dimA + dimB + dimC + dimD;
  const std::size_t oB = dimA, oC = dimA + dimB, oD = dimA + dimB + dimC;
  F2Matrix d(n, n);
  auto place = [&](const F2Matrix& m, std::size_t row0, std::size_t col0) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m.get(r, c)) d.set(row0 + r, col0 + c);
  };
  place(h1, oB, 0);
  place(v1, oC, 0);
  place(v2, oD, oB);
  place(h2, oD, oC);
  return n - 2 * rank(d);
}

ZigzagCode ZigzagCode::trimmed() const {
  ZigzagCode t = *this;
  t.S1.clear();
  t.S2.clear();
  for (std::int64_t s : S1)
    if (s >= a1 && s <= a2 && s >= b1 && s <= b2) t.S1.insert(s);
  for (std::int64_t s : S2)
    if (s >= a1 && s <= a2 && s + 1 >= b1 && s + 1 <= b2) t.S2.insert(s);
  return t;
}

F2Matrix ZigzagCode::to_matrix() const {
  ZigzagCode t = trimmed();
  F2Matrix m(static_cast<std::size_t>(b_size()), static_cast<std::size_t>(a_size()));
  for (std::int64_t s : t.S1) m.set(static_cast<std::size_t>(s - b1), static_cast<std::size_t>(s - a1));
  for (std::int64_t s : t.S2) m.set(static_cast<std::size_t>(s + 1 - b1), static_cast<std::size_t>(s - a1));
  return m;
}

ZigzagCode ZigzagCode::dual() const {
  ZigzagCode t = trimmed();
  ZigzagCode d;
  d.a1 = -b2;
  d.a2 = -b1;
  d.b1 = -a2;
  d.b2 = -a1;
  for (std::int64_t s : t.S1) d.S1.insert(-s);
  for (std::int64_t s : t.S2) d.S2.insert(-(s + 1));
  return d;
}

std::vector<Interval> zigzag_kernel_support(const ZigzagCode& code) {
  // The cone is a disjoint union of paths ... A_{s-1} -g- B_s -f- A_s -g- B_{s+1} ...; a path
  // carries a kernel vector exactly when both of its ends are A's, and the vector is the sum of
  // all A's on it. Isolated A's (s outside S1 and S2) are the one-point case.
  ZigzagCode t = code.trimmed();
  std::vector<Interval> out;
  std::int64_t s = t.a1;
  while (s <= t.a2) {
    const std::int64_t start = s;
    while (s < t.a2 && t.S2.count(s) && t.S1.count(s + 1)) ++s;
    const bool left_open = !t.S1.count(start);
    const bool right_open = !t.S2.count(s);
    if (left_open && right_open) out.push_back({start, s});
    ++s;
  }
  return out;
}

std::vector<Interval> zigzag_cokernel_support(const ZigzagCode& code) {
  std::vector<Interval> out;
  for (const Interval& iv : zigzag_kernel_support(code.dual())) out.push_back({-iv.hi, -iv.lo});
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t zigzag_cokernel_dim(const ZigzagCode& code) {
  return static_cast<std::int64_t>(zigzag_kernel_support(code.dual()).size());
}

}  // namespace lspace
