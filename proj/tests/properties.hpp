#pragma once
// Structural property checks shared by the unit tests and the acceptance runner. Each returns
// an empty string on success and a description of the first failure otherwise.

#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lspace/alexander.hpp"
#include "lspace/corpus.hpp"
#include "lspace/f2.hpp"
#include "lspace/hinv.hpp"
#include "lspace/surgery.hpp"
#include "oracles.hpp"

namespace props {

using lspace::HalfInt;
using i64 = std::int64_t;

inline std::vector<std::string> lspace_corpus() {
  return {"hopf", "hopf-", "unlink", "whitehead", "ln:2", "ln:3", "t2,4", "t2,6"};
}

inline lspace::ZigzagCode random_code(std::mt19937_64& rng) {
  std::uniform_int_distribution<i64> start(-6, 6), len(0, 10), off(-2, 2);
  std::bernoulli_distribution coin(0.6);
  lspace::ZigzagCode z;
  z.a1 = start(rng);
  z.a2 = z.a1 + len(rng) - 1;
  z.b1 = z.a1 + off(rng);
  z.b2 = z.b1 + len(rng) - 1;
  for (i64 s = z.a1; s <= z.a2; ++s) {
    if (coin(rng)) z.S1.insert(s);
    if (coin(rng)) z.S2.insert(s);
  }
  return z;
}

// Kernel supports must be independent kernel vectors and as many as dim Ker; cokernel supports
// must annihilate the image and number dim Coker.
inline std::string zigzag_vs_bruteforce(int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < count; ++t) {
    const lspace::ZigzagCode z = random_code(rng);
    const auto m = oracle::zigzag_dense(z);
    const std::size_t A = static_cast<std::size_t>(z.a_size()), B = static_cast<std::size_t>(z.b_size());
    const std::size_t rk = B == 0 ? 0 : oracle::brute_rank(m);
    std::ostringstream where;
    where << "code " << t << " [" << z.a1 << "," << z.a2 << "]x[" << z.b1 << "," << z.b2 << "]: ";

    auto check = [&](const std::vector<lspace::Interval>& supports, std::size_t len, i64 base,
                     const std::vector<std::vector<int>>& mat, std::size_t expected) -> std::string {
      if (supports.size() != expected)
        return "expected " + std::to_string(expected) + " basis vectors, got " + std::to_string(supports.size());
      std::vector<std::vector<int>> vecs;
      for (const lspace::Interval& iv : supports) {
        std::vector<int> v(len, 0);
        for (i64 s = iv.lo; s <= iv.hi; ++s) {
          if (s < base || s >= base + static_cast<i64>(len)) return "support outside range";
          v[s - base] = 1;
        }
        for (const auto& row : mat) {
          int acc = 0;
          for (std::size_t k = 0; k < len; ++k) acc ^= row[k] & v[k];
          if (acc) return "support vector not annihilated";
        }
        vecs.push_back(v);
      }
      if (!vecs.empty() && oracle::brute_rank(vecs) != vecs.size()) return "supports not independent";
      return "";
    };
    std::string err = check(lspace::zigzag_kernel_support(z), A, z.a1, m, A - rk);
    if (!err.empty()) return where.str() + "kernel: " + err;
    err = check(lspace::zigzag_cokernel_support(z), B, z.b1, oracle::transpose(m, A), B - rk);
    if (!err.empty()) return where.str() + "cokernel: " + err;
    if (lspace::zigzag_cokernel_dim(z) != static_cast<i64>(B - rk)) return where.str() + "cokernel dim";
  }
  return "";
}

// Random squares A -> B (+) C -> D that commute by construction: the second step is a random
// combination of vectors from the left null space of [h1; v1].
inline std::string square_lemma_vs_rank(int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(0, 9);
  std::uniform_real_distribution<double> dens(0.1, 0.6);
  for (int t = 0; t < count; ++t) {
    const std::size_t a = dim(rng), b = dim(rng), c = dim(rng), d = dim(rng);
    const lspace::F2Matrix h1 = oracle::random_matrix(rng, b, a, dens(rng));
    const lspace::F2Matrix v1 = oracle::random_matrix(rng, c, a, dens(rng));
    const lspace::F2Matrix left = h1.stack(v1).transpose().kernel_basis();  // rows: y with y [h1; v1] = 0
    lspace::F2Matrix mix = oracle::random_matrix(rng, d, left.rows(), 0.5);
    lspace::F2Matrix second = left.rows() == 0 ? lspace::F2Matrix(d, b + c) : mix * left;
    lspace::F2Matrix v2(d, b), h2(d, c);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t k = 0; k < b; ++k) v2.set(r, k, second.get(r, k));
      for (std::size_t k = 0; k < c; ++k) h2.set(r, k, second.get(r, b + k));
    }
    const std::size_t lemma = lspace::square_dim(a, b, c, d, h1, v1, h2, v2);
    const std::size_t by_rank = lspace::square_dim_by_rank(a, b, c, d, h1, v1, h2, v2);
    if (lemma != by_rank) {
      std::ostringstream os;
      os << "square " << t << " (" << a << "," << b << "," << c << "," << d << "): lemma " << lemma << ", rank "
         << by_rank;
      return os.str();
    }
  }
  return "";
}

// Per-spin^c dimensions for an explicit truncation.
inline std::map<lspace::SpinC, std::size_t> dims_with(const lspace::NTable& table, const lspace::Framing& f,
                                                      const lspace::Truncation& t) {
  std::map<lspace::SpinC, std::size_t> out;
  for (const lspace::SpinC& u : lspace::spinc_reps(f)) {
    const lspace::Regions r = lspace::make_regions(f, t, u);
    out[u] = lspace::homology(lspace::build_complex(table, f, u, r, false)).dim;
  }
  return out;
}

// The smallest admissible parallelogram with i0' >= i0 + 2 and j0' >= j0 + 2. In Cases I-IV
// that is (i0 + 2, j0 + 2) itself; in Cases V and VI the admissible sizes form a cone.
inline lspace::Truncation enlarged(const lspace::Framing& f, lspace::Truncation t) {
  const i64 i0 = t.i0 + 2, j0 = t.j0 + 2;
  for (i64 extra = 0;; ++extra)
    for (i64 di = 0; di <= extra; ++di) {
      t.i0 = i0 + di;
      t.j0 = j0 + extra - di;
      if (lspace::admissible(f, t)) return t;
    }
}

inline std::string truncation_stability(i64 radius) {
  for (const std::string& name : lspace_corpus()) {
    const lspace::NTable table(lspace::corpus::by_name(name));
    const HalfInt b = lspace::truncation_bound(table);
    for (i64 p1 = -radius; p1 <= radius; ++p1)
      for (i64 p2 = -radius; p2 <= radius; ++p2) {
        const lspace::Framing f{p1, p2, table.link().lk};
        if (f.det() == 0) continue;
        const lspace::Truncation t = lspace::choose_truncation(f, b);
        if (dims_with(table, f, enlarged(f, t)) != dims_with(table, f, t))
          return name + " at (" + std::to_string(p1) + ", " + std::to_string(p2) + ")";
      }
  }
  return "";
}

// Parity, total >= |det|, conjugation and component swap.
inline std::string hf_symmetries(i64 radius) {
  for (const std::string& name : lspace_corpus()) {
    const lspace::LinkData link = lspace::corpus::by_name(name);
    const lspace::NTable table(link), swapped(lspace::swap_components(link));
    for (i64 p1 = -radius; p1 <= radius; ++p1)
      for (i64 p2 = -radius; p2 <= radius; ++p2) {
        const lspace::Framing f{p1, p2, link.lk};
        if (f.det() == 0) continue;
        const std::string at = name + " at (" + std::to_string(p1) + ", " + std::to_string(p2) + "): ";
        const lspace::HFResult hf = lspace::hf_hat(table, f);
        std::map<lspace::SpinC, std::size_t> dim;
        for (const auto& r : hf.per_spinc) {
          if (r.dim % 2 == 0) return at + "even dimension at " + r.spinc.str();
          dim[r.spinc] = r.dim;
        }
        if (hf.total < std::abs(f.det())) return at + "total below |det|";
        if (hf.lspace != (hf.total == std::abs(f.det()))) return at + "verdict inconsistent with total";
        const lspace::SpinCLattice lattice(f);
        for (const auto& [u, d] : dim)
          if (dim.at(lattice.canonical(-u.s1, -u.s2)) != d) return at + "conjugation asymmetry at " + u.str();
        const lspace::HFResult hs = lspace::hf_hat(swapped, lspace::Framing{p2, p1, link.lk});
        if (hs.total != hf.total) return at + "component swap changes the total";
      }
  }
  return "";
}

// Non-negativity, unit steps and conjugation of the n-table on radius 2b + 2.
inline std::string ntable_invariants() {
  using lspace::Axis;
  for (const std::string& name : lspace_corpus()) {
    const lspace::NTable table(lspace::corpus::by_name(name));
    const HalfInt b = lspace::truncation_bound(table);
    const HalfInt radius = b * 2 + HalfInt(2);
    const lspace::NInvariantScan scan = lspace::scan_invariants(table, radius);
    if (scan.negative) return name + ": negative n value";
    if (scan.bad_step) return name + ": step outside {0,1}";
    const auto window = lspace::lattice_window(table.link().lk, radius);
    for (Axis axis : {Axis::L1, Axis::L2})
      for (HalfInt s1 : window)
        for (HalfInt s2 : window) {
          const i64 v = table.n_plus(axis, s1, s2);
          if (v < 0) return name + ": negative n at " + s1.str() + ", " + s2.str();
          if (table.n_minus(axis, -s1, -s2) != v) return name + ": conjugation";
          // unit steps checked directly as well
          const i64 next = axis == Axis::L2 ? table.n_plus(axis, s1, s2 + HalfInt(1))
                                            : table.n_plus(axis, s1 + HalfInt(1), s2);
          if (v - next != 0 && v - next != 1) return name + ": step at " + s1.str() + ", " + s2.str();
        }
  }
  return "";
}

}  // namespace props
