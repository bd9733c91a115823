// Acceptance runner: one PASS/FAIL line per criterion with its wall time and budget.
// Exit status is the number of failing criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lspace/alexander.hpp"
#include "lspace/classify.hpp"
#include "lspace/corpus.hpp"
#include "lspace/hinv.hpp"
#include "lspace/surgery.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace lspace;
using i64 = std::int64_t;

namespace {

// n^{+L_2}_{s1,s2}(L_n) on |s_i| <= 4, rows s2 = 4 .. -4, columns s1 = -4 .. 4.
using Matrix9 = std::vector<std::vector<i64>>;
const Matrix9 kL1 = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 1, 1, 1, 1},
    {2, 2, 2, 2, 2, 2, 2, 2, 2}, {3, 3, 3, 3, 3, 3, 3, 3, 3}, {4, 4, 4, 4, 4, 4, 4, 4, 4}};
const Matrix9 kL2 = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 1, 0, 0, 0}, {1, 1, 1, 1, 2, 1, 1, 1, 1},
    {2, 2, 2, 2, 2, 2, 2, 2, 2}, {3, 3, 3, 3, 3, 3, 3, 3, 3}, {4, 4, 4, 4, 4, 4, 4, 4, 4}};
const Matrix9 kL3 = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 1, 1, 1, 0, 0, 0}, {0, 0, 1, 1, 2, 1, 1, 0, 0}, {1, 1, 1, 2, 2, 2, 1, 1, 1},
    {2, 2, 2, 2, 3, 2, 2, 2, 2}, {3, 3, 3, 3, 3, 3, 3, 3, 3}, {4, 4, 4, 4, 4, 4, 4, 4, 4}};
const Matrix9 kL4 = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 1, 0, 0, 0},
    {0, 0, 1, 1, 2, 1, 1, 0, 0}, {0, 1, 1, 2, 2, 2, 1, 1, 0}, {1, 1, 2, 2, 3, 2, 2, 1, 1},
    {2, 2, 2, 3, 3, 3, 2, 2, 2}, {3, 3, 3, 3, 4, 3, 3, 3, 3}, {4, 4, 4, 4, 4, 4, 4, 4, 4}};

std::string nmatrix_reproduction() {
  const Matrix9* expected[] = {&kL1, &kL2, &kL3, &kL4};
  int equal = 0;
  for (i64 n = 1; n <= 4; ++n) {
    const NMatrix m = nmatrix(NTable(corpus::two_bridge_ln(n)), HalfInt(4), Axis::L2);
    if (m.rows.size() != 9) return "L_" + std::to_string(n) + ": wrong shape";
    for (int r = 0; r < 9; ++r)
      for (int c = 0; c < 9; ++c) {
        if (m.rows[r][c] != (*expected[n - 1])[r][c])
          return "L_" + std::to_string(n) + " differs at row " + std::to_string(r) + ", column " + std::to_string(c);
        ++equal;
      }
  }
  return equal == 324 ? "" : "only " + std::to_string(equal) + " entries compared";
}

std::string nu_law() {
  for (i64 n = 1; n <= 6; ++n) {
    const NTable table(corpus::two_bridge_ln(n));
    for (i64 s = -10; s <= 10; ++s) {
      const HalfInt got = nu(table, Axis::L2, HalfInt(s));
      const i64 want = std::max<i64>(0, n - std::abs(s));
      if (got != HalfInt(want))
        return "L_" + std::to_string(n) + ", s1 = " + std::to_string(s) + ": " + got.str();
    }
  }
  return "";
}

std::string dimension_law() {
  for (i64 n = 1; n <= 5; ++n) {
    const HFResult hf = hf_hat(NTable(corpus::two_bridge_ln(n)), Framing{1, 1, 0});
    if (hf.total != (2 * n - 1) * (2 * n - 1))
      return "L_" + std::to_string(n) + ": total " + std::to_string(hf.total);
  }
  return "";
}

std::string whitehead_classification() {
  const NTable table(corpus::whitehead());
  const RegionVerdict region = region_scan(table, GridRange{-10, 10});
  for (const auto& [cell, v] : region.grid) {
    const auto [p1, p2] = cell;
    if (p1 * p2 == 0) continue;
    const Verdict want = p1 > 0 && p2 > 0 ? Verdict::Lspace : Verdict::NotLspace;
    if (v != want)
      return "(" + std::to_string(p1) + ", " + std::to_string(p2) + "): " + to_string(v);
  }
  return "";
}

std::string l7n2_obstruction() {
  const ObstructionReport rep = obstruction_report(corpus::l7n2());
  if (rep.passed()) return "gate passed";
  if (!rep.negative_n) return "no negative n witness";
  const NValueWitness& w = *rep.negative_n;
  if (w.axis != Axis::L1 || w.s1 != HalfInt(0) || w.s2 != HalfInt(0) || w.value != -1)
    return "witness at " + w.s1.str() + ", " + w.s2.str() + " = " + std::to_string(w.value);
  return "";
}

// Corollary families of L-space surgeries on T(2,2n) and their mirror images under p <-> q.
bool corollary_cell(i64 n, i64 p, i64 q) {
  auto one = [n](i64 a, i64 b) {
    if (a >= n + 1 && b >= n + 1) return true;   // (n+1+k1, n+1+k2)
    if (a <= n + 1 && b == n - 1) return true;   // (n+1-k1, n-1)
    if (a <= -1 && b >= n - 1) return true;      // (-1-k1, n-1+k2)
    if (a == n && b != n) return true;           // (n, q)
    return false;
  };
  return p * q != n * n && (one(p, q) || one(q, p));
}

std::string torus_agreement() {
  for (i64 n = 2; n <= 6; ++n) {
    const NTable table(corpus::torus(n));
    const GridRange range{-4 * n, 4 * n};
    const RegionVerdict region = region_scan(table, range);
    for (const auto& [cell, v] : region.grid) {
      const auto [p, q] = cell;
      if (v == Verdict::Unsupported) continue;
      const Verdict closed = torus_oracle(n, p, q), seifert = oracle::seifert_torus(n, p, q);
      const std::string at = "n = " + std::to_string(n) + " (" + std::to_string(p) + ", " + std::to_string(q) + ")";
      if (v != closed) return at + ": classifier " + to_string(v) + ", closed form " + to_string(closed);
      if (v != seifert) return at + ": classifier " + to_string(v) + ", Seifert " + to_string(seifert);
      if (corollary_cell(n, p, q) && v != Verdict::Lspace) return at + ": corollary cell not marked";
    }
  }
  return "";
}

std::string property_suites() {
  if (auto e = props::zigzag_vs_bruteforce(500, 7); !e.empty()) return "(a) " + e;
  if (auto e = props::square_lemma_vs_rank(200, 11); !e.empty()) return "(b) " + e;
  if (auto e = props::truncation_stability(6); !e.empty()) return "(c) " + e;
  if (auto e = props::hf_symmetries(6); !e.empty()) return "(d) " + e;
  if (auto e = props::ntable_invariants(); !e.empty()) return "(e) " + e;
  return "";
}

std::string lens_sanity() {
  const NTable hopf(corpus::hopf()), unlink(corpus::unlink());
  for (i64 p1 = -5; p1 <= 5; ++p1)
    for (i64 p2 = -5; p2 <= 5; ++p2) {
      const std::string at = "(" + std::to_string(p1) + ", " + std::to_string(p2) + ")";
      const Framing fh{p1, p2, 1};
      if (fh.det() != 0) {
        const HFResult hf = hf_hat(hopf, fh);
        if (hf.total != std::abs(fh.det())) return "Hopf " + at + ": total " + std::to_string(hf.total);
      }
      if (p1 * p2 != 0) {
        const HFResult hf = hf_hat(unlink, Framing{p1, p2, 0});
        if (hf.total != std::abs(p1 * p2)) return "unlink " + at + ": total " + std::to_string(hf.total);
      }
    }
  return "";
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "n-matrices of L_1..L_4 on |s| <= 4 (324 entries)", 1, nmatrix_reproduction},
      {2, "nu^{+L2}_{s1}(L_n) = max(0, n - |s1|), n <= 6, |s1| <= 10", 1, nu_law},
      {3, "dim HF-hat of (1,1) surgery on L_n = (2n-1)^2, n = 1..5", 10, dimension_law},
      {4, "Whitehead on [-10,10]^2: L-space iff p1 > 0 and p2 > 0", 30, whitehead_classification},
      {5, "L7n2 fails the gate with n^{+L1}_{0,0} = -1", 0.1, l7n2_obstruction},
      {6, "T(2,2n), n = 2..6, on [-4n,4n]^2 matches both oracles", 300, torus_agreement},
      {7, "property suites (a)-(e)", 120, property_suites},
      {8, "Hopf total = |det|, unlink total = |p1 p2| on [-5,5]^2", 10, lens_sanity},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      error = c.run();
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && secs > c.budget_s) error = "over time budget";
    const bool ok = error.empty();
    failures += ok ? 0 : 1;
    std::printf("[%s] %d. %s  (%.3f s, budget %g s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title, secs, c.budget_s,
                ok ? "" : ": ", error.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
