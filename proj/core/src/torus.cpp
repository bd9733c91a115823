#include "lspace/classify.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace lspace {

namespace {

// Is there a coprime pair m > a > 0 with m < m_bound and lo(m) < a < hi(m)?
// The open interval is given by strict integer inequalities in `inside`.
template <class Inside>
bool coprime_pair_exists(std::int64_t m_bound, Inside inside) {
  for (std::int64_t m = 2; m < m_bound; ++m)
    for (std::int64_t a = 1; a < m; ++a)
      if (std::gcd(m, a) == 1 && inside(m, a)) return true;
  return false;
}

}  // namespace

Verdict torus_oracle(std::int64_t n, std::int64_t p, std::int64_t q) {
  if (n < 2) throw std::invalid_argument("torus_oracle needs n >= 2");
  if (p * q == n * n) return Verdict::B1Positive;
  if (p == n || q == n) return Verdict::Lspace;
  if (p < q) std::swap(p, q);
  bool l = false;
  // (1)
  l = l || (p >= n + 2 && q >= n + 1);
  // (2): m (n-q-1)/(n-q) < a < m (1 - 1/n), m/(p-n) < 1
  if (!l && p >= 2 * n && q <= n - 2) {
    l = !coprime_pair_exists(p - n, [&](std::int64_t m, std::int64_t a) {
      return m * (n - q - 1) < a * (n - q) && a * n < m * (n - 1);
    });
  }
  // (3): m (n-q-1)/(n-q) < a < m (1 - 1/(p-n)), m/n < 1
  if (!l && p >= n + 2 && p <= 2 * n && q <= n - 2) {
    l = !coprime_pair_exists(n, [&](std::int64_t m, std::int64_t a) {
      return m * (n - q - 1) < a * (n - q) && a * (p - n) < m * (p - n - 1);
    });
  }
  // (4), (5)
  l = l || (p == n + 1 && q <= n + 1 && q != n);
  // a slope n-1 (or n+1) filling leaves a lens space, whichever component carries it
  l = l || (p == n - 1 && q <= n - 1) || (q == n - 1 && p >= n + 2);
  // (6): m (1 - 1/n) < a < m (1 - 1/(n-p)), m/(n-q) < 1
  if (!l && p <= n - 2 && q <= p) {
    l = !coprime_pair_exists(n - q, [&](std::int64_t m, std::int64_t a) {
      return m * (n - 1) < a * n && a * (n - p) < m * (n - p - 1);
    });
  }
  return l ? Verdict::Lspace : Verdict::NotLspace;
}

}  // namespace lspace
