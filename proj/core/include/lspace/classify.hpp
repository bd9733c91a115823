#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lspace/hinv.hpp"
#include "lspace/surgery.hpp"

namespace lspace {

enum class Verdict { Lspace, NotLspace, B1Positive, Unsupported };
const char* to_string(Verdict v);

struct GridRange {
  std::int64_t lo = 0, hi = -1;  // same bounds for p1 and p2
  bool empty() const { return hi < lo; }
};

struct RegionVerdict {
  GridRange range;
  std::int64_t lk = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, Verdict> grid;  // (p1, p2)
  Verdict at(std::int64_t p1, std::int64_t p2) const { return grid.at({p1, p2}); }
};

/// Classify every cell of range x range. Cells are independent; `threads` = 0 picks the hardware
/// concurrency. Unsupported framings are marked and never abort the sweep.
RegionVerdict region_scan(const NTable& table, GridRange range, unsigned threads = 0,
                          const SurgeryOptions& opt = {});

/// L-space surgeries on T(2,2n) by the closed-form classification (n >= 2).
Verdict torus_oracle(std::int64_t n, std::int64_t p, std::int64_t q);

/// Cells of `region` classified Lspace.
std::vector<std::pair<std::int64_t, std::int64_t>> lspace_cells(const RegionVerdict& region);

/// A certified L-space framing (p1, p2) together with the reason it is known.
struct Certificate {
  std::int64_t p1, p2;
  std::string reason;
};

struct CertificateSet {
  std::int64_t lk = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, Certificate> facts;
  bool contains(std::int64_t p1, std::int64_t p2) const { return facts.count({p1, p2}) > 0; }
  void add(std::int64_t p1, std::int64_t p2, std::string reason);
};

/// Which surgeries on each component (a knot) are L-spaces.
struct ComponentSlopes {
  std::function<bool(std::int64_t)> first, second;
  bool both_unknots = false;
  /// All nonzero slopes (unknotted components).
  static ComponentSlopes unknots();
};

/// Closure of `seeds` inside range x range under the surgery induction lemma (in both component
/// orders) and, for unknotted components, the two-unknot region rules. Facts that would land
/// outside the range are dropped, so the closure is sound but only maximal inside the range.
CertificateSet propagate_induction(const CertificateSet& seeds, const ComponentSlopes& slopes,
                                   GridRange range);

enum class RenderFormat { Ascii, Svg, Json };
RenderFormat parse_render_format(const std::string& name);
std::string render(const RegionVerdict& region, RenderFormat format);

}  // namespace lspace
