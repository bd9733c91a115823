#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lspace/f2.hpp"
#include "lspace/halfint.hpp"
#include "lspace/hinv.hpp"

namespace lspace {

struct Framing {
  std::int64_t p1 = 0, p2 = 0, lk = 0;
  std::int64_t det() const { return p1 * p2 - lk * lk; }
};

/// A Spin^c structure, named by its canonical representative in H(L).
struct SpinC {
  HalfInt s1, s2;
  auto operator<=>(const SpinC&) const = default;
  std::string str() const { return "(" + s1.str() + ", " + s2.str() + ")"; }
};

/// H(L) / Lambda Z^2 via a Hermite normal form of Lambda.
class SpinCLattice {
 public:
  explicit SpinCLattice(const Framing& f);
  std::vector<SpinC> representatives() const;
  SpinC canonical(HalfInt s1, HalfInt s2) const;
  std::int64_t order() const { return h11_ * h22_; }

 private:
  Framing f_;
  // Lambda U = [[h11, 0], [h21, h22]] for some unimodular U.
  std::int64_t h11_ = 1, h21_ = 0, h22_ = 1;
};

std::vector<SpinC> spinc_reps(const Framing& f);

enum class TruncationCase { I, II, III, IV, V, VI };
const char* to_string(TruncationCase c);

/// Which of the six placements of the parallelogram Q the framing admits. Throws
/// UnsupportedFraming when det = 0.
TruncationCase truncation_case(const Framing& f);

/// p1 p2 < 0 and lk^2 = -p1 p2: Lambda_1 and Lambda_2 are mirror images across an axis,
/// so two vertices of Q always sit on that axis. Handled as Case III / IV.
bool is_boundary_framing(const Framing& f);

struct Truncation {
  TruncationCase kase = TruncationCase::I;
  std::int64_t i0 = 0, j0 = 0;
  HalfInt b;
};

/// Smallest (i0 + j0, then i0) with i0, j0 >= min_size whose parallelogram vertices
/// +-(i0 Lambda_1 +- j0 Lambda_2)/2 lie in the quadrants the case prescribes, beyond b.
/// For boundary framings a vertex may lie on the axis instead.
Truncation choose_truncation(const Framing& f, HalfInt b, std::int64_t min_size = 2);

/// Whether the vertices of t's parallelogram satisfy the quadrant conditions of its case. In
/// Cases V and VI the admissible (i0, j0) form a cone, so enlarging one side can break this.
bool admissible(const Framing& f, const Truncation& t);

/// Lattice point s0 + i Lambda_1 + j Lambda_2 of a Spin^c class.
struct LatticePoint {
  std::int64_t i, j;
  auto operator<=>(const LatticePoint&) const = default;
};

/// The four retained index sets S^{d1 d2}, stored as layer[d1][d2].
struct Regions {
  std::int64_t A1 = 0, A2 = -1, B1 = 0, B2 = -1;
  std::array<std::array<std::vector<LatticePoint>, 2>, 2> layer;

  /// #S00 - #S10 - #S01 + #S11
  std::int64_t euler() const;
  std::size_t generators() const;
};

/// Region sets for one Spin^c class (representative s0).
Regions make_regions(const Framing& f, const Truncation& t, const SpinC& u);

/// Which arrows leave a generator: to the point itself and/or to its neighbour one step along
/// the map's direction.
enum EdgeBit : std::uint8_t { kH1Same = 1, kH1Next = 2, kV1Same = 4, kV1Next = 8 };
enum LateEdgeBit : std::uint8_t { kSame = 1, kNext = 2 };

/// The truncated hat complex C00 -> C10 (+) C01 -> C11 of one Spin^c class.
struct SquareComplex {
  Framing framing;
  SpinC spinc;
  Regions regions;
  std::vector<std::uint8_t> out00;  // EdgeBit per C00 generator
  std::vector<std::uint8_t> out10;  // v2 arrows (LateEdgeBit)
  std::vector<std::uint8_t> out01;  // h2 arrows (LateEdgeBit)
  bool dense = false;
  F2Matrix h1, v1, h2, v2;  // 00->10, 00->01, 01->11, 10->11; filled only when dense
  std::size_t dim(int d1, int d2) const { return regions.layer[d1][d2].size(); }
};

/// Edge bits from the n-table. With `dense` the four maps are also materialized and d^2 = 0
/// is verified (InternalError otherwise).
SquareComplex build_complex(const NTable& table, const Framing& f, const SpinC& u, const Regions& r,
                            bool dense = true);

/// Homology dimension. The zigzag route always runs; on a dense complex the rank and
/// square-lemma routes run too and must agree.
struct HomologyPaths {
  std::size_t dim = 0;
  std::size_t by_zigzag = 0;   // zigzag kernels and cokernels
  std::size_t by_rank = 0;     // generators - 2 rank(d); dense only
  std::size_t by_square = 0;   // square lemma; dense only
  bool cross_checked = false;
  std::size_t ker_ker = 0;     // dim(Ker D00->10 & Ker D00->01)
  std::size_t coker = 0;       // dim Coker(D10->11 + D01->11)
  std::int64_t euler = 0;
};

/// Throws InternalError if the routes disagree.
HomologyPaths homology(const SquareComplex& c);

struct SpinCResult {
  SpinC spinc;
  std::size_t dim = 0;
  std::int64_t euler = 0;
  std::size_t ker_ker = 0, coker = 0;
  std::size_t generators = 0;
  bool cross_checked = false;
};

struct HFResult {
  Framing framing;
  Truncation truncation;
  std::vector<SpinCResult> per_spinc;
  std::int64_t total = 0;
  bool lspace = false;
};

struct SurgeryOptions {
  std::int64_t min_size = 2;  // lower bound for i0, j0
  std::optional<HalfInt> b;   // override the truncation bound
  // Spin^c complexes with at most this many generators are also solved densely and
  // cross-checked; larger ones use the zigzag route alone.
  std::size_t cross_check_limit = 1500;
};

HFResult hf_hat(const NTable& table, const Framing& f, const SurgeryOptions& opt = {});

struct LSpaceCertificate {
  struct Entry {
    SpinC spinc;
    char condition;  // 'A' (euler +1, Ker&Ker + Coker = 1) or 'B' (euler -1, sum 0)
    std::size_t ker_ker, coker;
    bool holds;
  };
  std::vector<Entry> entries;
  std::string summary() const;
};

struct LSpaceVerdict {
  bool lspace = false;
  LSpaceCertificate certificate;
  HFResult hf;
};

/// Decides the L-space property from the Ker&Ker + Coker criteria and cross-checks hf_hat.
LSpaceVerdict is_lspace(const NTable& table, const Framing& f, const SurgeryOptions& opt = {});

}  // namespace lspace
