#include "lspace/surgery.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "lspace/errors.hpp"

namespace lspace {

namespace {

struct Egcd {
  std::int64_t g, u, v;  // u a + v b = g >= 0
};

Egcd egcd(std::int64_t a, std::int64_t b) {
  std::int64_t r0 = a, r1 = b, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(u0, u1) = std::make_pair(u1, u0 - q * u1);
    std::tie(v0, v1) = std::make_pair(v1, v0 - q * v1);
  }
  if (r0 < 0) return {-r0, -u0, -v0};
  return {r0, u0, v0};
}

std::int64_t mod(std::int64_t a, std::int64_t m) { return a - floor_div(a, m) * m; }

void require_rational_sphere(const Framing& f) {
  if (f.det() == 0) throw UnsupportedFraming("det = 0: b1 > 0 unsupported");
}

}  // namespace

SpinCLattice::SpinCLattice(const Framing& f) : f_(f) {
  require_rational_sphere(f);
  // Column operations on Lambda = [[p1, lk], [lk, p2]] (columns Lambda_1, Lambda_2).
  Egcd e = egcd(f.p1, f.lk);
  if (e.g == 0) throw UnsupportedFraming("degenerate framing matrix");
  h11_ = e.g;
  std::int64_t c1y = e.u * f.lk + e.v * f.p2;  // second entry of u Lambda_1 + v Lambda_2
  std::int64_t c2y = -f.det() / e.g;           // (lk/g) Lambda_1 - (p1/g) Lambda_2 = (0, c2y)
  h22_ = std::abs(c2y);
  h21_ = mod(c1y, h22_);
}

SpinC SpinCLattice::canonical(HalfInt s1, HalfInt s2) const {
  HalfInt off = HalfInt::half(f_.lk);
  HalfInt x1h = s1 - off, x2h = s2 - off;
  if (!x1h.is_integral() || !x2h.is_integral())
    throw std::invalid_argument("point " + SpinC{s1, s2}.str() + " is not in H(L)");
  std::int64_t x1 = x1h.to_int(), x2 = x2h.to_int();
  std::int64_t k = floor_div(x1, h11_);
  x1 -= k * h11_;
  x2 -= k * h21_;
  x2 = mod(x2, h22_);
  return SpinC{HalfInt(x1) + off, HalfInt(x2) + off};
}

std::vector<SpinC> SpinCLattice::representatives() const {
  std::vector<SpinC> out;
  out.reserve(static_cast<std::size_t>(order()));
  HalfInt off = HalfInt::half(f_.lk);
  for (std::int64_t a = 0; a < h11_; ++a)
    for (std::int64_t c = 0; c < h22_; ++c) out.push_back({HalfInt(a) + off, HalfInt(c) + off});
  return out;
}

std::vector<SpinC> spinc_reps(const Framing& f) { return SpinCLattice(f).representatives(); }

const char* to_string(TruncationCase c) {
  static const char* names[] = {"I", "II", "III", "IV", "V", "VI"};
  return names[static_cast<int>(c)];
}

TruncationCase truncation_case(const Framing& f) {
  require_rational_sphere(f);
  const std::int64_t det = f.det();
  if (det > 0) return f.p1 > 0 ? TruncationCase::I : TruncationCase::II;
  const std::int64_t lk2 = f.lk * f.lk, prod = f.p1 * f.p2;
  if (prod < 0 && lk2 <= -prod) return f.p1 > 0 ? TruncationCase::III : TruncationCase::IV;
  return f.lk > 0 ? TruncationCase::V : TruncationCase::VI;
}

bool is_boundary_framing(const Framing& f) {
  return f.p1 * f.p2 < 0 && f.lk * f.lk == -f.p1 * f.p2;
}

namespace {

// Quadrant (1..4) required of the vertex (e1 i0 Lambda_1 + e2 j0 Lambda_2)/2, listed for
// (e1, e2) = (+,+), (+,-), (-,+), (-,-).
constexpr int kQuadrants[6][4] = {
    {1, 4, 2, 3},  // I
    {3, 2, 4, 1},  // II
    {4, 1, 3, 2},  // III
    {2, 3, 1, 4},  // IV
    {1, 2, 4, 3},  // V
    {3, 4, 2, 1},  // VI
};

bool vertex_ok(std::int64_t x2, std::int64_t y2, int quadrant, std::int64_t b2, bool on_axis) {
  const int sx = quadrant == 1 || quadrant == 4 ? 1 : -1;
  const int sy = quadrant <= 2 ? 1 : -1;
  const bool x = sx * x2 > b2, y = sy * y2 > b2;
  if (x && y) return true;
  return on_axis && ((x && y2 == 0) || (y && x2 == 0));
}

bool placement_ok(const Framing& f, TruncationCase c, std::int64_t i0, std::int64_t j0, HalfInt b) {
  const std::int64_t b2 = b.doubled();
  const bool on_axis = is_boundary_framing(f);
  const int* q = kQuadrants[static_cast<int>(c)];
  int k = 0;
  for (int e1 : {1, -1}) {
    for (int e2 : {1, -1}) {
      std::int64_t x2 = e1 * i0 * f.p1 + e2 * j0 * f.lk;
      std::int64_t y2 = e1 * i0 * f.lk + e2 * j0 * f.p2;
      if (!vertex_ok(x2, y2, q[k++], b2, on_axis)) return false;
    }
  }
  return true;
}

constexpr std::int64_t kMaxSize = 4000;

}  // namespace

Truncation choose_truncation(const Framing& f, HalfInt b, std::int64_t min_size) {
  TruncationCase c = truncation_case(f);
  for (std::int64_t total = 2 * min_size; total <= kMaxSize; ++total) {
    for (std::int64_t i0 = min_size; i0 <= total - min_size; ++i0) {
      if (placement_ok(f, c, i0, total - i0, b)) return Truncation{c, i0, total - i0, b};
    }
  }
  throw UnsupportedFraming("parallelogram search exceeded i0 + j0 <= " + std::to_string(kMaxSize));
}

bool admissible(const Framing& f, const Truncation& t) {
  return t.i0 > 0 && t.j0 > 0 && placement_ok(f, t.kase, t.i0, t.j0, t.b);
}

std::int64_t Regions::euler() const {
  return static_cast<std::int64_t>(layer[0][0].size()) - static_cast<std::int64_t>(layer[1][0].size()) -
         static_cast<std::int64_t>(layer[0][1].size()) + static_cast<std::int64_t>(layer[1][1].size());
}

std::size_t Regions::generators() const {
  return layer[0][0].size() + layer[1][0].size() + layer[0][1].size() + layer[1][1].size();
}

namespace {

void add_rect(std::vector<LatticePoint>& out, std::int64_t ilo, std::int64_t ihi, std::int64_t jlo,
              std::int64_t jhi) {
  for (std::int64_t i = ilo; i <= ihi; ++i)
    for (std::int64_t j = jlo; j <= jhi; ++j) out.push_back({i, j});
}

}  // namespace

Regions make_regions(const Framing& f, const Truncation& t, const SpinC& u) {
  Regions r;
  const std::int64_t det = f.det();
  // theta = Lambda^{-1} s0, with s0 doubled: theta_1 = (p2 S1 - lk S2) / (2 det).
  const std::int64_t S1 = u.s1.doubled(), S2 = u.s2.doubled();
  const std::int64_t n1 = f.p2 * S1 - f.lk * S2;
  const std::int64_t n2 = -f.lk * S1 + f.p1 * S2;
  const std::int64_t den = 2 * det;
  // A1 = ceil(-theta_1 - i0/2), A2 = floor(-theta_1 + i0/2), likewise B with j0.
  r.A1 = ceil_div(-n1 - t.i0 * det, den);
  r.A2 = floor_div(-n1 + t.i0 * det, den);
  r.B1 = ceil_div(-n2 - t.j0 * det, den);
  r.B2 = floor_div(-n2 + t.j0 * det, den);
  for (int d1 = 0; d1 < 2; ++d1) {
    for (int d2 = 0; d2 < 2; ++d2) {
      auto& L = r.layer[d1][d2];
      switch (t.kase) {
        case TruncationCase::I:
        case TruncationCase::V:
        case TruncationCase::VI:
          add_rect(L, r.A1 + d1, r.A2, r.B1 + d2, r.B2);
          break;
        case TruncationCase::II:
          add_rect(L, r.A1, r.A2 + d1, r.B1, r.B2 + d2);
          break;
        case TruncationCase::III:
          add_rect(L, r.A1 + d1, r.A2, r.B1, r.B2 + d2);
          break;
        case TruncationCase::IV:
          add_rect(L, r.A1, r.A2 + d1, r.B1 + d2, r.B2);
          break;
      }
    }
  }
  // Two extra corner generators turn the Euler count from +1 to -1.
  if (t.kase == TruncationCase::V) {
    r.layer[1][0].push_back({r.A1, r.B2});
    r.layer[0][1].push_back({r.A2, r.B1});
  } else if (t.kase == TruncationCase::VI) {
    r.layer[1][0].push_back({r.A1, r.B1});
    r.layer[0][1].push_back({r.A2, r.B2 + 1});
  }
  return r;
}

namespace {

// Dense index over the bounding box of all layers.
class PointIndex {
 public:
  explicit PointIndex(const Regions& r) {
    bool first = true;
    for (const auto& row : r.layer)
      for (const auto& L : row)
        for (const LatticePoint& p : L) {
          if (first) { ilo_ = ihi_ = p.i; jlo_ = jhi_ = p.j; first = false; }
          ilo_ = std::min(ilo_, p.i); ihi_ = std::max(ihi_, p.i);
          jlo_ = std::min(jlo_, p.j); jhi_ = std::max(jhi_, p.j);
        }
    w_ = ihi_ - ilo_ + 1;
    h_ = jhi_ - jlo_ + 1;
    for (int d1 = 0; d1 < 2; ++d1)
      for (int d2 = 0; d2 < 2; ++d2) {
        auto& idx = index_[d1][d2];
        idx.assign(static_cast<std::size_t>(first ? 0 : w_ * h_), -1);
        const auto& L = r.layer[d1][d2];
        for (std::size_t k = 0; k < L.size(); ++k) idx[slot(L[k])] = static_cast<std::int64_t>(k);
      }
  }
  std::int64_t find(int d1, int d2, LatticePoint p) const {
    if (p.i < ilo_ || p.i > ihi_ || p.j < jlo_ || p.j > jhi_) return -1;
    return index_[d1][d2][slot(p)];
  }

 private:
  std::size_t slot(LatticePoint p) const { return static_cast<std::size_t>((p.i - ilo_) * h_ + (p.j - jlo_)); }
  std::int64_t ilo_ = 0, ihi_ = -1, jlo_ = 0, jhi_ = -1, w_ = 0, h_ = 0;
  std::array<std::array<std::vector<std::int64_t>, 2>, 2> index_;
};

}  // namespace

SquareComplex build_complex(const NTable& table, const Framing& f, const SpinC& u, const Regions& r,
                            bool dense) {
  if (table.link().lk != f.lk) throw std::invalid_argument("framing lk does not match the link");
  SquareComplex c{f, u, r, {}, {}, {}, dense, {}, {}, {}, {}};
  const auto& L00 = r.layer[0][0];
  const auto& L10 = r.layer[1][0];
  const auto& L01 = r.layer[0][1];
  const auto& L11 = r.layer[1][1];
  const HalfInt half_lk = HalfInt::half(f.lk);
  auto coords = [&](LatticePoint p) {
    return std::make_pair(u.s1 + HalfInt(p.i * f.p1 + p.j * f.lk), u.s2 + HalfInt(p.i * f.lk + p.j * f.p2));
  };
  c.out00.resize(L00.size());
  for (std::size_t a = 0; a < L00.size(); ++a) {
    auto [s1, s2] = coords(L00[a]);
    std::uint8_t bits = 0;
    if (table.n_plus_raw(Axis::L1, s1, s2) == 0) bits |= kH1Same;
    if (table.n_plus_raw(Axis::L1, -s1, -s2) == 0) bits |= kH1Next;
    if (table.n_plus_raw(Axis::L2, s1, s2) == 0) bits |= kV1Same;
    if (table.n_plus_raw(Axis::L2, -s1, -s2) == 0) bits |= kV1Next;
    c.out00[a] = bits;
  }
  c.out10.resize(L10.size());
  for (std::size_t a = 0; a < L10.size(); ++a) {
    const HalfInt s2 = coords(L10[a]).second;
    c.out10[a] = static_cast<std::uint8_t>((table.v(Axis::L2, s2 - half_lk) == 0 ? kSame : 0) |
                                           (table.v(Axis::L2, -s2 + half_lk) == 0 ? kNext : 0));
  }
  c.out01.resize(L01.size());
  for (std::size_t a = 0; a < L01.size(); ++a) {
    const HalfInt s1 = coords(L01[a]).first;
    c.out01[a] = static_cast<std::uint8_t>((table.v(Axis::L1, s1 - half_lk) == 0 ? kSame : 0) |
                                           (table.v(Axis::L1, -s1 + half_lk) == 0 ? kNext : 0));
  }
  if (!dense) return c;

  const PointIndex idx(r);
  c.h1 = F2Matrix(L10.size(), L00.size());
  c.v1 = F2Matrix(L01.size(), L00.size());
  c.h2 = F2Matrix(L11.size(), L01.size());
  c.v2 = F2Matrix(L11.size(), L10.size());
  auto link = [&](F2Matrix& m, int td1, int td2, LatticePoint target, std::size_t src) {
    std::int64_t k = idx.find(td1, td2, target);
    if (k >= 0) m.set(static_cast<std::size_t>(k), src);
  };
  for (std::size_t a = 0; a < L00.size(); ++a) {
    const LatticePoint p = L00[a];
    if (c.out00[a] & kH1Same) link(c.h1, 1, 0, p, a);
    if (c.out00[a] & kH1Next) link(c.h1, 1, 0, {p.i + 1, p.j}, a);
    if (c.out00[a] & kV1Same) link(c.v1, 0, 1, p, a);
    if (c.out00[a] & kV1Next) link(c.v1, 0, 1, {p.i, p.j + 1}, a);
  }
  for (std::size_t a = 0; a < L10.size(); ++a) {
    const LatticePoint p = L10[a];
    if (c.out10[a] & kSame) link(c.v2, 1, 1, p, a);
    if (c.out10[a] & kNext) link(c.v2, 1, 1, {p.i, p.j + 1}, a);
  }
  for (std::size_t a = 0; a < L01.size(); ++a) {
    const LatticePoint p = L01[a];
    if (c.out01[a] & kSame) link(c.h2, 1, 1, p, a);
    if (c.out01[a] & kNext) link(c.h2, 1, 1, {p.i + 1, p.j}, a);
  }
  if (!(c.v2 * c.h1 + c.h2 * c.v1).is_zero())
    throw InternalError("d^2 != 0 in the truncated complex for spin^c " + u.str());
  return c;
}

namespace {

using Support = std::vector<std::size_t>;

// A map between two layers that splits into zigzags along lines (fixed i for vertical maps,
// fixed j for horizontal ones). Returns the supports of a basis of its kernel (indices into the
// source layer) or of the annihilator of its image (indices into the target layer). Supports
// are pairwise disjoint.
std::vector<Support> zigzag_supports(const std::vector<LatticePoint>& src, const std::vector<LatticePoint>& dst,
                                     const std::vector<std::uint8_t>& out, std::uint8_t same_bit,
                                     std::uint8_t next_bit, bool vertical, bool cokernel) {
  auto key = [&](LatticePoint p) { return vertical ? p.i : p.j; };
  auto pos = [&](LatticePoint p) { return vertical ? p.j : p.i; };
  std::map<std::int64_t, std::map<std::int64_t, std::size_t>> src_lines, dst_lines;
  for (std::size_t k = 0; k < src.size(); ++k) src_lines[key(src[k])][pos(src[k])] = k;
  for (std::size_t k = 0; k < dst.size(); ++k) dst_lines[key(dst[k])][pos(dst[k])] = k;
  auto range = [](const std::map<std::int64_t, std::size_t>& line, std::int64_t& lo, std::int64_t& hi) {
    if (line.empty()) return;
    lo = line.begin()->first;
    hi = line.rbegin()->first;
    if (hi - lo + 1 != static_cast<std::int64_t>(line.size()))
      throw InternalError("region line is not an interval");
  };
  static const std::map<std::int64_t, std::size_t> kEmpty;
  auto lookup = [](const auto& lines, std::int64_t k) -> const std::map<std::int64_t, std::size_t>& {
    auto it = lines.find(k);
    return it == lines.end() ? kEmpty : it->second;
  };

  std::vector<Support> supports;
  const auto& own_lines = cokernel ? dst_lines : src_lines;
  for (const auto& [line, unused] : own_lines) {
    const auto& sources = lookup(src_lines, line);
    const auto& targets = lookup(dst_lines, line);
    ZigzagCode code;
    range(sources, code.a1, code.a2);
    range(targets, code.b1, code.b2);
    for (const auto& [t, k] : sources) {
      if ((out[k] & same_bit) && targets.count(t)) code.S1.insert(t);
      if ((out[k] & next_bit) && targets.count(t + 1)) code.S2.insert(t);
    }
    const auto found = cokernel ? zigzag_cokernel_support(code) : zigzag_kernel_support(code);
    const auto& where = cokernel ? targets : sources;
    for (const Interval& iv : found) {
      Support v;
      for (std::int64_t t = iv.lo; t <= iv.hi; ++t) v.push_back(where.at(t));
      supports.push_back(std::move(v));
    }
  }
  return supports;
}

F2Matrix to_basis(const std::vector<Support>& supports, std::size_t n) {
  F2Matrix basis(supports.size(), n);
  for (std::size_t r = 0; r < supports.size(); ++r)
    for (std::size_t k : supports[r]) basis.set(r, k);
  return basis;
}

// dim(span F & span G) for two families of disjoint supports over n points. A common vector is
// constant on every support and vanishes off both unions, so the answer counts the connected
// clusters of overlapping supports that never stick out of the other family.
std::size_t support_intersection_dim(const std::vector<Support>& F, const std::vector<Support>& G, std::size_t n) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cf(n, kNone), cg(n, kNone);
  for (std::size_t r = 0; r < F.size(); ++r)
    for (std::size_t k : F[r]) cf[k] = r;
  for (std::size_t r = 0; r < G.size(); ++r)
    for (std::size_t k : G[r]) cg[k] = F.size() + r;
  std::vector<std::size_t> parent(F.size() + G.size());
  std::vector<char> bad(parent.size(), 0);
  for (std::size_t k = 0; k < parent.size(); ++k) parent[k] = k;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (cf[k] != kNone && cg[k] != kNone) {
      std::size_t a = find(cf[k]), b = find(cg[k]);
      if (a != b) {
        parent[a] = b;
        bad[b] = static_cast<char>(bad[b] | bad[a]);
      }
    } else if (cf[k] != kNone) {
      bad[find(cf[k])] = 1;
    } else if (cg[k] != kNone) {
      bad[find(cg[k])] = 1;
    }
  }
  std::size_t good = 0;
  for (std::size_t k = 0; k < parent.size(); ++k) good += (find(k) == k && !bad[k]) ? 1 : 0;
  return good;
}

}  // namespace

HomologyPaths homology(const SquareComplex& c) {
  HomologyPaths h;
  h.euler = c.regions.euler();
  const auto& R = c.regions.layer;
  const auto ker_v1 = zigzag_supports(R[0][0], R[0][1], c.out00, kV1Same, kV1Next, true, false);
  const auto ker_h1 = zigzag_supports(R[0][0], R[1][0], c.out00, kH1Same, kH1Next, false, false);
  // Coker(v2 + h2) is dual to Ker v2^T & Ker h2^T on C11.
  const auto ann_v2 = zigzag_supports(R[1][0], R[1][1], c.out10, kSame, kNext, true, true);
  const auto ann_h2 = zigzag_supports(R[0][1], R[1][1], c.out01, kSame, kNext, false, true);
  h.ker_ker = support_intersection_dim(ker_v1, ker_h1, R[0][0].size());
  h.coker = support_intersection_dim(ann_v2, ann_h2, R[1][1].size());
  const std::int64_t z = 2 * static_cast<std::int64_t>(h.ker_ker + h.coker) - h.euler;
  if (z < 0) throw InternalError("negative homology dimension from zigzag route");
  h.by_zigzag = static_cast<std::size_t>(z);
  h.dim = h.by_zigzag;
  if (!c.dense) return h;

  const std::size_t A = c.dim(0, 0), B = c.dim(1, 0), C = c.dim(0, 1), D = c.dim(1, 1);
  h.by_rank = square_dim_by_rank(A, B, C, D, c.h1, c.v1, c.h2, c.v2);
  h.by_square = square_dim(A, B, C, D, c.h1, c.v1, c.h2, c.v2);
  const std::size_t kk = intersection_dim(to_basis(ker_v1, A), to_basis(ker_h1, A));
  const std::size_t ck = intersection_dim(to_basis(ann_v2, D), to_basis(ann_h2, D));
  h.cross_checked = true;
  if (h.by_rank != h.by_square || h.by_rank != h.by_zigzag || kk != h.ker_ker || ck != h.coker) {
    std::ostringstream os;
    os << "homology routes disagree for spin^c " << c.spinc.str() << ": rank " << h.by_rank << ", square "
       << h.by_square << ", zigzag " << h.by_zigzag << " (ker&ker " << h.ker_ker << "/" << kk << ", coker "
       << h.coker << "/" << ck << ")";
    throw InternalError(os.str());
  }
  return h;
}

HFResult hf_hat(const NTable& table, const Framing& f, const SurgeryOptions& opt) {
  HFResult res;
  res.framing = f;
  HalfInt b = opt.b ? *opt.b : truncation_bound(table);
  res.truncation = choose_truncation(f, b, opt.min_size);
  for (const SpinC& u : spinc_reps(f)) {
    Regions r = make_regions(f, res.truncation, u);
    const std::int64_t e = r.euler();
    if (e != 1 && e != -1)
      throw InternalError("region Euler count " + std::to_string(e) + " for spin^c " + u.str());
    const bool dense = r.generators() <= opt.cross_check_limit;
    SquareComplex c = build_complex(table, f, u, r, dense);
    HomologyPaths h = homology(c);
    res.per_spinc.push_back({u, h.dim, h.euler, h.ker_ker, h.coker, r.generators(), h.cross_checked});
    res.total += static_cast<std::int64_t>(h.dim);
  }
  res.lspace = res.total == std::abs(f.det());
  return res;
}

std::string LSpaceCertificate::summary() const {
  std::ostringstream os;
  std::size_t failing = 0;
  for (const Entry& e : entries) failing += e.holds ? 0 : 1;
  if (failing == 0) {
    os << "all " << entries.size() << " spin^c structures satisfy their criterion";
    return os.str();
  }
  for (const Entry& e : entries) {
    if (e.holds) continue;
    os << "spin^c " << e.spinc.str() << " fails condition (" << e.condition << "): Ker&Ker dimension "
       << e.ker_ker << ", Coker dimension " << e.coker;
    break;
  }
  if (failing > 1) os << " (and " << failing - 1 << " more)";
  return os.str();
}

LSpaceVerdict is_lspace(const NTable& table, const Framing& f, const SurgeryOptions& opt) {
  LSpaceVerdict v;
  v.hf = hf_hat(table, f, opt);
  v.lspace = true;
  for (const SpinCResult& r : v.hf.per_spinc) {
    LSpaceCertificate::Entry e{r.spinc, r.euler > 0 ? 'A' : 'B', r.ker_ker, r.coker, false};
    e.holds = r.euler > 0 ? (r.ker_ker + r.coker == 1) : (r.ker_ker + r.coker == 0);
    v.lspace = v.lspace && e.holds;
    v.certificate.entries.push_back(e);
  }
  if (v.lspace != v.hf.lspace)
    throw InternalError("criteria verdict disagrees with homology total");
  return v;
}

}  // namespace lspace
