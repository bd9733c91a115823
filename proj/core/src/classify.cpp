#include "lspace/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "lspace/errors.hpp"

namespace lspace {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Lspace: return "lspace";
    case Verdict::NotLspace: return "not_lspace";
    case Verdict::B1Positive: return "b1_positive";
    case Verdict::Unsupported: return "unsupported";
  }
  return "?";
}

RegionVerdict region_scan(const NTable& table, GridRange range, unsigned threads, const SurgeryOptions& opt) {
  RegionVerdict out;
  out.range = range;
  out.lk = table.link().lk;
  if (range.empty()) return out;
  const std::int64_t w = range.hi - range.lo + 1;
  const std::size_t cells = static_cast<std::size_t>(w * w);
  std::vector<Verdict> verdicts(cells, Verdict::Unsupported);
  const HalfInt b = opt.b ? *opt.b : truncation_bound(table);
  SurgeryOptions cell_opt = opt;
  cell_opt.b = b;

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= cells) return;
      const Framing f{range.lo + static_cast<std::int64_t>(k) / w, range.lo + static_cast<std::int64_t>(k) % w,
                      out.lk};
      try {
        if (f.det() == 0) {
          verdicts[k] = Verdict::B1Positive;
        } else {
          verdicts[k] = is_lspace(table, f, cell_opt).lspace ? Verdict::Lspace : Verdict::NotLspace;
        }
      } catch (const UnsupportedFraming&) {
        verdicts[k] = Verdict::Unsupported;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cells;
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (std::size_t k = 0; k < cells; ++k)
    out.grid[{range.lo + static_cast<std::int64_t>(k) / w, range.lo + static_cast<std::int64_t>(k) % w}] = verdicts[k];
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> lspace_cells(const RegionVerdict& region) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& [cell, v] : region.grid)
    if (v == Verdict::Lspace) out.push_back(cell);
  return out;
}

// ---------------------------------------------------------------------------------------------
// Certificates

void CertificateSet::add(std::int64_t p1, std::int64_t p2, std::string reason) {
  facts.emplace(std::make_pair(p1, p2), Certificate{p1, p2, std::move(reason)});
}

ComponentSlopes ComponentSlopes::unknots() {
  ComponentSlopes s;
  s.first = [](std::int64_t p) { return p != 0; };
  s.second = [](std::int64_t p) { return p != 0; };
  s.both_unknots = true;
  return s;
}

namespace {

std::string cell_name(std::int64_t p1, std::int64_t p2) {
  return "(" + std::to_string(p1) + ", " + std::to_string(p2) + ")";
}

class Closure {
 public:
  Closure(CertificateSet& set, GridRange range) : set_(set), range_(range) {}

  bool inside(std::int64_t p1, std::int64_t p2) const {
    return p1 >= range_.lo && p1 <= range_.hi && p2 >= range_.lo && p2 <= range_.hi;
  }

  void add(std::int64_t p1, std::int64_t p2, const std::string& reason) {
    if (!inside(p1, p2) || set_.contains(p1, p2)) return;
    set_.add(p1, p2, reason);
    queue_.push_back({p1, p2});
  }

  bool pop(std::pair<std::int64_t, std::int64_t>& cell) {
    if (queue_.empty()) return false;
    cell = queue_.back();
    queue_.pop_back();
    return true;
  }

  // Every cell (p1 + k1 d1, p2 + k2 d2) with k1 >= k1_min, k2 >= k2_min that fits in the range.
  void quadrant(std::int64_t p1, std::int64_t d1, std::int64_t k1_min, std::int64_t p2, std::int64_t d2,
                std::int64_t k2_min, const std::string& reason) {
    for (std::int64_t a : ray(p1, d1, k1_min))
      for (std::int64_t c : ray(p2, d2, k2_min)) add(a, c, reason);
  }

 private:
  std::vector<std::int64_t> ray(std::int64_t p, std::int64_t d, std::int64_t k_min) const {
    if (d == 0) return {p};
    std::vector<std::int64_t> out;
    for (std::int64_t v = p + k_min * d; d > 0 ? v <= range_.hi : v >= range_.lo; v += d)
      if (v >= range_.lo && v <= range_.hi) out.push_back(v);
    return out;
  }

  CertificateSet& set_;
  GridRange range_;
  std::vector<std::pair<std::int64_t, std::int64_t>> queue_;
};

}  // namespace

CertificateSet propagate_induction(const CertificateSet& seeds, const ComponentSlopes& slopes, GridRange range) {
  CertificateSet out;
  out.lk = seeds.lk;
  if (range.empty()) return out;
  const std::int64_t lk = seeds.lk;
  Closure cl(out, range);
  for (const auto& [cell, c] : seeds.facts) cl.add(cell.first, cell.second, c.reason.empty() ? "seed" : c.reason);

  std::pair<std::int64_t, std::int64_t> cell;
  while (cl.pop(cell)) {
    const auto [p1, p2] = cell;
    const std::int64_t det = p1 * p2 - lk * lk;
    const std::string from = cell_name(p1, p2);
    // Induction lemma, moving p1 with L' = L2 (det' = p2), then moving p2 with L' = L1.
    if (slopes.second && slopes.second(p2) && det * p2 != 0) {
      const std::int64_t d = det * p2 > 0 ? 1 : -1;
      const std::string why = "induction on p1 from " + from + ": det*det' = " + std::to_string(det) + "*" +
                              std::to_string(p2) + (d > 0 ? " > 0" : " < 0");
      cl.quadrant(p1, d, 1, p2, 0, 0, why);
    }
    if (slopes.first && slopes.first(p1) && det * p1 != 0) {
      const std::int64_t d = det * p1 > 0 ? 1 : -1;
      const std::string why = "induction on p2 from " + from + ": det*det' = " + std::to_string(det) + "*" +
                              std::to_string(p1) + (d > 0 ? " > 0" : " < 0");
      cl.quadrant(p1, 0, 0, p2, d, 1, why);
    }
    if (!slopes.both_unknots) continue;
    const std::int64_t prod = p1 * p2, lk2 = lk * lk;
    if (prod > lk2 && p1 > 0 && p2 > 0) {
      cl.quadrant(p1, 1, 0, p2, 1, 0, "unknotted components, case (1) from " + from + ": p1 p2 > lk^2, p1, p2 > 0");
    } else if (prod > lk2 && p1 < 0 && p2 < 0) {
      cl.quadrant(p1, -1, 0, p2, -1, 0, "unknotted components, case (2) from " + from + ": p1 p2 > lk^2, p1, p2 < 0");
    } else if (p1 > 0 && p2 < 0) {
      cl.quadrant(p1, 1, 0, p2, -1, 0, "unknotted components, case (3) from " + from + ": p1 > 0 > p2");
    } else if (p1 < 0 && p2 > 0) {
      cl.quadrant(p1, -1, 0, p2, 1, 0, "unknotted components, case (3') from " + from + ": p1 < 0 < p2");
    } else if (prod < lk2 && p1 > 0 && p2 > 0) {
      const std::string why = "unknotted components, case (4) from " + from + ": p1 p2 < lk^2, p1, p2 > 0";
      cl.quadrant(p1, 1, 0, -1, -1, 0, why);
      cl.quadrant(-1, -1, 0, p2, 1, 0, why);
      for (std::int64_t a = 1; a <= p1; ++a)
        for (std::int64_t c = 1; c <= p2; ++c) cl.add(a, c, why);
    } else if (prod < lk2 && p1 < 0 && p2 < 0) {
      const std::string why = "unknotted components, case (5) from " + from + ": p1 p2 < lk^2, p1, p2 < 0";
      cl.quadrant(p1, -1, 1, 0, 1, 1, why);
      cl.quadrant(0, 1, 1, p2, -1, 1, why);
      for (std::int64_t a = p1; a <= -1; ++a)
        for (std::int64_t c = p2; c <= -1; ++c) cl.add(a, c, why);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------------------------
// Rendering

RenderFormat parse_render_format(const std::string& name) {
  if (name == "ascii") return RenderFormat::Ascii;
  if (name == "svg") return RenderFormat::Svg;
  if (name == "json") return RenderFormat::Json;
  throw InputError("unknown render format '" + name + "' (expected ascii, svg or json)");
}

namespace {

char glyph(Verdict v) {
  switch (v) {
    case Verdict::Lspace: return 'L';
    case Verdict::NotLspace: return '.';
    case Verdict::B1Positive: return '0';
    case Verdict::Unsupported: return 'x';
  }
  return '?';
}

Verdict lookup(const RegionVerdict& r, std::int64_t p1, std::int64_t p2) {
  auto it = r.grid.find({p1, p2});
  return it == r.grid.end() ? Verdict::Unsupported : it->second;
}

std::string render_ascii(const RegionVerdict& r) {
  std::string out;
  for (std::int64_t p2 = r.range.hi; p2 >= r.range.lo; --p2) {
    for (std::int64_t p1 = r.range.lo; p1 <= r.range.hi; ++p1) out += glyph(lookup(r, p1, p2));
    out += '\n';
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string render_svg(const RegionVerdict& r) {
  constexpr double cell = 8.0, margin = 16.0;
  const std::int64_t w = r.range.hi - r.range.lo + 1;
  const double side = 2 * margin + cell * static_cast<double>(w);
  auto x_of = [&](double p1) { return margin + (p1 - static_cast<double>(r.range.lo) + 0.5) * cell; };
  auto y_of = [&](double p2) { return margin + (static_cast<double>(r.range.hi) - p2 + 0.5) * cell; };
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(side) << "\" height=\""
     << fmt(side) << "\" viewBox=\"0 0 " << fmt(side) << " " << fmt(side) << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << fmt(side) << "\" height=\"" << fmt(side) << "\" fill=\"white\"/>\n";
  const double lo_x = x_of(static_cast<double>(r.range.lo)) - cell / 2, hi_x = x_of(static_cast<double>(r.range.hi)) + cell / 2;
  const double lo_y = y_of(static_cast<double>(r.range.hi)) - cell / 2, hi_y = y_of(static_cast<double>(r.range.lo)) + cell / 2;
  if (r.range.lo <= 0 && r.range.hi >= 0) {
    os << "<line x1=\"" << fmt(lo_x) << "\" y1=\"" << fmt(y_of(0)) << "\" x2=\"" << fmt(hi_x) << "\" y2=\""
       << fmt(y_of(0)) << "\" stroke=\"#999999\" stroke-width=\"0.5\"/>\n";
    os << "<line x1=\"" << fmt(x_of(0)) << "\" y1=\"" << fmt(lo_y) << "\" x2=\"" << fmt(x_of(0)) << "\" y2=\""
       << fmt(hi_y) << "\" stroke=\"#999999\" stroke-width=\"0.5\"/>\n";
  }
  os << "<g id=\"cells\">\n";
  for (std::int64_t p2 = r.range.hi; p2 >= r.range.lo; --p2)
    for (std::int64_t p1 = r.range.lo; p1 <= r.range.hi; ++p1) {
      const double x = x_of(static_cast<double>(p1)), y = y_of(static_cast<double>(p2));
      switch (lookup(r, p1, p2)) {
        case Verdict::Lspace:
          os << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"2.50\" fill=\"#1f4fbf\"/>\n";
          break;
        case Verdict::B1Positive:
          os << "<rect x=\"" << fmt(x - 1.5) << "\" y=\"" << fmt(y - 1.5)
             << "\" width=\"3.00\" height=\"3.00\" fill=\"#c0392b\"/>\n";
          break;
        case Verdict::Unsupported:
          os << "<rect x=\"" << fmt(x - 2) << "\" y=\"" << fmt(y - 2)
             << "\" width=\"4.00\" height=\"4.00\" fill=\"none\" stroke=\"#777777\" stroke-width=\"0.5\"/>\n";
          break;
        case Verdict::NotLspace:
          break;
      }
    }
  os << "</g>\n";
  // b1 > 0 locus p1 p2 = lk^2.
  const double k = static_cast<double>(r.lk * r.lk);
  if (k > 0) {
    for (int sign : {1, -1}) {
      std::vector<std::pair<double, double>> pts;
      for (int step = 0; step <= 4 * static_cast<int>(w); ++step) {
        const double p1 = sign * (0.25 * step);
        if (p1 == 0) continue;
        const double p2 = k / p1;
        if (p1 < r.range.lo - 0.5 || p1 > r.range.hi + 0.5 || p2 < r.range.lo - 0.5 || p2 > r.range.hi + 0.5) continue;
        pts.push_back({x_of(p1), y_of(p2)});
      }
      if (pts.size() < 2) continue;
      os << "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"0.8\" points=\"";
      for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << fmt(pts[i].first) << "," << fmt(pts[i].second);
      os << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_json(const RegionVerdict& r) {
  nlohmann::json cells = nlohmann::json::array();
  for (std::int64_t p2 = r.range.hi; p2 >= r.range.lo; --p2)
    for (std::int64_t p1 = r.range.lo; p1 <= r.range.hi; ++p1)
      cells.push_back({{"p1", p1}, {"p2", p2}, {"verdict", to_string(lookup(r, p1, p2))}});
  nlohmann::json doc = {{"lk", r.lk}, {"range", {r.range.lo, r.range.hi}}, {"cells", cells}};
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render(const RegionVerdict& region, RenderFormat format) {
  if (region.range.empty()) return {};
  switch (format) {
    case RenderFormat::Ascii: return render_ascii(region);
    case RenderFormat::Svg: return render_svg(region);
    case RenderFormat::Json: return render_json(region);
  }
  return {};
}

}  // namespace lspace
