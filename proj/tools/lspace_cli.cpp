// lspace: command-line front end for the surgery / L-space library.
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lspace/alexander.hpp"
#include "lspace/classify.hpp"
#include "lspace/corpus.hpp"
#include "lspace/errors.hpp"
#include "lspace/hinv.hpp"
#include "lspace/link_io.hpp"
#include "lspace/surgery.hpp"

using namespace lspace;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitObstruction = 2;
constexpr int kExitUnsupported = 3;
constexpr const char* kUnreliable = "UNRELIABLE: input failed L-space gate";

struct ObstructionFailure {
  ObstructionReport report;
};

struct Loaded {
  LinkData link;
  ObstructionReport report;
  bool unreliable = false;
};

// "corpus:NAME" picks a built-in link, anything else is a descriptor file.
LinkData read_link(const std::string& arg) {
  const std::string prefix = "corpus:";
  if (arg.rfind(prefix, 0) == 0) {
    try {
      return corpus::by_name(arg.substr(prefix.size()));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  return parse_link_file(arg);
}

Loaded load_gated(const std::string& arg, bool force) {
  Loaded l{read_link(arg), {}, false};
  l.report = obstruction_report(l.link);
  if (!l.report.passed()) {
    if (!force) throw ObstructionFailure{l.report};
    l.unreliable = true;
  }
  return l;
}

std::string half(HalfInt h) { return h.str(); }

void print_report(std::ostream& os, const ObstructionReport& rep) {
  for (const CheckResult& c : rep.checks) {
    os << "  (" << c.id << ") " << std::left << std::setw(62) << c.title << to_string(c.status);
    if (!c.witness.empty()) os << "  [" << c.witness << "]";
    os << "\n";
  }
  os << rep.verdict() << "\n";
}

json report_json(const ObstructionReport& rep) {
  json checks = json::array();
  for (const CheckResult& c : rep.checks)
    checks.push_back({{"id", std::string(1, c.id)}, {"title", c.title}, {"status", to_string(c.status)},
                      {"witness", c.witness}});
  json out = {{"passed", rep.passed()}, {"verdict", rep.verdict()}, {"checks", checks}};
  if (rep.negative_n) {
    const NValueWitness& w = *rep.negative_n;
    out["negative_n"] = {{"axis", w.axis == Axis::L1 ? "L1" : "L2"},
                         {"s1", half(w.s1)},
                         {"s2", half(w.s2)},
                         {"value", w.value}};
  }
  return out;
}

void emit(const json& doc, bool unreliable) {
  json out = doc;
  if (unreliable) out["warning"] = kUnreliable;
  std::cout << out.dump(2) << "\n";
}

void stamp(bool unreliable) {
  if (unreliable) std::cout << kUnreliable << "\n";
}

// ---------------------------------------------------------------------------------------------

int cmd_surgery(const std::string& link_arg, std::int64_t p1, std::int64_t p2, bool as_json, bool force) {
  Loaded l = load_gated(link_arg, force);
  NTable table(l.link, l.unreliable);
  const Framing f{p1, p2, l.link.lk};
  const LSpaceVerdict v = is_lspace(table, f);
  const HFResult& hf = v.hf;
  if (as_json) {
    json spinc = json::array();
    for (const SpinCResult& r : hf.per_spinc)
      spinc.push_back({{"s1", half(r.spinc.s1)},
                       {"s2", half(r.spinc.s2)},
                       {"dim", r.dim},
                       {"euler", r.euler},
                       {"ker_ker", r.ker_ker},
                       {"coker", r.coker},
                       {"generators", r.generators},
                       {"cross_checked", r.cross_checked}});
    emit({{"link", l.link.name},
          {"framing", {{"p1", p1}, {"p2", p2}, {"lk", f.lk}, {"det", f.det()}}},
          {"truncation",
           {{"case", to_string(hf.truncation.kase)},
            {"i0", hf.truncation.i0},
            {"j0", hf.truncation.j0},
            {"b", half(hf.truncation.b)}}},
          {"spinc", spinc},
          {"total", hf.total},
          {"lspace", v.lspace},
          {"certificate", v.certificate.summary()}},
         l.unreliable);
    return kExitOk;
  }
  stamp(l.unreliable);
  std::cout << "link " << l.link.name << ", lk = " << f.lk << "\n";
  std::cout << "framing (" << p1 << ", " << p2 << "), det = " << f.det() << ", case "
            << to_string(hf.truncation.kase) << ", i0 = " << hf.truncation.i0 << ", j0 = " << hf.truncation.j0
            << ", b = " << half(hf.truncation.b) << "\n";
  std::cout << std::left << std::setw(18) << "spin^c" << std::right << std::setw(6) << "dim" << std::setw(7)
            << "euler" << std::setw(9) << "ker&ker" << std::setw(7) << "coker" << "\n";
  for (const SpinCResult& r : hf.per_spinc) {
    std::cout << std::left << std::setw(18) << r.spinc.str() << std::right << std::setw(6) << r.dim << std::setw(7)
              << (r.euler > 0 ? "+1" : "-1") << std::setw(9) << r.ker_ker << std::setw(7) << r.coker << "\n";
  }
  std::cout << "total " << hf.total << " (|det| = " << std::llabs(f.det()) << ")\n";
  std::cout << (v.lspace ? "L-space" : "not an L-space") << ": " << v.certificate.summary() << "\n";
  return kExitOk;
}

int cmd_classify(const std::string& link_arg, std::int64_t lo, std::int64_t hi, const std::string& format,
                 unsigned threads, const std::string& out_path, bool force) {
  const RenderFormat fmt = parse_render_format(format);
  Loaded l = load_gated(link_arg, force);
  NTable table(l.link, l.unreliable);
  const RegionVerdict region = region_scan(table, GridRange{lo, hi}, threads);
  std::string doc = render(region, fmt);
  if (l.unreliable) {
    if (fmt == RenderFormat::Json) {
      json j = json::parse(doc.empty() ? "{}" : doc);
      j["warning"] = kUnreliable;
      doc = j.dump(2) + "\n";
    } else if (fmt == RenderFormat::Svg) {
      doc.insert(doc.find('\n') + 1, std::string("<!-- ") + kUnreliable + " -->\n");
    } else {
      doc = std::string(kUnreliable) + "\n" + doc;
    }
  }
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write '" + out_path + "'");
    out << doc;
  }
  return kExitOk;
}

int cmd_obstruct(const std::string& link_arg, bool as_json) {
  const LinkData link = read_link(link_arg);
  const ObstructionReport rep = obstruction_report(link);
  if (as_json) {
    json doc = report_json(rep);
    doc["link"] = link.name;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "link " << link.name << ", lk = " << link.lk << "\n";
    print_report(std::cout, rep);
    if (rep.negative_n) {
      const NValueWitness& w = *rep.negative_n;
      std::cout << "witness n^{+" << (w.axis == Axis::L1 ? "L1" : "L2") << "}_{" << half(w.s1) << ", " << half(w.s2)
                << "} = " << w.value << "\n";
    }
  }
  return rep.passed() ? kExitOk : kExitObstruction;
}

int cmd_nmatrix(const std::string& link_arg, const std::string& window, const std::string& axis_name,
                bool as_json, bool force) {
  Loaded l = load_gated(link_arg, force);
  NTable table(l.link, true);
  if (axis_name != "L1" && axis_name != "L2") throw InputError("--axis must be L1 or L2");
  const Axis axis = axis_name == "L1" ? Axis::L1 : Axis::L2;
  HalfInt w;
  try {
    const auto slash = window.find('/');
    w = slash == std::string::npos ? HalfInt(std::stoll(window)) : HalfInt::from_doubled(std::stoll(window.substr(0, slash)));
    if (slash != std::string::npos && window.substr(slash + 1) != "2") throw std::invalid_argument(window);
  } catch (const std::logic_error&) {
    throw InputError("--window must be an integer or k/2");
  }
  const NMatrix m = nmatrix(table, w, axis);
  if (as_json) {
    json s1 = json::array(), s2 = json::array();
    for (HalfInt h : m.s1_values) s1.push_back(half(h));
    for (HalfInt h : m.s2_values) s2.push_back(half(h));
    emit({{"link", l.link.name}, {"axis", axis_name}, {"s1", s1}, {"s2", s2}, {"rows", m.rows}}, l.unreliable);
    return kExitOk;
  }
  stamp(l.unreliable);
  std::cout << "n^{+" << axis_name << "}_{s1,s2} for " << l.link.name << " (rows s2 descending, columns s1 ascending)\n";
  std::cout << std::setw(7) << "s2\\s1";
  for (HalfInt h : m.s1_values) std::cout << std::setw(6) << half(h);
  std::cout << "\n";
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    std::cout << std::setw(7) << half(m.s2_values[r]);
    for (std::int64_t v : m.rows[r]) std::cout << std::setw(6) << v;
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_nu(const std::string& link_arg, bool as_json, bool force) {
  Loaded l = load_gated(link_arg, force);
  NTable table(l.link, l.unreliable);
  const NuProfile prof = nu_profile(table);
  if (as_json) {
    json nu1 = json::array(), nu2 = json::array();
    for (const auto& [s, v] : prof.nu1) nu1.push_back({{"s2", half(s)}, {"nu", half(v)}});
    for (const auto& [s, v] : prof.nu2) nu2.push_back({{"s1", half(s)}, {"nu", half(v)}});
    emit({{"link", l.link.name}, {"radius", half(prof.radius)}, {"b", half(prof.b)}, {"nu_L1", nu1}, {"nu_L2", nu2}},
         l.unreliable);
    return kExitOk;
  }
  stamp(l.unreliable);
  std::cout << "first-vanishing thresholds for " << l.link.name << " on |s| <= " << half(prof.radius) << "\n";
  std::cout << std::setw(8) << "s" << std::setw(12) << "nu^{+L2}_s" << std::setw(12) << "nu^{+L1}_s" << "\n";
  for (const auto& [s, v] : prof.nu2) {
    auto other = prof.nu1.find(s);
    std::cout << std::setw(8) << half(s) << std::setw(12) << half(v) << std::setw(12)
              << (other == prof.nu1.end() ? "-" : half(other->second)) << "\n";
  }
  std::cout << "truncation bound b = " << half(prof.b) << "\n";
  return kExitOk;
}

RegionVerdict oracle_region(std::int64_t n, GridRange range) {
  RegionVerdict r;
  r.range = range;
  r.lk = n;
  for (std::int64_t p = range.lo; p <= range.hi; ++p)
    for (std::int64_t q = range.lo; q <= range.hi; ++q) r.grid[{p, q}] = torus_oracle(n, p, q);
  return r;
}

int cmd_torus(std::int64_t n, std::int64_t lo, std::int64_t hi, bool compare, const std::string& format,
              unsigned threads, bool as_json) {
  if (n < 2) throw InputError("--n must be at least 2");
  const GridRange range{lo, hi};
  const RegionVerdict oracle = oracle_region(n, range);
  if (!compare) {
    std::cout << render(oracle, as_json ? RenderFormat::Json : parse_render_format(format));
    return kExitOk;
  }
  NTable table(corpus::torus(n));
  const RegionVerdict scan = region_scan(table, range, threads);
  std::size_t agree = 0, skipped = 0;
  json diffs = json::array();
  for (const auto& [cell, v] : scan.grid) {
    if (v == Verdict::Unsupported) {
      ++skipped;
      continue;
    }
    const Verdict o = oracle.at(cell.first, cell.second);
    if (o == v) {
      ++agree;
    } else {
      diffs.push_back({{"p1", cell.first}, {"p2", cell.second}, {"oracle", to_string(o)}, {"classifier", to_string(v)}});
    }
  }
  if (as_json) {
    std::cout << json{{"n", n}, {"range", {lo, hi}}, {"agree", agree}, {"skipped", skipped}, {"disagreements", diffs}}.dump(2)
              << "\n";
  } else {
    std::cout << "T(2," << 2 * n << ") on [" << lo << ", " << hi << "]^2: " << agree << " cells agree, " << diffs.size()
              << " disagree, " << skipped << " unsupported\n";
    for (const json& d : diffs)
      std::cout << "  (" << d["p1"] << ", " << d["p2"] << "): oracle " << d["oracle"].get<std::string>()
                << ", classifier " << d["classifier"].get<std::string>() << "\n";
  }
  return diffs.empty() ? kExitOk : kExitError;
}

// Seeds file: {"lk": 0, "components": "unknots" | "general", "range": [lo, hi], "seeds": [[p1, p2], ...]}
int cmd_propagate(const std::string& path, const std::string& format, bool as_json) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open seeds file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed seeds file: ") + e.what());
  }
  CertificateSet seeds;
  GridRange range;
  ComponentSlopes slopes;
  try {
    seeds.lk = doc.at("lk").get<std::int64_t>();
    range = GridRange{doc.at("range").at(0).get<std::int64_t>(), doc.at("range").at(1).get<std::int64_t>()};
    const std::string comps = doc.value("components", std::string("unknots"));
    if (comps == "unknots") {
      slopes = ComponentSlopes::unknots();
    } else if (comps != "general") {
      throw InputError("'components' must be \"unknots\" or \"general\"");
    }
    for (const json& s : doc.at("seeds")) seeds.add(s.at(0).get<std::int64_t>(), s.at(1).get<std::int64_t>(), "seed");
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed seeds file: ") + e.what());
  }
  const CertificateSet closure = propagate_induction(seeds, slopes, range);
  if (as_json) {
    json facts = json::array();
    for (const auto& [cell, c] : closure.facts) facts.push_back({{"p1", c.p1}, {"p2", c.p2}, {"reason", c.reason}});
    std::cout << json{{"lk", closure.lk}, {"range", {range.lo, range.hi}}, {"facts", facts}}.dump(2) << "\n";
    return kExitOk;
  }
  if (format == "list") {
    for (const auto& [cell, c] : closure.facts) std::cout << "(" << c.p1 << ", " << c.p2 << ")  " << c.reason << "\n";
    std::cout << closure.facts.size() << " certified framings\n";
    return kExitOk;
  }
  RegionVerdict r;
  r.range = range;
  r.lk = closure.lk;
  for (std::int64_t p = range.lo; p <= range.hi; ++p)
    for (std::int64_t q = range.lo; q <= range.hi; ++q)
      r.grid[{p, q}] = p * q == closure.lk * closure.lk ? Verdict::B1Positive
                       : closure.contains(p, q)         ? Verdict::Lspace
                                                        : Verdict::NotLspace;
  std::cout << render(r, parse_render_format(format));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heegaard Floer hat of surgeries on 2-component L-space links"};
  app.require_subcommand(1);
  bool as_json = false, force = false;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_flag("--force", force, "run even when the link fails the L-space gate");

  std::string link;
  std::vector<std::int64_t> framing, range;
  std::string format = "ascii", out_path, window = "4", axis = "L2", seeds;
  unsigned threads = 0;
  std::int64_t n = 2;
  bool compare = false;

  auto* surgery = app.add_subcommand("surgery", "dim HF-hat per spin^c and the L-space verdict");
  surgery->add_option("--link", link, "descriptor file or corpus:NAME")->required();
  surgery->add_option("--framing", framing, "P1 P2")->required()->expected(2);

  auto* classify = app.add_subcommand("classify", "L-space region over a framing grid");
  classify->add_option("--link", link, "descriptor file or corpus:NAME")->required();
  classify->add_option("--range", range, "A B (both coordinates)")->required()->expected(2);
  classify->add_option("--format", format, "ascii | svg | json");
  classify->add_option("--threads", threads, "worker threads (0 = all cores)");
  classify->add_option("--out", out_path, "write to a file instead of stdout");

  auto* obstruct = app.add_subcommand("obstruct", "polynomial obstructions (a)-(f)");
  obstruct->add_option("--link", link, "descriptor file or corpus:NAME")->required();

  auto* nmat = app.add_subcommand("nmatrix", "table of n^{+L_i}_{s1,s2}");
  nmat->add_option("--link", link, "descriptor file or corpus:NAME")->required();
  nmat->add_option("--window", window, "|s_i| <= W (integer or k/2)");
  nmat->add_option("--axis", axis, "L1 | L2");

  auto* nu = app.add_subcommand("nu", "first-vanishing thresholds and the truncation bound b");
  nu->add_option("--link", link, "descriptor file or corpus:NAME")->required();

  auto* torus = app.add_subcommand("torus", "closed-form T(2,2n) classification");
  torus->add_option("--n", n, "n >= 2")->required();
  torus->add_option("--range", range, "A B")->required()->expected(2);
  torus->add_flag("--compare", compare, "also run the classifier and list disagreements");
  torus->add_option("--format", format, "ascii | svg | json");
  torus->add_option("--threads", threads, "worker threads for --compare");

  auto* propagate = app.add_subcommand("propagate", "close L-space seeds under the induction lemmas");
  propagate->add_option("--seeds", seeds, "seeds JSON file")->required();
  propagate->add_option("--format", format, "ascii | svg | json | list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;  // usage errors share the input-error code
  }

  try {
    if (*surgery) return cmd_surgery(link, framing[0], framing[1], as_json, force);
    if (*classify) return cmd_classify(link, range[0], range[1], format, threads, out_path, force);
    if (*obstruct) return cmd_obstruct(link, as_json);
    if (*nmat) return cmd_nmatrix(link, window, axis, as_json, force);
    if (*nu) return cmd_nu(link, as_json, force);
    if (*torus) return cmd_torus(n, range[0], range[1], compare, format, threads, as_json);
    if (*propagate) return cmd_propagate(seeds, format, as_json);
  } catch (const ObstructionFailure& e) {
    std::cerr << "input failed the L-space gate (rerun with --force to continue anyway):\n";
    print_report(std::cerr, e.report);
    return kExitObstruction;
  } catch (const NotLSpaceLink& e) {
    std::cerr << "not an L-space link: " << e.what() << "\n";
    return kExitObstruction;
  } catch (const UnsupportedFraming& e) {
    std::cerr << "unsupported framing: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitOk;
}
