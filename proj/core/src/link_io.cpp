#include "lspace/link_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lspace/errors.hpp"

namespace lspace {

namespace {

using nlohmann::json;

std::int64_t as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw InputError(what + " must be an integer");
  return v.get<std::int64_t>();
}

LaurentPoly1 parse_knot(const json& arr, const std::string& field) {
  if (!arr.is_array()) throw InputError("'" + field + "' must be a list of [2k, coeff] pairs");
  LaurentPoly1 p;
  for (const json& t : arr) {
    if (!t.is_array() || t.size() != 2) throw InputError("'" + field + "' entries must be [2k, coeff]");
    p.add_term(HalfInt::from_doubled(as_int(t[0], field + " exponent")), as_int(t[1], field + " coefficient"));
  }
  return p;
}

}  // namespace

LinkData parse_link_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed link descriptor: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("link descriptor must be a JSON object");
  if (!doc.contains("lk")) throw InputError("link descriptor has no 'lk'");
  if (!doc.contains("delta")) throw InputError("link descriptor has no 'delta'");
  const std::string name = doc.value("name", std::string("link"));
  const std::int64_t lk = as_int(doc["lk"], "'lk'");
  const json& d = doc["delta"];
  if (!d.is_array()) throw InputError("'delta' must be a list of [2i, 2j, coeff] triples");
  LaurentPoly2 delta;
  for (const json& t : d) {
    if (!t.is_array() || t.size() != 3) throw InputError("'delta' entries must be [2i, 2j, coeff]");
    delta.add_term(HalfInt::from_doubled(as_int(t[0], "delta exponent")),
                   HalfInt::from_doubled(as_int(t[1], "delta exponent")), as_int(t[2], "delta coefficient"));
  }
  std::optional<LaurentPoly1> c1, c2;
  if (doc.contains("delta_c1")) c1 = parse_knot(doc["delta_c1"], "delta_c1");
  if (doc.contains("delta_c2")) c2 = parse_knot(doc["delta_c2"], "delta_c2");
  return make_link_data(name, lk, delta, c1, c2);
}

LinkData parse_link_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open link file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_link_json(buf.str());
}

std::string serialize_link(const LinkData& link) {
  // Hand-laid so each term sits on one line; json only escapes the name.
  std::ostringstream os;
  auto terms = [&os](const std::vector<std::string>& items) {
    if (items.empty()) {
      os << "[]";
      return;
    }
    os << "[\n";
    for (std::size_t k = 0; k < items.size(); ++k) os << "    " << items[k] << (k + 1 < items.size() ? ",\n" : "\n");
    os << "  ]";
  };
  auto knot = [](const LaurentPoly1& p) {
    std::vector<std::string> out;
    for (const auto& [e, c] : p.terms()) out.push_back("[" + std::to_string(e.doubled()) + ", " + std::to_string(c) + "]");
    return out;
  };
  std::vector<std::string> delta;
  for (const auto& [k, c] : link.delta.terms())
    delta.push_back("[" + std::to_string(k.first.doubled()) + ", " + std::to_string(k.second.doubled()) + ", " +
                    std::to_string(c) + "]");
  os << "{\n  \"name\": " << json(link.name).dump() << ",\n  \"lk\": " << link.lk << ",\n  \"delta\": ";
  terms(delta);
  os << ",\n  \"delta_c1\": ";
  terms(knot(link.component1));
  os << ",\n  \"delta_c2\": ";
  terms(knot(link.component2));
  os << "\n}\n";
  return os.str();
}

}  // namespace lspace
