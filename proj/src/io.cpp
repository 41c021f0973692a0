#include "abelarr/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace abelarr {

namespace {

std::size_t line_of(const std::string& text, std::size_t byte) {
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(std::min(byte, text.size())), '\n'));
}

const Json& field(const Json& obj, const std::string& name, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path + ": expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(path + "." + name + ": missing");
  return *it;
}

}  // namespace

Json to_json(const Integer& value) {
  if (fits_int64(value)) return Json(to_int64(value));
  return Json(value.get_str());
}

Integer integer_from_json(const Json& value, const std::string& path) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Integer(value.get<std::uint64_t>());
    return Integer(static_cast<long>(value.get<std::int64_t>()));
  }
  if (value.is_string()) {
    Integer out;
    if (out.set_str(value.get<std::string>(), 10) != 0) throw ParseError(path + ": not a decimal integer");
    return out;
  }
  throw ParseError(path + ": expected an integer, got " + std::string(value.type_name()));
}

Arrangement parse_arrangement(const Json& doc, std::vector<std::string>* warnings) {
  if (!doc.is_object()) throw ParseError("$: expected an object");
  for (const auto& [key, _] : doc.items())
    if (key != "group" && key != "vectors" && key != "name") throw ParseError("$." + key + ": unknown field");
  const Json& group = field(doc, "group", "$");
  const Json& free_rank = field(group, "free_rank", "$.group");
  const Integer r = integer_from_json(free_rank, "$.group.free_rank");
  if (r < 0 || r > 64) throw ParseError("$.group.free_rank: out of range");
  std::vector<Integer> torsion;
  if (group.contains("torsion")) {
    const Json& t = group["torsion"];
    if (!t.is_array()) throw ParseError("$.group.torsion: expected an array");
    for (std::size_t i = 0; i < t.size(); ++i)
      torsion.push_back(integer_from_json(t[i], "$.group.torsion[" + std::to_string(i) + "]"));
  }
  FGAbelianGroup gamma;
  try {
    gamma = make_group(static_cast<int>(r.get_si()), torsion);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("$.group: ") + e.what());
  }
  const Json& vectors = field(doc, "vectors", "$");
  if (!vectors.is_array()) throw ParseError("$.vectors: expected an array");
  std::vector<IntegerVector> elements;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const std::string path = "$.vectors[" + std::to_string(i) + "]";
    const Json& v = vectors[i];
    if (!v.is_array()) throw ParseError(path + ": expected an array");
    if (static_cast<int>(v.size()) != gamma.generator_count())
      throw ParseError(path + ": length " + std::to_string(v.size()) + " does not match " +
                       std::to_string(gamma.generator_count()) + " generators of " + gamma.to_string());
    IntegerVector x(gamma.generator_count());
    for (std::size_t j = 0; j < v.size(); ++j) x(static_cast<Index>(j)) = integer_from_json(v[j], path + "[" + std::to_string(j) + "]");
    const int changed = reduce_torsion_coordinates(x, gamma);
    if (changed > 0 && warnings)
      warnings->push_back(path + ": " + std::to_string(changed) + " torsion coordinate(s) reduced");
    elements.push_back(std::move(x));
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("$.name: expected a string");
    name = doc["name"].get<std::string>();
  }
  try {
    return Arrangement(gamma, std::move(elements), name);
  } catch (const CapacityError& e) {
    throw ParseError(std::string("$.vectors: ") + e.what());
  }
}

Arrangement parse_arrangement_text(const std::string& text, std::vector<std::string>* warnings) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  return parse_arrangement(doc, warnings);
}

Arrangement read_arrangement_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_arrangement_text(text.str(), warnings);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json arrangement_to_json(const Arrangement& arr) {
  Json torsion = Json::array();
  for (const auto& e : arr.gamma().torsion) torsion.push_back(to_json(e));
  Json vectors = Json::array();
  for (const auto& v : arr.elements()) {
    Json row = Json::array();
    for (Index j = 0; j < v.cols(); ++j) row.push_back(to_json(v(j)));
    vectors.push_back(std::move(row));
  }
  Json doc{{"group", {{"free_rank", arr.gamma().free_rank}, {"torsion", torsion}}}, {"vectors", vectors}};
  if (!arr.name().empty()) doc["name"] = arr.name();
  return doc;
}

Json to_json(const UniPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

UniPoly unipoly_from_json(const Json& value, const std::string& path) {
  if (!value.is_array()) throw ParseError(path + ": expected a coefficient array");
  std::vector<Integer> coeffs;
  for (std::size_t i = 0; i < value.size(); ++i) coeffs.push_back(integer_from_json(value[i], path + "[" + std::to_string(i) + "]"));
  return UniPoly(std::move(coeffs));
}

Json to_json(const BiPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e.first, e.second, to_json(c)}));
  return out;
}

Json to_json(const QuasiPolynomial& qp) {
  Json out{{"period", to_json(qp.period)}, {"minimal_period", to_json(minimal_period(qp))}};
  if (qp.period <= kMaxListedPeriod) {
    Json list = Json::array();
    for (const auto& f : qp.constituents()) list.push_back(to_json(f));
    out["constituents"] = std::move(list);
  } else {
    Json list = Json::array();
    for (const auto& [d, f] : qp.by_divisor) list.push_back(Json{{"gcd", to_json(d)}, {"coefficients", to_json(f)}});
    out["constituents_by_gcd"] = std::move(list);
  }
  return out;
}

Json poset_records(const IntersectionPoset& poset, const LayerSet& set) {
  Json out = Json::array();
  for (LayerId c : set) {
    const auto& n = poset.nodes[c];
    Json covers = Json::array();
    for (LayerId d : poset.lower_covers[c])
      if (std::binary_search(set.begin(), set.end(), d)) covers.push_back(poset.nodes[d].key);
    out.push_back(Json{{"key", n.key},
                       {"dim", n.dim},
                       {"rank", n.rank},
                       {"mu", to_json(n.mobius)},
                       {"bottom", poset.nodes[n.bottom].key},
                       {"covers", covers}});
  }
  return out;
}

Json to_json(const OracleReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json entry{{"instance", e.instance}, {"check", e.check}, {"arrangement", e.arrangement}, {"passed", e.passed}};
    if (!e.detail.empty()) entry["detail"] = e.detail;
    entries.push_back(std::move(entry));
  }
  Json out{{"seed", report.seed}, {"passed", report.passed()}, {"failures", report.failure_count()}, {"entries", entries}};
  if (report.shrunk) out["shrunk"] = *report.shrunk;
  return out;
}

}  // namespace abelarr
