#include "isg/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "isg/error.hpp"

namespace isg {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) parse_error(where + " must be an object");
  auto it = j.find(key);
  if (it == j.end()) parse_error(where + " is missing \"" + key + "\"");
  return *it;
}

std::string text_of(const Json& j, const std::string& where) {
  if (!j.is_string()) parse_error(where + " must be a string, found " + j.dump());
  return j.get<std::string>();
}

ElementId lookup(const FiniteInverseSemigroup& s, const Json& j, const std::string& where) {
  const auto name = text_of(j, where);
  auto id         = s.find(name);
  if (!id) parse_error(where + " = \"" + name + "\" is not an element");
  return *id;
}

ElementSet set_from_json(const FiniteInverseSemigroup& s, const Json& j, const std::string& where) {
  if (!j.is_array()) parse_error(where + " must be an array of element names");
  ElementSet out(s.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.insert(lookup(s, j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(origin + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

SemigroupPtr semigroup_from_json(const Json& j, ValidateOptions opts) {
  SemigroupTable t;
  const auto& elements = field(j, "elements", "semigroup");
  if (!elements.is_array() || elements.empty()) parse_error("\"elements\" must be a non-empty array");
  std::map<std::string, ElementId> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto name = text_of(elements[i], "elements[" + std::to_string(i) + "]");
    if (!index.emplace(name, i).second) parse_error("element \"" + name + "\" is listed twice");
    t.names.push_back(std::move(name));
  }
  auto resolve = [&](const Json& cell, const std::string& where) {
    const auto name = text_of(cell, where);
    auto it         = index.find(name);
    if (it == index.end()) parse_error(where + " = \"" + name + "\" is not an element");
    return it->second;
  };

  const auto& mul   = field(j, "mul", "semigroup");
  const std::size_t n = t.names.size();
  if (!mul.is_array() || mul.size() != n) parse_error("\"mul\" must have one row per element");
  for (std::size_t x = 0; x < n; ++x) {
    const auto& row = mul[x];
    if (!row.is_array() || row.size() != n) parse_error("mul row " + t.names[x] + " must have " + std::to_string(n) + " entries");
    std::vector<ElementId> ids;
    for (std::size_t y = 0; y < n; ++y) ids.push_back(resolve(row[y], "mul[" + t.names[x] + "][" + t.names[y] + "]"));
    t.mul.push_back(std::move(ids));
  }
  if (j.contains("zero")) t.zero = resolve(j["zero"], "zero");
  if (j.contains("identity")) t.identity = resolve(j["identity"], "identity");

  try {
    return FiniteInverseSemigroup::make(std::move(t), opts);
  } catch (const Error& e) {
    throw Error(ErrorKind::ValidationError, e.what());
  }
}

Json semigroup_to_json(const FiniteInverseSemigroup& s) {
  Json j;
  j["elements"] = s.names();
  Json mul      = Json::array();
  for (ElementId x = 0; x < s.size(); ++x) {
    Json row = Json::array();
    for (ElementId y = 0; y < s.size(); ++y) row.push_back(s.name(s.mul(x, y)));
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  if (s.zero()) j["zero"] = s.name(*s.zero());
  if (s.identity()) j["identity"] = s.name(*s.identity());
  return j;
}

Coverage coverage_from_json(const SemigroupPtr& s, const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "tight") parse_error("unknown builtin coverage \"" + j.get<std::string>() + "\"");
    try {
      return tight_coverage(s);
    } catch (const Error& e) {
      throw Error(ErrorKind::ValidationError, e.what());
    }
  }
  const auto& covers = field(j, "covers", "coverage");
  if (!covers.is_array()) parse_error("\"covers\" must be an array");
  bool close = false;
  if (j.contains("close")) {
    if (!j["close"].is_boolean()) parse_error("\"close\" must be true or false");
    close = j["close"].get<bool>();
  }

  std::vector<CoverSeed> seeds;
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const std::string where = "covers[" + std::to_string(i) + "]";
    const ElementId of      = lookup(*s, field(covers[i], "of", where), where + ".of");
    seeds.push_back({of, set_from_json(*s, field(covers[i], "cover", where), where + ".cover")});
  }
  try {
    if (close) return close_coverage(s, seeds);
    Coverage cov(s);
    for (auto& seed : seeds) cov.add(seed.of, std::move(seed.cover));
    return cov;
  } catch (const Error& e) {
    throw Error(ErrorKind::ValidationError, e.what());
  }
}

Json coverage_to_json(const Coverage& cov) {
  const auto& s = cov.base();
  Json covers   = Json::array();
  for (ElementId a = 0; a < s.size(); ++a)
    for (const auto& c : cov.covers(a)) covers.push_back({{"cover", set_to_json(s, c)}, {"of", s.name(a)}});
  return {{"close", false}, {"covers", std::move(covers)}};
}

Json set_to_json(const FiniteInverseSemigroup& s, const ElementSet& a) {
  Json out = Json::array();
  for (auto x : a) out.push_back(s.name(x));
  return out;
}

Json filters_to_json(const FiniteInverseSemigroup& s, const FilterFamily& f) {
  Json list = Json::array();
  for (const auto& x : f.filters) list.push_back({{"carrier", set_to_json(s, x.carrier)}, {"min", s.name(x.min)}});
  return {{"filters", std::move(list)}, {"kind", std::string(to_string(f.kind))}};
}

Json groupoid_to_json(const FiniteGroupoid& g) {
  auto names = [&](const ElementSet& a) {
    Json out = Json::array();
    for (auto x : a) out.push_back(g.name(x));
    return out;
  };
  Json d, r, inv, mul = Json::array(), basis = Json::array();
  for (Arrow a = 0; a < g.size(); ++a) {
    d[g.name(a)]   = g.name(g.d(a));
    r[g.name(a)]   = g.name(g.r(a));
    inv[g.name(a)] = g.name(g.inv(a));
    basis.push_back(names(g.topology().neighbourhood(a)));
    for (Arrow b = 0; b < g.size(); ++b)
      if (g.composable(a, b)) mul.push_back({g.name(a), g.name(b), g.name(g.mul(a, b))});
  }
  // an empty groupoid still gets objects, not nulls
  if (g.size() == 0) d = r = inv = Json::object();
  return {{"arrows", g.names()}, {"basis", std::move(basis)}, {"d", std::move(d)}, {"inv", std::move(inv)},
          {"mul", std::move(mul)}, {"r", std::move(r)}, {"units", names(g.units())}};
}

std::string groupoid_to_dot(const FiniteGroupoid& g) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "digraph groupoid {\n";
  for (auto u : g.units()) out << "  " << quote(g.name(u)) << " [shape=box];\n";
  for (Arrow a = 0; a < g.size(); ++a)
    if (!g.is_unit(a)) out << "  " << quote(g.name(g.d(a))) << " -> " << quote(g.name(g.r(a))) << " [label=" << quote(g.name(a)) << "];\n";
  out << "}\n";
  return out.str();
}

Json pseudogroup_to_json(const UniversalPseudogroup& u) {
  const auto& s  = u.ideals.base();
  const auto& p  = u.semigroup();
  Json ideals    = Json::array();
  Json product   = Json::array();
  for (ElementId i = 0; i < p.size(); ++i) {
    ideals.push_back(set_to_json(s, u.carrier(i)));
    Json row = Json::array();
    for (ElementId j = 0; j < p.size(); ++j) row.push_back(p.mul(i, j));
    product.push_back(std::move(row));
  }
  Json pi = Json::object();
  for (ElementId x = 0; x < s.size(); ++x) pi[s.name(x)] = set_to_json(s, u.carrier(u.pi[x]));
  return {{"ideals", std::move(ideals)}, {"pi", std::move(pi)}, {"product", std::move(product)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace isg
