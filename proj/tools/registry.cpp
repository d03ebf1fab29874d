#include "registry.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace splitorder::cli {

using nlohmann::ordered_json;

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = {
      {ConcreteScheme({Rational(1)}, {Rational(1)}, "lie-trotter"), 1},
      {ConcreteScheme({Rational(1, 2), Rational(1, 2)}, {Rational(1), Rational(0)}, "strang"), 2},
      {ConcreteScheme({Rational(7, 24), Rational(3, 4), Rational(-1, 24)},
                      {Rational(2, 3), Rational(-2, 3), Rational(1)}, "paper-order3"),
       3},
  };
  return entries;
}

std::optional<RegistryEntry> find_scheme(std::string_view name) {
  for (const auto& entry : registry()) {
    if (entry.scheme.name == name) return entry;
  }
  return std::nullopt;
}

namespace {

std::vector<Rational> coefficient_list(const ordered_json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw ParseError(std::string("scheme file needs an array '") + key + "'");
  }
  std::vector<Rational> out;
  for (const auto& item : doc[key]) {
    if (!item.is_string()) throw ParseError(std::string("coefficients in '") + key + "' must be rational strings");
    out.push_back(Rational::parse(item.get<std::string>()));
  }
  return out;
}

}  // namespace

ConcreteScheme parse_scheme_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("scheme file must be a JSON object");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  return ConcreteScheme(coefficient_list(doc, "a"), coefficient_list(doc, "b"), std::move(name));
}

std::string scheme_to_json(const ConcreteScheme& scheme) {
  ordered_json doc;
  doc["name"] = scheme.name;
  doc["a"] = ordered_json::array();
  doc["b"] = ordered_json::array();
  for (const auto& v : scheme.a) doc["a"].push_back(v.to_string());
  for (const auto& v : scheme.b) doc["b"].push_back(v.to_string());
  return doc.dump(2);
}

ConcreteScheme load_scheme_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open scheme file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scheme_json(buffer.str());
}

}  // namespace splitorder::cli
