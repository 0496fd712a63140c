#include "osalg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "osalg/errors.hpp"

namespace osalg {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string(what) + ": " + e.what());
  }
}

int require_int(const json& j, const char* field, const char* what) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw input_error(std::string(what) + ": field \"" + field + "\" must be an integer");
  return j[field].get<int>();
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Matroid parse_matroid(const std::string& json_text) {
  json j = parse_json(json_text, "matroid JSON");
  if (!j.is_object()) throw input_error("matroid JSON: expected an object");
  int n = require_int(j, "n", "matroid JSON");
  if (!j.contains("circuits") || !j["circuits"].is_array())
    throw input_error("matroid JSON: field \"circuits\" must be an array of element lists");

  std::vector<ElementSet> circuits;
  int index = 0;
  for (const auto& entry : j["circuits"]) {
    ++index;
    if (!entry.is_array())
      throw input_error("matroid JSON: circuit " + std::to_string(index) + " must be an array");
    std::vector<GroundElement> elems;
    for (const auto& v : entry) {
      if (!v.is_number_integer())
        throw input_error("matroid JSON: circuit " + std::to_string(index) +
                          " has a non-integer element");
      elems.push_back(v.get<int>());
    }
    ElementSet s = ElementSet::of(elems);
    if (s.size() != static_cast<int>(elems.size()))
      throw input_error("matroid JSON: circuit " + std::to_string(index) + " repeats an element");
    circuits.push_back(s);
  }

  bool unchecked = j.contains("unchecked") && j["unchecked"].is_boolean() && j["unchecked"].get<bool>();
  if (unchecked) return Matroid(n, std::move(circuits), Matroid::unchecked);
  return Matroid(n, std::move(circuits));
}

Matroid load_matroid_file(const std::string& path) {
  return parse_matroid(read_text_file(path));
}

Arrangement load_arrangement_file(const std::string& path) {
  return parse_arrangement(read_text_file(path));
}

DiagonalBasisCandidate parse_diagonal_basis(const std::string& json_text) {
  json j = parse_json(json_text, "basis JSON");
  if (!j.is_object()) throw input_error("basis JSON: expected an object");
  DiagonalBasisCandidate cand;
  cand.level = require_int(j, "level", "basis JSON");
  if (!j.contains("elements") || !j["elements"].is_array())
    throw input_error("basis JSON: field \"elements\" must be an array");
  for (const auto& entry : j["elements"]) {
    if (!entry.is_object() || !entry.contains("order") || !entry["order"].is_array())
      throw input_error("basis JSON: each element needs an \"order\" array");
    OrderedTuple order;
    for (const auto& v : entry["order"]) {
      if (!v.is_number_integer())
        throw input_error("basis JSON: order entries must be integers");
      order.entries.push_back(v.get<int>());
    }
    cand.orders.push_back(std::move(order));
  }
  return cand;
}

DiagonalBasisCandidate load_diagonal_basis_file(const std::string& path) {
  return parse_diagonal_basis(read_text_file(path));
}

BetaTable parse_beta_config(const std::string& json_text, int n, const Scalar& default_value) {
  json j = parse_json(json_text, "config JSON");
  BetaTable table(n, default_value);
  if (!j.is_object()) throw input_error("config JSON: expected an object");
  if (!j.contains("beta")) return table;
  if (!j["beta"].is_object())
    throw input_error("config JSON: field \"beta\" must be an object keyed by \"i,j\"");
  for (const auto& [key, value] : j["beta"].items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos)
      throw input_error("config JSON: beta key \"" + key + "\" must look like \"i,j\"");
    int i = 0;
    int k = 0;
    try {
      i = std::stoi(key.substr(0, comma));
      k = std::stoi(key.substr(comma + 1));
    } catch (const std::exception&) {
      throw input_error("config JSON: beta key \"" + key + "\" must look like \"i,j\"");
    }
    if (!value.is_string())
      throw input_error("config JSON: beta values must be rational strings");
    table.set(i, k, parse_scalar(value.get<std::string>()));
  }
  return table;
}

BetaTable load_beta_config_file(const std::string& path, int n, const Scalar& default_value) {
  return parse_beta_config(read_text_file(path), n, default_value);
}

std::string element_to_json(const AlgebraElement& e) {
  json terms = json::array();
  for (const auto& [support, coeff] : e.terms()) {
    json term;
    term["support"] = support.elements();
    term["coeff"] = scalar_to_string(coeff);
    terms.push_back(std::move(term));
  }
  json j;
  j["terms"] = std::move(terms);
  return j.dump();
}

AlgebraElement element_from_json(const std::string& json_text) {
  json j = parse_json(json_text, "element JSON");
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw input_error("element JSON: field \"terms\" must be an array");
  AlgebraElement e;
  for (const auto& term : j["terms"]) {
    if (!term.is_object() || !term.contains("support") || !term["support"].is_array() ||
        !term.contains("coeff") || !term["coeff"].is_string())
      throw input_error("element JSON: terms need \"support\" (array) and \"coeff\" (string)");
    std::vector<GroundElement> elems;
    for (const auto& v : term["support"]) {
      if (!v.is_number_integer()) throw input_error("element JSON: supports must be integer arrays");
      elems.push_back(v.get<int>());
    }
    ElementSet s = ElementSet::of(elems);
    if (s.size() != static_cast<int>(elems.size()))
      throw input_error("element JSON: support repeats an element");
    e.add_term(s, parse_scalar(term["coeff"].get<std::string>()));
  }
  return e;
}

}  // namespace osalg
