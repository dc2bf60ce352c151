#include "gzak/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gzak {

namespace {

using nlohmann::json;

const json& require(const json& node, const char* key, const std::string& path) {
  if (!node.is_object() || !node.contains(key)) throw ParseError("missing field '" + path + key + "'");
  return node.at(key);
}

template <typename T>
T as(const json& node, const std::string& path) {
  try {
    return node.get<T>();
  } catch (const json::exception&) {
    throw ParseError("field '" + path + "' has the wrong type");
  }
}

Eigen::VectorXcd parse_function(const json& node, const std::string& path, std::size_t expected) {
  if (!node.is_array()) throw ParseError("field '" + path + "' must be an array of [re, im] pairs");
  if (node.size() != expected) {
    throw InputError(path + " has length " + std::to_string(node.size()) + ", expected " + std::to_string(expected));
  }
  Eigen::VectorXcd v(static_cast<Eigen::Index>(expected));
  for (std::size_t i = 0; i < expected; ++i) {
    const json& z = node[i];
    const std::string where = path + "[" + std::to_string(i) + "]";
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
      throw ParseError("field '" + where + "' must be a [re, im] pair");
    }
    v[static_cast<Eigen::Index>(i)] = Complex(z[0].get<double>(), z[1].get<double>());
  }
  return v;
}

std::vector<Eigen::VectorXcd> parse_functions(const json& parent, const char* key, const std::string& prefix,
                                              std::size_t expected, bool required) {
  std::vector<Eigen::VectorXcd> out;
  if (!parent.contains(key)) {
    if (required) throw ParseError("missing field '" + prefix + key + "'");
    return out;
  }
  const json& list = parent.at(key);
  if (!list.is_array()) throw ParseError("field '" + prefix + key + "' must be an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.push_back(parse_function(list[i], prefix + key + "[" + std::to_string(i) + "]", expected));
  }
  return out;
}

FiniteAbelianGroup parse_group(const json& factors, const std::string& path) {
  return FiniteAbelianGroup(as<std::vector<std::int64_t>>(factors, path));
}

Scenario from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("scenario must be a JSON object");
  Scenario s;
  s.schema_version = as<int>(require(doc, "schema_version", ""), "schema_version");
  if (s.schema_version != kSchemaVersion) {
    throw ParseError("unsupported schema_version " + std::to_string(s.schema_version));
  }
  if (doc.contains("name")) s.name = as<std::string>(doc.at("name"), "name");

  const bool has_action = doc.contains("action");
  const bool has_translation = doc.contains("translation");
  if (has_action == has_translation) {
    throw InputError("scenario must contain exactly one of 'action' and 'translation'");
  }

  if (has_translation) {
    const json& t = doc.at("translation");
    TranslationBlock block;
    block.group = parse_group(require(t, "group_factors", "translation."), "translation.group_factors");
    const json& gens = require(t, "subgroup_generators", "translation.");
    if (!gens.is_array()) throw ParseError("field 'translation.subgroup_generators' must be an array");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string where = "translation.subgroup_generators[" + std::to_string(i) + "]";
      Element e = as<Element>(gens[i], where);
      if (!block.group.contains(e)) throw InputError(where + " is not an element of the group");
      block.subgroup_generators.push_back(std::move(e));
    }
    block.generators = parse_functions(t, "generators", "translation.", block.group.order(), true);
    block.test_functions = parse_functions(t, "test_functions", "translation.", block.group.order(), false);
    s.translation = std::move(block);
    return s;
  }

  FiniteAbelianGroup group =
      parse_group(require(require(doc, "group", ""), "invariant_factors", "group."), "group.invariant_factors");
  const json& space_node = require(doc, "space", "");
  const auto size = as<std::size_t>(require(space_node, "size", "space."), "space.size");
  auto weights = as<std::vector<double>>(require(space_node, "weights", "space."), "space.weights");
  if (weights.size() != size) {
    throw InputError("space.weights has length " + std::to_string(weights.size()) + ", space.size is " +
                     std::to_string(size));
  }
  WeightedSpace space(std::move(weights));

  const json& action = doc.at("action");
  const bool has_table = action.contains("table");
  const bool has_affine = action.contains("affine");
  if (has_table == has_affine) throw InputError("action must contain exactly one of 'table' and 'affine'");
  if (has_table) {
    auto table = as<std::vector<std::vector<std::size_t>>>(action.at("table"), "action.table");
    s.action.emplace(std::move(group), std::move(space), std::move(table));
  } else {
    auto multipliers = as<std::vector<std::int64_t>>(action.at("affine"), "action.affine");
    s.action = QuasiInvariantAction::affine(std::move(group), std::move(space), multipliers);
  }
  s.generators = parse_functions(doc, "generators", "", size, true);
  s.test_functions = parse_functions(doc, "test_functions", "", size, false);
  return s;
}

}  // namespace

Scenario parse_scenario_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed scenario: ") + e.what());
  }
  return from_json(doc);
}

Scenario parse_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

}  // namespace gzak
