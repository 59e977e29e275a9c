#pragma once

// Soft-set files:
//   { "universe": ["a","b","c"], "attributes": ["e1","e2","e3"],
//     "map": { "e1": ["a","c"], "e3": ["b","c"] } }
// An optional "name" field carries a profile or model name.

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "softsim/errors.hpp"
#include "softsim/soft_set.hpp"

namespace softsim {

struct NamedSoftSet {
  std::optional<std::string> name;
  SoftSet softset;
};

namespace detail {

/// Parses JSON, rejecting duplicate object keys (nlohmann would keep the last).
inline nlohmann::json parse_strict_json(const std::string& text) {
  std::vector<std::set<std::string>> seen;
  std::optional<std::string> duplicate;
  auto callback = [&](int /*depth*/, nlohmann::json::parse_event_t event, nlohmann::json& parsed) {
    using Event = nlohmann::json::parse_event_t;
    if (event == Event::object_start) {
      seen.emplace_back();
    } else if (event == Event::object_end) {
      seen.pop_back();
    } else if (event == Event::key && !seen.empty()) {
      const auto key = parsed.get<std::string>();
      if (!seen.back().insert(key).second && !duplicate) duplicate = key;
    }
    return true;
  };
  nlohmann::json out;
  try {
    out = nlohmann::json::parse(text, callback);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (duplicate) throw ParseError("duplicate key '" + *duplicate + "'");
  return out;
}

inline std::vector<std::string> string_list(const nlohmann::json& node, const std::string& field) {
  if (!node.is_array()) throw ParseError("'" + field + "' must be an array of strings");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& item : node) {
    if (!item.is_string()) throw ParseError("'" + field + "' must contain only strings");
    auto token = item.get<std::string>();
    if (!seen.insert(token).second) throw ParseError("duplicate '" + token + "' in '" + field + "'");
    out.push_back(std::move(token));
  }
  return out;
}

}  // namespace detail

inline NamedSoftSet parse_soft_set(const std::string& text) {
  const nlohmann::json doc = detail::parse_strict_json(text);
  if (!doc.is_object()) throw ParseError("soft-set file must hold a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "universe" && key != "attributes" && key != "map" && key != "name") {
      throw ParseError("unexpected field '" + key + "'");
    }
  }
  for (const char* required : {"universe", "attributes", "map"}) {
    if (!doc.contains(required)) throw ParseError(std::string("missing field '") + required + "'");
  }
  SpacePtr space = make_space(detail::string_list(doc["universe"], "universe"),
                              detail::string_list(doc["attributes"], "attributes"));
  const auto& map = doc["map"];
  if (!map.is_object()) throw ParseError("'map' must be an object");
  SoftSet::NamedAssignment named;
  for (const auto& [attr, members] : map.items()) {
    named.emplace_back(attr, detail::string_list(members, "map." + attr));
  }
  std::optional<std::string> name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  return {std::move(name), SoftSet::from_names(std::move(space), named)};
}

inline NamedSoftSet load_soft_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_soft_set(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

/// JSON object in the file layout; map keys and members follow space order.
inline nlohmann::ordered_json to_json(const SoftSet& f, const std::optional<std::string>& name = std::nullopt) {
  nlohmann::ordered_json out;
  if (name) out["name"] = *name;
  out["universe"] = f.space().universe();
  out["attributes"] = f.space().attributes();
  nlohmann::ordered_json map = nlohmann::ordered_json::object();
  for (const auto& [attr, members] : f.named()) map[attr] = members;
  out["map"] = std::move(map);
  return out;
}

/// Single-line serialization, used for witnesses.
inline std::string serialize(const SoftSet& f) { return to_json(f).dump(); }

}  // namespace softsim
