#pragma once

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cindex/core.hpp"

namespace cindex {

enum class FeatureKind { binary, categorical };

inline const char* to_string(FeatureKind kind) {
  return kind == FeatureKind::binary ? "binary" : "categorical";
}

inline FeatureKind parse_feature_kind(std::string_view s) {
  if (s == "binary") return FeatureKind::binary;
  if (s == "categorical") return FeatureKind::categorical;
  throw SchemaError("unknown feature kind '" + std::string(s) + "' (expected binary or categorical)");
}

struct FeatureSpec {
  std::string name;
  FeatureKind kind = FeatureKind::categorical;
  double base_weight = 1.0;
  // Only meaningful for categorical features. Unlisted categories weigh 1.
  std::map<std::string, double> category_weights;

  double category_weight(const std::string& category) const {
    auto it = category_weights.find(category);
    return it == category_weights.end() ? 1.0 : it->second;
  }

  friend bool operator==(const FeatureSpec&, const FeatureSpec&) = default;
};

struct SchemaConfig {
  std::vector<FeatureSpec> features;
  double delta = 0.0;
  bool include_solo_publications = true;

  const FeatureSpec* find(std::string_view name) const {
    for (const auto& f : features)
      if (f.name == name) return &f;
    return nullptr;
  }

  friend bool operator==(const SchemaConfig&, const SchemaConfig&) = default;
};

inline void validate(const SchemaConfig& schema) {
  std::set<std::string> seen;
  for (const auto& f : schema.features) {
    if (f.name.empty()) throw SchemaError("feature with empty name");
    if (!seen.insert(f.name).second) throw SchemaError("duplicate feature name '" + f.name + "'");
    if (!(std::isfinite(f.base_weight) && f.base_weight > 0))
      throw SchemaError("feature '" + f.name + "': base_weight must be a positive number");
    if (f.kind == FeatureKind::binary && !f.category_weights.empty())
      throw SchemaError("feature '" + f.name + "': category_weights apply to categorical features only");
    for (const auto& [cat, w] : f.category_weights)
      if (!(std::isfinite(w) && w > 0))
        throw SchemaError("feature '" + f.name + "': weight for category '" + cat + "' must be positive");
  }
  if (!(std::isfinite(schema.delta) && schema.delta >= 0))
    throw SchemaError("delta must be a non-negative number");
}

// gender (binary), country and field (categorical), unit weights, no novelty bonus.
inline SchemaConfig default_schema() {
  SchemaConfig s;
  s.features = {
      {"country", FeatureKind::categorical, 1.0, {}},
      {"gender", FeatureKind::binary, 1.0, {}},
      {"field", FeatureKind::categorical, 1.0, {}},
  };
  return s;
}

inline SchemaConfig schema_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw SchemaError("schema document must be a JSON object");
  SchemaConfig schema;
  try {
    if (!doc.contains("features") || !doc.at("features").is_array())
      throw SchemaError("schema requires a \"features\" array");
    for (const auto& jf : doc.at("features")) {
      if (!jf.is_object()) throw SchemaError("each feature must be a JSON object");
      FeatureSpec f;
      f.name = jf.at("name").get<std::string>();
      f.kind = parse_feature_kind(jf.value("kind", std::string("categorical")));
      f.base_weight = jf.value("base_weight", 1.0);
      if (jf.contains("category_weights")) {
        const auto& cw = jf.at("category_weights");
        if (!cw.is_object()) throw SchemaError("feature '" + f.name + "': category_weights must be an object");
        for (const auto& [cat, w] : cw.items()) f.category_weights[cat] = w.get<double>();
      }
      schema.features.push_back(std::move(f));
    }
    schema.delta = doc.value("delta", 0.0);
    schema.include_solo_publications = doc.value("include_solo_publications", true);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed schema: ") + e.what());
  }
  validate(schema);
  return schema;
}

inline SchemaConfig parse_schema(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("schema is not valid JSON: ") + e.what());
  }
  return schema_from_json(doc);
}

inline nlohmann::ordered_json schema_to_json(const SchemaConfig& schema) {
  nlohmann::ordered_json doc;
  doc["features"] = nlohmann::ordered_json::array();
  for (const auto& f : schema.features) {
    nlohmann::ordered_json jf;
    jf["name"] = f.name;
    jf["kind"] = to_string(f.kind);
    jf["base_weight"] = f.base_weight;
    if (!f.category_weights.empty()) {
      jf["category_weights"] = nlohmann::ordered_json::object();
      for (const auto& [cat, w] : f.category_weights) jf["category_weights"][cat] = w;
    }
    doc["features"].push_back(std::move(jf));
  }
  doc["delta"] = schema.delta;
  doc["include_solo_publications"] = schema.include_solo_publications;
  return doc;
}

}  // namespace cindex
