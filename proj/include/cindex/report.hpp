#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cindex/csv.hpp"
#include "cindex/metrics.hpp"
#include "cindex/schema.hpp"

namespace cindex {

enum class ReportFormat { csv, json };

// Two decimals, halves rounded away from zero. Display only.
inline std::string display(double x) {
  double r = std::round(x * 100.0) / 100.0;
  if (r == 0.0) r = 0.0;  // no "-0.00"
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.2f", r);
  return buf.data();
}

// Shortest text that parses back to the same double.
inline std::string full_precision(double x) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

struct ReportRow {
  std::string author_key;
  std::string display_name;
  double c_index = 0.0;
  std::size_t publication_count = 0;
  std::optional<unsigned> h_index;

  std::string h_index_text() const { return h_index ? std::to_string(*h_index) : "n/a"; }
};

inline ReportRow to_row(const AuthorScore& s) {
  return {s.author_key.str(), s.display_name, s.c_index, s.publication_count, s.h_index};
}

inline std::string report_csv(const std::vector<AuthorScore>& scores) {
  std::string out = csv::format_row({"author_key", "display_name", "c_index", "publication_count", "h_index"});
  for (const auto& s : scores) {
    auto row = to_row(s);
    out += csv::format_row({row.author_key, row.display_name, full_precision(row.c_index),
                            std::to_string(row.publication_count), row.h_index_text()});
  }
  return out;
}

inline nlohmann::ordered_json factor_to_json(const FeatureFactor& f) {
  nlohmann::ordered_json j;
  j["feature"] = f.feature;
  j["kind"] = to_string(f.kind);
  j["factor"] = f.value;
  j["reference_value"] = f.reference_value ? nlohmann::ordered_json(*f.reference_value) : nlohmann::ordered_json();
  j["reference_missing"] = f.reference_missing;
  j["n_coauthors"] = f.n_coauthors;
  j["base_weight"] = f.base_weight;
  if (f.kind == FeatureKind::binary) {
    j["cost"] = f.cost;
  } else {
    j["numerator"] = f.numerator;
    j["denominator"] = f.denominator;
    j["breadth"] = f.breadth;
    j["category_weight"] = f.category_weight;
  }
  return j;
}

inline nlohmann::ordered_json score_to_json(const AuthorScore& s, const SchemaConfig& schema) {
  nlohmann::ordered_json j;
  j["author_key"] = s.author_key.str();
  j["display_name"] = s.display_name;
  j["c_index"] = s.c_index;
  j["publication_count"] = s.publication_count;
  j["h_index"] = s.h_index ? nlohmann::ordered_json(*s.h_index) : nlohmann::ordered_json();
  j["mean_factors"] = nlohmann::ordered_json::object();
  for (const auto& f : schema.features) j["mean_factors"][f.name] = s.mean_factor(f.name);
  j["publications"] = nlohmann::ordered_json::array();
  for (const auto& b : s.per_publication) {
    nlohmann::ordered_json jp;
    jp["pub_id"] = b.publication.str();
    jp["paper_factor"] = b.paper_factor;
    jp["coauthors"] = nlohmann::ordered_json::array();
    for (const auto& [key, bonus] : b.bonuses) {
      nlohmann::ordered_json jc;
      jc["author_key"] = key.str();
      jc["bonus"] = bonus;
      jp["coauthors"].push_back(std::move(jc));
    }
    jp["features"] = nlohmann::ordered_json::array();
    for (const auto& f : b.per_feature) jp["features"].push_back(factor_to_json(f));
    j["publications"].push_back(std::move(jp));
  }
  return j;
}

inline std::string report_json(const std::vector<AuthorScore>& scores, const SchemaConfig& schema) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& s : scores) doc.push_back(score_to_json(s, schema));
  return doc.dump(2) + "\n";
}

inline std::string render_report(const std::vector<AuthorScore>& scores, const SchemaConfig& schema,
                                 ReportFormat format) {
  return format == ReportFormat::csv ? report_csv(scores) : report_json(scores, schema);
}

// Fixed-width ranking for terminals.
inline std::string display_table(const std::vector<AuthorScore>& scores) {
  std::string out;
  std::array<char, 256> buf{};
  std::snprintf(buf.data(), buf.size(), "%-4s %-24s %-24s %9s %5s %7s\n", "rank", "author_key", "name", "c-index",
                "pubs", "h-index");
  out += buf.data();
  std::size_t rank = 0;
  for (const auto& s : scores) {
    auto row = to_row(s);
    std::snprintf(buf.data(), buf.size(), "%-4zu %-24s %-24s %9s %5zu %7s\n", ++rank, row.author_key.c_str(),
                  row.display_name.c_str(), display(row.c_index).c_str(), row.publication_count,
                  row.h_index_text().c_str());
    out += buf.data();
  }
  return out;
}

inline std::string explain_factor(const FeatureFactor& f) {
  std::string out = "  " + f.feature + " [" + to_string(f.kind) + "] ";
  if (f.reference_missing) return out + "reference value missing -> factor 0.00 (flagged)\n";
  out += "value=" + *f.reference_value + "  ";
  if (f.kind == FeatureKind::binary) {
    out += "N_p " + std::to_string(f.n_coauthors) + " / cost " + display(f.cost) + " x weight " +
           display(f.base_weight);
  } else {
    out += "numerator " + display(f.numerator) + " / denominator " + display(f.denominator) + " x breadth " +
           std::to_string(f.breadth) + " x weight " + display(f.base_weight) + " x category weight " +
           display(f.category_weight);
  }
  return out + " = factor " + display(f.value) + "\n";
}

inline std::string explain_breakdown(const FactorBreakdown& b) {
  std::string out = "pub " + b.publication.str() + "  paper factor " + display(b.paper_factor) + "\n";
  out += "  coauthors (" + std::to_string(b.bonuses.size()) + "):";
  if (b.bonuses.empty()) out += " none";
  for (const auto& [key, bonus] : b.bonuses) out += " " + key.str() + " bonus " + display(bonus) + ";";
  out += "\n";
  for (const auto& f : b.per_feature) out += explain_factor(f);
  return out;
}

inline std::string explain_score(const AuthorScore& s) {
  std::string out = "author " + s.author_key.str() + " (" + s.display_name + ")  c-index " + display(s.c_index) +
                    " over " + std::to_string(s.publication_count) + " publication(s)  h-index " +
                    to_row(s).h_index_text() + "\n";
  for (const auto& b : s.per_publication) out += explain_breakdown(b);
  return out;
}

}  // namespace cindex
