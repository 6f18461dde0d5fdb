#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "cindex/core.hpp"
#include "cindex/csv.hpp"
#include "cindex/schema.hpp"

namespace cindex {

enum class InputFormat { csv, json };

namespace columns {
inline constexpr std::string_view pub_id = "pub_id";
inline constexpr std::string_view author_id = "author_id";
inline constexpr std::string_view first_name = "first_name";
inline constexpr std::string_view last_name = "last_name";
inline constexpr std::string_view citations = "citations";

inline bool is_identity(std::string_view name) {
  return name == pub_id || name == author_id || name == first_name || name == last_name ||
         name == citations;
}
}  // namespace columns

// Every non-identity column, keyed by header name. Empty cells are stored as nullopt
// so the column stays known even when no row fills it.
using FeatureValues = std::map<std::string, FeatureValue>;

inline FeatureValue lookup(const FeatureValues& values, const std::string& feature) {
  auto it = values.find(feature);
  return it == values.end() ? std::nullopt : it->second;
}

struct AuthorshipRecord {
  PubId pub_id;
  AuthorKey author_key;
  std::string first_name;
  std::string last_name;
  FeatureValues feature_values;
  std::optional<std::uint64_t> citation_count;
  std::size_t line = 0;

  std::string display_name() const {
    if (first_name.empty()) return last_name;
    if (last_name.empty()) return first_name;
    return first_name + " " + last_name;
  }
};

namespace detail {

inline std::string trim(std::string_view s) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

// Lowercase ASCII, collapse whitespace runs, trim.
inline std::string normalize_name(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (unsigned char c : s) {
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += static_cast<char>(c < 0x80 ? std::tolower(c) : c);
  }
  return out;
}

inline std::optional<std::uint64_t> parse_count(const std::string& s, std::size_t line, const char* unit) {
  if (s.empty()) return std::nullopt;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(line, "citations must be a non-negative integer, got '" + s + "'", unit);
  return v;
}

// Shared by CSV and JSON: turns one row's named cells into a record.
inline AuthorshipRecord make_record(const std::vector<std::pair<std::string, std::string>>& cells,
                                    std::size_t line, const char* unit) {
  AuthorshipRecord rec;
  rec.line = line;
  std::string author_id;
  for (const auto& [name, raw] : cells) {
    std::string value = trim(raw);
    if (name == columns::pub_id) {
      rec.pub_id = PubId(value);
    } else if (name == columns::author_id) {
      author_id = value;
    } else if (name == columns::first_name) {
      rec.first_name = value;
    } else if (name == columns::last_name) {
      rec.last_name = value;
    } else if (name == columns::citations) {
      rec.citation_count = parse_count(value, line, unit);
    } else {
      rec.feature_values[name] = value.empty() ? FeatureValue{} : FeatureValue{value};
    }
  }
  if (rec.pub_id.empty()) throw ParseError(line, "empty pub_id", unit);
  if (!author_id.empty()) {
    rec.author_key = AuthorKey(author_id);
  } else if (!rec.first_name.empty() || !rec.last_name.empty()) {
    rec.author_key = AuthorKey(normalize_name(rec.first_name) + "|" + normalize_name(rec.last_name));
  } else {
    throw ParseError(line, "row has no author_id and no name", unit);
  }
  return rec;
}

inline std::vector<AuthorshipRecord> parse_csv(std::string_view text) {
  auto rows = csv::read(text);
  if (rows.empty()) throw ParseError(1, "missing header row");
  const auto& header = rows.front().cells;
  std::set<std::string> seen;
  for (const auto& h : header) {
    if (h.empty()) throw SchemaError("empty column name in header");
    if (!seen.insert(h).second) throw SchemaError("duplicate column name '" + h + "' in header");
  }
  if (!seen.count(std::string(columns::pub_id))) throw SchemaError("header lacks required column 'pub_id'");
  if (!seen.count(std::string(columns::author_id)) && !seen.count(std::string(columns::first_name)) &&
      !seen.count(std::string(columns::last_name)))
    throw SchemaError("header needs author_id or first_name/last_name columns");

  std::vector<AuthorshipRecord> out;
  out.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.cells.size() != header.size())
      throw ParseError(row.line, "expected " + std::to_string(header.size()) + " columns, found " +
                                     std::to_string(row.cells.size()));
    std::vector<std::pair<std::string, std::string>> cells;
    cells.reserve(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) cells.emplace_back(header[c], row.cells[c]);
    out.push_back(make_record(cells, row.line, "line"));
  }
  return out;
}

inline std::vector<AuthorshipRecord> parse_json(std::string_view text) {
  if (!csv::valid_utf8(text)) throw ParseError(1, "input is not valid UTF-8");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError(1, "JSON input must be an array of authorship objects");
  std::vector<AuthorshipRecord> out;
  out.reserve(doc.size());
  std::size_t index = 0;
  for (const auto& obj : doc) {
    ++index;
    if (!obj.is_object()) throw ParseError(index, "expected a JSON object", "record");
    std::vector<std::pair<std::string, std::string>> cells;
    for (const auto& [key, v] : obj.items()) {
      std::string value;
      if (v.is_null()) {
      } else if (v.is_string()) {
        value = v.get<std::string>();
      } else if (v.is_number() || v.is_boolean()) {
        value = v.dump();
      } else {
        throw ParseError(index, "field '" + key + "' must be a scalar", "record");
      }
      cells.emplace_back(key, std::move(value));
    }
    out.push_back(make_record(cells, index, "record"));
  }
  return out;
}

}  // namespace detail

inline std::vector<AuthorshipRecord> parse_records(std::string_view input, InputFormat format) {
  return format == InputFormat::csv ? detail::parse_csv(input) : detail::parse_json(input);
}

struct AuthorEntry {
  AuthorKey key;
  std::string first_name;
  std::string last_name;
  FeatureValues features;

  friend bool operator==(const AuthorEntry&, const AuthorEntry&) = default;
};

struct Publication {
  PubId pub_id;
  std::vector<AuthorEntry> authors;  // first-seen order
  std::optional<std::uint64_t> citation_count;

  bool is_solo() const noexcept { return authors.size() == 1; }

  const AuthorEntry* find(const AuthorKey& key) const {
    for (const auto& a : authors)
      if (a.key == key) return &a;
    return nullptr;
  }

  friend bool operator==(const Publication&, const Publication&) = default;
};

class Corpus {
 public:
  Corpus() = default;

  const std::map<PubId, Publication>& publications() const noexcept { return publications_; }
  const std::map<AuthorKey, std::set<PubId>>& author_index() const noexcept { return author_index_; }
  const SchemaConfig& schema() const noexcept { return schema_; }
  // Feature columns observed in the input, sorted.
  const std::set<std::string>& feature_columns() const noexcept { return feature_columns_; }

  std::size_t publication_count() const noexcept { return publications_.size(); }
  std::size_t author_count() const noexcept { return author_index_.size(); }

  bool contains(const AuthorKey& a) const { return author_index_.count(a) != 0; }

  const Publication* find(const PubId& id) const {
    auto it = publications_.find(id);
    return it == publications_.end() ? nullptr : &it->second;
  }

  const Publication& publication(const PubId& id) const {
    if (auto* p = find(id)) return *p;
    throw NotFoundError("unknown publication '" + id.str() + "'");
  }

  std::string display_name(const AuthorKey& a) const {
    auto it = display_names_.find(a);
    return it == display_names_.end() ? a.str() : it->second;
  }

  friend Corpus build_corpus(const std::vector<AuthorshipRecord>& records, SchemaConfig schema);

 private:
  std::map<PubId, Publication> publications_;
  std::map<AuthorKey, std::set<PubId>> author_index_;
  std::map<AuthorKey, std::string> display_names_;
  std::set<std::string> feature_columns_;
  SchemaConfig schema_;
};

// Groups rows by publication; throws ValidationError listing every problem found.
inline Corpus build_corpus(const std::vector<AuthorshipRecord>& records, SchemaConfig schema) {
  validate(schema);
  Corpus corpus;
  std::vector<std::string> problems;
  std::map<std::pair<PubId, AuthorKey>, std::size_t> first_line;
  std::map<PubId, std::size_t> citation_line;

  for (const auto& rec : records) {
    auto [it, fresh] = first_line.emplace(std::make_pair(rec.pub_id, rec.author_key), rec.line);
    if (!fresh) {
      problems.push_back("line " + std::to_string(rec.line) + ": duplicate authorship (pub " + rec.pub_id.str() +
                         ", author " + rec.author_key.str() + "), first seen on line " +
                         std::to_string(it->second));
      continue;
    }
    auto& pub = corpus.publications_[rec.pub_id];
    pub.pub_id = rec.pub_id;
    if (rec.citation_count) {
      if (!pub.citation_count) {
        pub.citation_count = rec.citation_count;
        citation_line[rec.pub_id] = rec.line;
      } else if (*pub.citation_count != *rec.citation_count) {
        problems.push_back("line " + std::to_string(rec.line) + ": pub " + rec.pub_id.str() + " has citations " +
                           std::to_string(*rec.citation_count) + " but line " +
                           std::to_string(citation_line[rec.pub_id]) + " says " +
                           std::to_string(*pub.citation_count));
      }
    }
    pub.authors.push_back({rec.author_key, rec.first_name, rec.last_name, rec.feature_values});
    corpus.author_index_[rec.author_key].insert(rec.pub_id);
    corpus.display_names_.emplace(rec.author_key, rec.display_name());
    for (const auto& [name, _] : rec.feature_values) corpus.feature_columns_.insert(name);
  }

  for (const auto& f : schema.features) {
    if (f.kind != FeatureKind::binary) continue;
    std::set<std::string> values;
    for (const auto& [_, pub] : corpus.publications_)
      for (const auto& a : pub.authors)
        if (auto v = lookup(a.features, f.name)) values.insert(*v);
    if (values.size() > 2) {
      std::string list;
      for (const auto& v : values) list += (list.empty() ? "" : ", ") + v;
      problems.push_back("binary feature '" + f.name + "' has " + std::to_string(values.size()) +
                         " distinct values (" + list + "); declare it categorical");
    }
  }

  if (!problems.empty()) throw ValidationError(std::move(problems));
  corpus.schema_ = std::move(schema);
  return corpus;
}

// P(author); empty for unknown authors.
inline const std::set<PubId>& author_publications(const Corpus& corpus, const AuthorKey& author) {
  static const std::set<PubId> none;
  auto it = corpus.author_index().find(author);
  return it == corpus.author_index().end() ? none : it->second;
}

// Writes the corpus back as CSV with an explicit author_id column.
inline std::string to_csv(const Corpus& corpus) {
  bool any_citations = false;
  for (const auto& [_, pub] : corpus.publications()) any_citations |= pub.citation_count.has_value();

  std::vector<std::string> header{std::string(columns::pub_id), std::string(columns::author_id),
                                  std::string(columns::first_name), std::string(columns::last_name)};
  if (any_citations) header.emplace_back(columns::citations);
  for (const auto& c : corpus.feature_columns()) header.push_back(c);

  std::string out = csv::format_row(header);
  for (const auto& [id, pub] : corpus.publications()) {
    for (const auto& a : pub.authors) {
      std::vector<std::string> row{id.str(), a.key.str(), a.first_name, a.last_name};
      if (any_citations) row.push_back(pub.citation_count ? std::to_string(*pub.citation_count) : "");
      for (const auto& c : corpus.feature_columns()) row.push_back(lookup(a.features, c).value_or(""));
      out += csv::format_row(row);
    }
  }
  return out;
}

// Equality up to author order inside each publication and absent-vs-empty feature cells.
inline bool equivalent(const Corpus& a, const Corpus& b) {
  auto normalized = [](const Corpus& c) {
    std::map<PubId, std::pair<std::optional<std::uint64_t>, std::map<AuthorKey, FeatureValues>>> out;
    for (const auto& [id, pub] : c.publications()) {
      auto& slot = out[id];
      slot.first = pub.citation_count;
      for (const auto& au : pub.authors) {
        FeatureValues present;
        for (const auto& [k, v] : au.features)
          if (v) present[k] = v;
        slot.second[au.key] = std::move(present);
      }
    }
    return out;
  };
  return a.schema() == b.schema() && normalized(a) == normalized(b);
}

}  // namespace cindex
