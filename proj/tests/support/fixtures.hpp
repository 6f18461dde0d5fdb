#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cindex/corpus.hpp"
#include "cindex/demo.hpp"
#include "cindex/schema.hpp"

namespace cindex::testing {

inline SchemaConfig demo_schema(std::string_view schema_file, std::optional<double> delta = {}) {
  SchemaConfig s = parse_schema(demo::fixture(schema_file));
  if (delta) s.delta = *delta;
  return s;
}

inline Corpus demo_corpus(std::string_view data_file, std::string_view schema_file,
                          std::optional<double> delta = {}) {
  return build_corpus(parse_records(demo::fixture(data_file), InputFormat::csv), demo_schema(schema_file, delta));
}

struct RandomCorpusParams {
  int max_authors = 8;
  int max_pubs = 6;
  int max_categories = 4;
  double missing_rate = 0.1;
};

// Small random corpus: gender (binary), country and field (categorical).
// Values are drawn per row, so one author's affiliation can vary by paper.
inline std::vector<AuthorshipRecord> random_records(std::mt19937_64& rng, const RandomCorpusParams& p = {}) {
  std::uniform_int_distribution<int> n_authors_d(1, p.max_authors);
  std::uniform_int_distribution<int> n_pubs_d(1, p.max_pubs);
  std::uniform_int_distribution<int> n_cat_d(1, p.max_categories);
  std::bernoulli_distribution missing(p.missing_rate);

  const int n_authors = n_authors_d(rng);
  const int n_pubs = n_pubs_d(rng);
  const int n_countries = n_cat_d(rng);
  const int n_fields = n_cat_d(rng);

  std::vector<AuthorshipRecord> out;
  std::size_t line = 1;
  for (int pub = 0; pub < n_pubs; ++pub) {
    std::vector<int> ids(n_authors);
    for (int i = 0; i < n_authors; ++i) ids[i] = i;
    std::shuffle(ids.begin(), ids.end(), rng);
    const int team = std::uniform_int_distribution<int>(1, n_authors)(rng);
    std::optional<std::uint64_t> cites;
    if (rng() % 2) cites = rng() % 60;
    for (int k = 0; k < team; ++k) {
      AuthorshipRecord r;
      r.pub_id = PubId("p" + std::to_string(pub));
      r.author_key = AuthorKey("a" + std::to_string(ids[k]));
      r.first_name = "A" + std::to_string(ids[k]);
      r.line = ++line;
      r.citation_count = cites;
      auto draw = [&](int n, const char* prefix) -> FeatureValue {
        if (missing(rng)) return std::nullopt;
        return std::string(prefix) + std::to_string(std::uniform_int_distribution<int>(0, n - 1)(rng));
      };
      r.feature_values["gender"] = missing(rng) ? FeatureValue{} : FeatureValue{rng() % 2 ? "M" : "F"};
      r.feature_values["country"] = draw(n_countries, "C");
      r.feature_values["field"] = draw(n_fields, "F");
      out.push_back(std::move(r));
    }
  }
  return out;
}

inline SchemaConfig random_schema(std::mt19937_64& rng, double delta) {
  std::uniform_real_distribution<double> w(0.25, 3.0);
  SchemaConfig s;
  s.features = {
      {"country", FeatureKind::categorical, w(rng), {}},
      {"gender", FeatureKind::binary, w(rng), {}},
      {"field", FeatureKind::categorical, w(rng), {}},
  };
  if (rng() % 2) s.features[0].category_weights["C0"] = w(rng);
  if (rng() % 2) s.features[2].category_weights["F1"] = w(rng);
  s.delta = delta;
  s.include_solo_publications = rng() % 4 != 0;
  return s;
}

// Shuffle rows, which also permutes author order inside each publication.
inline std::vector<AuthorshipRecord> shuffled(std::vector<AuthorshipRecord> records, std::mt19937_64& rng) {
  std::shuffle(records.begin(), records.end(), rng);
  return records;
}

}  // namespace cindex::testing
