#pragma once

// Bonus-free factor pipeline: integer counts only, no novelty multiplier.
// Used to check that delta = 0 collapses the bonus pipeline to this one.

#include <set>
#include <string>

#include "cindex/corpus.hpp"
#include "cindex/schema.hpp"

namespace cindex::testing {

inline double plain_factor(const Publication& pub, const AuthorKey& author, const FeatureSpec& f) {
  const AuthorEntry* ref = pub.find(author);
  auto mine = lookup(ref->features, f.name);
  if (!mine) return 0.0;
  const auto n = static_cast<double>(pub.authors.size() - 1);
  int same = 0;
  std::set<std::string> cats;
  for (const auto& a : pub.authors) {
    auto v = lookup(a.features, f.name);
    if (v) cats.insert(*v);
    if (a.key != author && v && *v == *mine) ++same;
  }
  if (f.kind == FeatureKind::binary) return n / (1 + same) * f.base_weight;
  return n / (1 + same) * static_cast<double>(cats.size()) * f.base_weight * f.category_weight(*mine);
}

inline double plain_paper_factor(const Publication& pub, const AuthorKey& author, const SchemaConfig& schema) {
  double sum = 0.0;
  for (const auto& f : schema.features) sum += plain_factor(pub, author, f);
  return sum;
}

inline double plain_community_index(const Corpus& corpus, const AuthorKey& author, const SchemaConfig& schema) {
  double total = 0.0;
  int n = 0;
  for (const auto& id : author_publications(corpus, author)) {
    const auto& pub = corpus.publication(id);
    if (!schema.include_solo_publications && pub.is_solo()) continue;
    total += plain_paper_factor(pub, author, schema);
    ++n;
  }
  return n ? total / n : 0.0;
}

}  // namespace cindex::testing
