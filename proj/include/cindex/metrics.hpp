#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "cindex/core.hpp"
#include "cindex/corpus.hpp"
#include "cindex/graph.hpp"
#include "cindex/schema.hpp"

namespace cindex {

struct Coauthor {
  AuthorKey key;
  FeatureValues features;
  double bonus = 1.0;
};

// Everything one factor computation needs: the reference author's values and
// every coauthor (C_p) with its novelty bonus already resolved.
struct PaperContext {
  AuthorKey reference_author;
  PubId publication;
  FeatureValues reference_features;
  std::vector<Coauthor> coauthors;  // publication order

  std::size_t n_coauthors() const noexcept { return coauthors.size(); }
};

struct FeatureFactor {
  std::string feature;
  FeatureKind kind = FeatureKind::categorical;
  double value = 0.0;
  FeatureValue reference_value;
  bool reference_missing = false;
  std::size_t n_coauthors = 0;
  double base_weight = 1.0;

  // binary
  double cost = 0.0;

  // categorical
  double numerator = 0.0;
  double denominator = 0.0;
  std::size_t breadth = 0;
  double category_weight = 1.0;
};

struct FactorBreakdown {
  AuthorKey author;
  PubId publication;
  std::vector<std::pair<AuthorKey, double>> bonuses;
  std::vector<FeatureFactor> per_feature;  // schema order
  double paper_factor = 0.0;

  const FeatureFactor* factor(std::string_view name) const {
    for (const auto& f : per_feature)
      if (f.feature == name) return &f;
    return nullptr;
  }
};

struct AuthorScore {
  AuthorKey author_key;
  std::string display_name;
  double c_index = 0.0;
  std::size_t publication_count = 0;
  std::vector<FactorBreakdown> per_publication;  // pub_id order
  std::optional<unsigned> h_index;

  // Mean of one feature's factor over the scored publications; 0 when none.
  double mean_factor(std::string_view feature) const {
    if (per_publication.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& b : per_publication)
      if (auto* f = b.factor(feature)) sum += f->value;
    return sum / static_cast<double>(per_publication.size());
  }
};

namespace detail {

// Floating-point addition is not associative; summing sorted terms makes the
// result independent of author order in the input.
inline double canonical_sum(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end());
  double s = 0.0;
  for (double t : terms) s += t;
  return s;
}

}  // namespace detail

inline PaperContext make_context(const Corpus& corpus, const CollabGraph& graph, const AuthorKey& author,
                                 const PubId& pub_id, double delta) {
  const Publication& pub = corpus.publication(pub_id);
  const AuthorEntry* self = pub.find(author);
  if (!self) throw UsageError("author '" + author.str() + "' is not on publication '" + pub_id.str() + "'");

  PaperContext ctx;
  ctx.reference_author = author;
  ctx.publication = pub_id;
  ctx.reference_features = self->features;
  ctx.coauthors.reserve(pub.authors.size() - 1);
  for (const auto& a : pub.authors) {
    if (a.key == author) continue;
    ctx.coauthors.push_back({a.key, a.features, novelty_bonus(graph, author, a.key, delta)});
  }
  return ctx;
}

// (N_p / cost) * w_f with cost = 1 + sum over same-valued coauthors of 1/bonus.
inline FeatureFactor evaluate_binary(const PaperContext& ctx, const FeatureSpec& spec) {
  if (spec.kind != FeatureKind::binary) throw UsageError("feature '" + spec.name + "' is not binary");
  FeatureFactor out;
  out.feature = spec.name;
  out.kind = spec.kind;
  out.base_weight = spec.base_weight;
  out.n_coauthors = ctx.n_coauthors();
  out.reference_value = lookup(ctx.reference_features, spec.name);
  if (!out.reference_value) {
    out.reference_missing = true;
    return out;
  }
  std::vector<double> damped;
  for (const auto& c : ctx.coauthors) {
    auto v = lookup(c.features, spec.name);
    if (v && *v == *out.reference_value) damped.push_back(1.0 / c.bonus);
  }
  out.cost = 1.0 + detail::canonical_sum(std::move(damped));
  out.value = static_cast<double>(out.n_coauthors) / out.cost * spec.base_weight;
  return out;
}

// (bonus mass of coauthors / (1 + bonus mass sharing the reference category))
//   * breadth * w_f * category weight of the reference author's category.
inline FeatureFactor evaluate_categorical(const PaperContext& ctx, const FeatureSpec& spec) {
  if (spec.kind != FeatureKind::categorical) throw UsageError("feature '" + spec.name + "' is not categorical");
  FeatureFactor out;
  out.feature = spec.name;
  out.kind = spec.kind;
  out.base_weight = spec.base_weight;
  out.n_coauthors = ctx.n_coauthors();
  out.reference_value = lookup(ctx.reference_features, spec.name);
  if (!out.reference_value) {
    out.reference_missing = true;
    return out;
  }
  std::set<std::string> categories{*out.reference_value};
  std::vector<double> all, same;
  for (const auto& c : ctx.coauthors) {
    all.push_back(c.bonus);
    auto v = lookup(c.features, spec.name);
    if (!v) continue;
    categories.insert(*v);
    if (*v == *out.reference_value) same.push_back(c.bonus);
  }
  out.numerator = detail::canonical_sum(std::move(all));
  out.denominator = 1.0 + detail::canonical_sum(std::move(same));
  out.breadth = categories.size();
  out.category_weight = spec.category_weight(*out.reference_value);
  out.value = out.numerator / out.denominator * static_cast<double>(out.breadth) * spec.base_weight *
              out.category_weight;
  return out;
}

inline double binary_factor(const PaperContext& ctx, const FeatureSpec& spec) {
  return evaluate_binary(ctx, spec).value;
}

inline double categorical_factor(const PaperContext& ctx, const FeatureSpec& spec) {
  return evaluate_categorical(ctx, spec).value;
}

inline FactorBreakdown paper_factor(const PaperContext& ctx, const SchemaConfig& schema) {
  FactorBreakdown out;
  out.author = ctx.reference_author;
  out.publication = ctx.publication;
  for (const auto& c : ctx.coauthors) out.bonuses.emplace_back(c.key, c.bonus);
  for (const auto& spec : schema.features) {
    out.per_feature.push_back(spec.kind == FeatureKind::binary ? evaluate_binary(ctx, spec)
                                                               : evaluate_categorical(ctx, spec));
    out.paper_factor += out.per_feature.back().value;
  }
  return out;
}

inline FactorBreakdown paper_factor(const Corpus& corpus, const CollabGraph& graph, const AuthorKey& author,
                                    const PubId& pub, const SchemaConfig& schema) {
  return paper_factor(make_context(corpus, graph, author, pub, schema.delta), schema);
}

// Largest h such that at least h entries are >= h.
inline unsigned h_index(std::span<const std::uint64_t> citations) {
  std::vector<std::uint64_t> sorted(citations.begin(), citations.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  unsigned h = 0;
  while (h < sorted.size() && sorted[h] >= h + 1) ++h;
  return h;
}

// Available only when every publication of the author carries a citation count.
inline std::optional<unsigned> author_h_index(const Corpus& corpus, const AuthorKey& author) {
  std::vector<std::uint64_t> counts;
  for (const auto& id : author_publications(corpus, author)) {
    const auto& pub = corpus.publication(id);
    if (!pub.citation_count) return std::nullopt;
    counts.push_back(*pub.citation_count);
  }
  if (counts.empty()) return std::nullopt;
  return h_index(counts);
}

inline AuthorScore community_index(const Corpus& corpus, const CollabGraph& graph, const AuthorKey& author,
                                   const SchemaConfig& schema) {
  if (!corpus.contains(author)) throw NotFoundError("unknown author '" + author.str() + "'");
  AuthorScore score;
  score.author_key = author;
  score.display_name = corpus.display_name(author);
  double total = 0.0;
  for (const auto& id : author_publications(corpus, author)) {
    if (!schema.include_solo_publications && corpus.publication(id).is_solo()) continue;
    score.per_publication.push_back(paper_factor(corpus, graph, author, id, schema));
    total += score.per_publication.back().paper_factor;
  }
  score.publication_count = score.per_publication.size();
  if (score.publication_count > 0) score.c_index = total / static_cast<double>(score.publication_count);
  score.h_index = author_h_index(corpus, author);
  return score;
}

// Descending c-index, ties by author_key. Output does not depend on `threads`.
inline std::vector<AuthorScore> compute_all(const Corpus& corpus, const CollabGraph& graph,
                                            const SchemaConfig& schema, unsigned threads = 1) {
  std::vector<AuthorKey> authors;
  authors.reserve(corpus.author_count());
  for (const auto& [key, _] : corpus.author_index()) authors.push_back(key);

  std::vector<AuthorScore> scores(authors.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(authors.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < authors.size(); ++i) scores[i] = community_index(corpus, graph, authors[i], schema);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          try {
            for (std::size_t i = t; i < authors.size(); i += threads)
              scores[i] = community_index(corpus, graph, authors[i], schema);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::sort(scores.begin(), scores.end(), [](const AuthorScore& a, const AuthorScore& b) {
    if (a.c_index != b.c_index) return a.c_index > b.c_index;
    return a.author_key < b.author_key;
  });
  return scores;
}

inline std::vector<AuthorScore> compute_all(const Corpus& corpus, const SchemaConfig& schema, unsigned threads = 1) {
  return compute_all(corpus, build_graph(corpus), schema, threads);
}

}  // namespace cindex
