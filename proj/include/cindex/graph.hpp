#pragma once

#include <cmath>
#include <map>
#include <set>
#include <utility>

#include <json.hpp>

#include "cindex/core.hpp"
#include "cindex/corpus.hpp"

namespace cindex {

// Co-authorship multigraph. Edge multiplicity = number of distinct shared publications.
class CollabGraph {
 public:
  using Pair = std::pair<AuthorKey, AuthorKey>;  // first < second

  static Pair make_pair(const AuthorKey& a, const AuthorKey& b) {
    return a < b ? Pair{a, b} : Pair{b, a};
  }

  const std::map<Pair, unsigned>& pair_counts() const noexcept { return pair_counts_; }

  // N(a); empty for isolated or unknown authors.
  const std::set<AuthorKey>& neighbors(const AuthorKey& a) const {
    static const std::set<AuthorKey> none;
    auto it = adjacency_.find(a);
    return it == adjacency_.end() ? none : it->second;
  }

  const std::map<AuthorKey, std::set<AuthorKey>>& adjacency() const noexcept { return adjacency_; }

  void add_publication(const Publication& pub) {
    const auto& authors = pub.authors;
    for (std::size_t i = 0; i < authors.size(); ++i) {
      for (std::size_t j = i + 1; j < authors.size(); ++j) {
        ++pair_counts_[make_pair(authors[i].key, authors[j].key)];
        adjacency_[authors[i].key].insert(authors[j].key);
        adjacency_[authors[j].key].insert(authors[i].key);
      }
    }
  }

 private:
  std::map<Pair, unsigned> pair_counts_;
  std::map<AuthorKey, std::set<AuthorKey>> adjacency_;
};

inline CollabGraph build_graph(const Corpus& corpus) {
  CollabGraph g;
  for (const auto& [_, pub] : corpus.publications()) g.add_publication(pub);
  return g;
}

inline unsigned pair_count(const CollabGraph& g, const AuthorKey& a, const AuthorKey& b) {
  if (a == b) throw UsageError("pair_count needs two distinct authors, got '" + a.str() + "' twice");
  auto it = g.pair_counts().find(CollabGraph::make_pair(a, b));
  return it == g.pair_counts().end() ? 0u : it->second;
}

// 1 + delta when a and b share exactly one publication in the whole corpus, else 1.
inline double novelty_bonus(const CollabGraph& g, const AuthorKey& a, const AuthorKey& b, double delta) {
  if (!(std::isfinite(delta) && delta >= 0)) throw UsageError("delta must be a non-negative number");
  unsigned n = pair_count(g, a, b);
  if (n == 0) throw UsageError("novelty bonus undefined: '" + a.str() + "' and '" + b.str() + "' never co-authored");
  return n == 1 ? 1.0 + delta : 1.0;
}

inline nlohmann::ordered_json graph_to_json(const CollabGraph& g) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& [author, nbrs] : g.adjacency()) {
    nlohmann::ordered_json node;
    node["author_key"] = author.str();
    node["coauthors"] = nlohmann::ordered_json::array();
    for (const auto& b : nbrs) {
      nlohmann::ordered_json edge;
      edge["author_key"] = b.str();
      edge["shared_publications"] = pair_count(g, author, b);
      node["coauthors"].push_back(std::move(edge));
    }
    doc.push_back(std::move(node));
  }
  return doc;
}

}  // namespace cindex
