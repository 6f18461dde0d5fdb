#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "cindex/metrics.hpp"
#include "oracle/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/plain_factors.hpp"

using namespace cindex;
using Catch::Approx;
using cindex::testing::demo_corpus;
using cindex::testing::demo_schema;

namespace {

AuthorKey k(const std::string& s) { return AuthorKey(s); }
PubId p(const std::string& s) { return PubId(s); }

FeatureSpec binary(const char* name, double w = 1.0) { return {name, FeatureKind::binary, w, {}}; }
FeatureSpec categorical(const char* name, double w = 1.0) { return {name, FeatureKind::categorical, w, {}}; }

// Context built by hand: reference value plus coauthor (value, bonus) pairs.
PaperContext context(const char* feature, FeatureValue mine, std::vector<std::pair<FeatureValue, double>> others) {
  PaperContext ctx;
  ctx.reference_author = k("ref");
  ctx.publication = p("x");
  ctx.reference_features[feature] = mine;
  int i = 0;
  for (auto& [v, bonus] : others) {
    Coauthor c;
    c.key = k("c" + std::to_string(i++));
    c.features[feature] = v;
    c.bonus = bonus;
    ctx.coauthors.push_back(std::move(c));
  }
  return ctx;
}

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace

TEST_CASE("make_context resolves coauthors and bonuses", "[metrics]") {
  auto corpus = demo_corpus("table7.csv", "schema_table7.json");
  auto g = build_graph(corpus);

  auto david = make_context(corpus, g, k("david"), p("789"), 0.8);
  REQUIRE(david.n_coauthors() == 5);
  for (const auto& c : david.coauthors) CHECK(c.bonus == 1.8);

  auto adam = make_context(corpus, g, k("adam"), p("789"), 0.8);
  std::map<std::string, double> bonus;
  for (const auto& c : adam.coauthors) bonus[c.key.str()] = c.bonus;
  CHECK(bonus == std::map<std::string, double>{
                     {"david", 1.8}, {"sophia", 1.8}, {"emily", 1.0}, {"maria", 1.0}, {"robert", 1.0}});
  CHECK(adam.coauthors.front().key.str() == "david");  // publication order

  CHECK_THROWS_AS(make_context(corpus, g, k("david"), p("246"), 0.8), UsageError);
  CHECK_THROWS_AS(make_context(corpus, g, k("david"), p("999"), 0.8), NotFoundError);

  auto solo = build_corpus(parse_records("pub_id,author_id\n1,a\n", InputFormat::csv), default_schema());
  auto ctx = make_context(solo, build_graph(solo), k("a"), p("1"), 0.8);
  CHECK(ctx.n_coauthors() == 0);
}

TEST_CASE("binary factor", "[metrics]") {
  SECTION("Table 1: lone female among three males") {
    CHECK(binary_factor(context("g", "F", {{"M", 1}, {"M", 1}, {"M", 1}}), binary("g")) == 3.0);
  }
  SECTION("Table 2: all four male") {
    auto f = evaluate_binary(context("g", "M", {{"M", 1}, {"M", 1}, {"M", 1}}), binary("g"));
    CHECK(f.cost == 4.0);
    CHECK(f.value == 0.75);
  }
  SECTION("Table 7: David on 789") {
    auto ctx = context("g", "M", {{"M", 1.8}, {"F", 1.8}, {"F", 1.8}, {"M", 1.8}, {"F", 1.8}});
    auto f = evaluate_binary(ctx, binary("g"));
    CHECK(f.cost == Approx(1 + 2 / 1.8));
    CHECK(f.value == Approx(5 / (1 + 2 / 1.8)));
    CHECK(f.value == Approx(2.37).margin(0.005));
  }
  SECTION("solo publication") { CHECK(binary_factor(context("g", "M", {}), binary("g")) == 0.0); }
  SECTION("missing reference value is flagged and scores 0") {
    auto f = evaluate_binary(context("g", std::nullopt, {{"M", 1}, {"F", 1}}), binary("g"));
    CHECK(f.reference_missing);
    CHECK(f.value == 0.0);
  }
  SECTION("missing coauthor counts toward N_p only") {
    auto f = evaluate_binary(context("g", "M", {{std::nullopt, 1}, {"M", 1}}), binary("g"));
    CHECK(f.n_coauthors == 2);
    CHECK(f.cost == 2.0);
    CHECK(f.value == 1.0);
  }
  SECTION("kind mismatch") { CHECK_THROWS_AS(binary_factor(context("g", "M", {}), categorical("g")), UsageError); }
}

TEST_CASE("categorical factor", "[metrics]") {
  SECTION("Table 3: Omar") {
    auto ctx = context("c", "Egypt", {{"US", 1}, {"Italy", 1}, {"US", 1}});
    auto f = evaluate_categorical(ctx, categorical("c"));
    CHECK(f.numerator == 3.0);
    CHECK(f.denominator == 1.0);
    CHECK(f.breadth == 3);
    CHECK(f.value == 9.0);
  }
  SECTION("Table 4: Daniel") {
    CHECK(categorical_factor(context("c", "US", {{"Egypt", 1}, {"US", 1}, {"US", 1}}), categorical("c")) == 2.0);
  }
  SECTION("Table 5: Daniel with US weighted by one half") {
    auto spec = categorical("c");
    spec.category_weights["US"] = 0.5;
    CHECK(categorical_factor(context("c", "US", {{"Egypt", 1}, {"Italy", 1}, {"US", 1}}), spec) == 2.25);
    // another author's category weight plays no part in Omar's factor
    CHECK(categorical_factor(context("c", "Egypt", {{"US", 1}, {"Italy", 1}, {"US", 1}}), spec) == 9.0);
  }
  SECTION("Table 7: Adam's field on 789") {
    auto ctx = context("f", "Health", {{"Health", 1.8}, {"CS", 1}, {"SS", 1}, {"Eng", 1}, {"CS", 1.8}});
    auto f = evaluate_categorical(ctx, categorical("f"));
    CHECK(f.numerator == Approx(6.6));
    CHECK(f.denominator == Approx(2.8));
    CHECK(f.breadth == 4);
    CHECK(f.value == Approx(6.6 / 2.8 * 4));
    CHECK(f.value == Approx(9.43).margin(0.005));
  }
  SECTION("homogeneous team") {
    CHECK(categorical_factor(context("c", "X", {{"X", 1}, {"X", 1}, {"X", 1}}), categorical("c")) == 0.75);
  }
  SECTION("missing values are excluded from breadth") {
    auto f = evaluate_categorical(context("c", "X", {{std::nullopt, 1}, {"Y", 1}}), categorical("c"));
    CHECK(f.breadth == 2);
    CHECK(f.numerator == 2.0);
    CHECK(f.value == 4.0);
  }
  SECTION("missing reference") {
    auto f = evaluate_categorical(context("c", std::nullopt, {{"Y", 1}}), categorical("c"));
    CHECK(f.reference_missing);
    CHECK(f.value == 0.0);
  }
}

TEST_CASE("paper factor sums the feature factors", "[metrics]") {
  SECTION("Table 6: Adam on 246") {
    auto corpus = demo_corpus("table6.csv", "schema_table6.json");
    auto b = paper_factor(corpus, build_graph(corpus), k("adam"), p("246"), corpus.schema());
    CHECK(b.factor("country")->value == 20.0);
    CHECK(b.factor("gender")->value == Approx(5.0 / 3.0));
    CHECK(b.factor("field")->value == 10.0);
    CHECK(b.paper_factor == Approx(20 + 5.0 / 3.0 + 10));
  }
  SECTION("Table 7: Maria on 789") {
    auto corpus = demo_corpus("table7.csv", "schema_table7.json");
    auto b = paper_factor(corpus, build_graph(corpus), k("maria"), p("789"), corpus.schema());
    CHECK(b.factor("country")->value == Approx(26.4));
    CHECK(b.factor("field")->value == Approx(26.4));
    CHECK(b.paper_factor == Approx(54.76).margin(0.005));
  }
  SECTION("solo publication") {
    auto corpus = build_corpus(parse_records("pub_id,author_id,gender,country,field\n1,a,M,X,Y\n", InputFormat::csv),
                               default_schema());
    auto b = paper_factor(corpus, build_graph(corpus), k("a"), p("1"), corpus.schema());
    CHECK(b.paper_factor == 0.0);
    for (const auto& f : b.per_feature) CHECK(f.value == 0.0);
  }
}

TEST_CASE("community index", "[metrics]") {
  auto t6 = demo_corpus("table6.csv", "schema_table6.json");
  auto g6 = build_graph(t6);
  CHECK(community_index(t6, g6, k("adam"), t6.schema()).c_index == Approx(27.55).margin(0.02));
  auto david = community_index(t6, g6, k("david"), t6.schema());
  CHECK(david.publication_count == 1);
  CHECK(david.c_index == Approx(18.32).margin(0.02));
  CHECK_FALSE(david.h_index.has_value());
  CHECK_THROWS_AS(community_index(t6, g6, k("nobody"), t6.schema()), NotFoundError);

  auto t7 = demo_corpus("table7.csv", "schema_table7.json");
  auto robert = community_index(t7, build_graph(t7), k("robert"), t7.schema());
  CHECK(robert.c_index == Approx(28.37).margin(0.005));
  REQUIRE(robert.per_publication.size() == 3);
  CHECK(robert.per_publication[0].publication.str() == "246");  // pub_id order
  CHECK(robert.per_publication[2].publication.str() == "789");
}

TEST_CASE("solo publications and the skip flag", "[metrics]") {
  auto recs = parse_records(
      "pub_id,author_id,gender,country,field\n"
      "1,a,M,X,Y\n"
      "2,a,M,X,Y\n2,b,F,Z,W\n"
      "3,c,F,Z,W\n",
      InputFormat::csv);
  auto schema = default_schema();
  auto corpus = build_corpus(recs, schema);
  auto g = build_graph(corpus);

  auto with = community_index(corpus, g, k("a"), schema);
  CHECK(with.publication_count == 2);
  CHECK(with.c_index == Approx(with.per_publication[1].paper_factor / 2));

  schema.include_solo_publications = false;
  auto without = community_index(corpus, g, k("a"), schema);
  CHECK(without.publication_count == 1);
  CHECK(without.c_index == with.per_publication[1].paper_factor);

  auto only_solo = community_index(corpus, g, k("c"), schema);
  CHECK(only_solo.publication_count == 0);
  CHECK(only_solo.c_index == 0.0);
}

TEST_CASE("h-index", "[metrics][hindex]") {
  CHECK(h_index(std::vector<std::uint64_t>{}) == 0);
  CHECK(h_index(std::vector<std::uint64_t>{10, 10, 10}) == 3);
  CHECK(h_index(std::vector<std::uint64_t>{0, 0}) == 0);
  CHECK(h_index(std::vector<std::uint64_t>{3, 0, 6, 1, 5}) == 3);

  auto corpus = build_corpus(
      parse_records("pub_id,author_id,citations\n1,a,5\n2,a,3\n3,a,1\n3,b,1\n4,b,\n", InputFormat::csv),
      default_schema());
  auto g = build_graph(corpus);
  CHECK(community_index(corpus, g, k("a"), corpus.schema()).h_index == 2u);
  CHECK_FALSE(community_index(corpus, g, k("b"), corpus.schema()).h_index.has_value());
}

TEST_CASE("compute_all ranks by c-index then key", "[metrics]") {
  auto t6 = demo_corpus("table6.csv", "schema_table6.json");
  auto ranked = compute_all(t6, t6.schema());
  REQUIRE(ranked.size() == 6);
  CHECK(ranked.front().author_key.str() == "maria");
  CHECK(ranked.front().c_index == Approx(30.89).margin(0.02));
  // adam and emily tie exactly
  CHECK(ranked[1].author_key.str() == "adam");
  CHECK(ranked[2].author_key.str() == "emily");
  CHECK(ranked[1].c_index == ranked[2].c_index);

  auto t7 = demo_corpus("table7.csv", "schema_table7.json");
  auto r7 = compute_all(t7, t7.schema(), 4);
  CHECK(r7.front().author_key.str() == "maria");
  CHECK(r7.front().c_index == Approx(33.49).margin(0.05));
  // among the table's six authors, david and sophia tie for last
  const std::set<std::string> table_authors{"adam", "david", "emily", "maria", "robert", "sophia"};
  std::vector<std::string> order;
  for (const auto& s : r7)
    if (table_authors.count(s.author_key.str())) order.push_back(s.author_key.str());
  CHECK(order == std::vector<std::string>{"maria", "adam", "emily", "robert", "david", "sophia"});

  Corpus empty = build_corpus({}, default_schema());
  CHECK(compute_all(empty, default_schema()).empty());
}

TEST_CASE("factor bounds and algebraic properties", "[metrics][property]") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> np(1, 10);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = np(rng);

    // binary bounds with delta = 0, w = 1
    const int same = std::uniform_int_distribution<int>(0, n)(rng);
    std::vector<std::pair<FeatureValue, double>> others;
    for (int i = 0; i < n; ++i) others.push_back({i < same ? "M" : "F", 1.0});
    double f = binary_factor(context("g", "M", others), binary("g"));
    CHECK(f >= n / (n + 1.0) - 1e-12);
    CHECK(f <= n + 1e-12);
    if (same == n) CHECK(f == Approx(n / (n + 1.0)));
    if (same == 0) CHECK(f == n);

    // swap monotonicity: turning one same-valued coauthor different raises the factor
    if (same > 0) {
      std::vector<std::pair<FeatureValue, double>> bonuses;
      for (int i = 0; i < n; ++i) bonuses.push_back({i < same ? "M" : "F", rng() % 2 ? 1.8 : 1.0});
      double before = binary_factor(context("g", "M", bonuses), binary("g"));
      bonuses[0].first = "F";
      double after = binary_factor(context("g", "M", bonuses), binary("g"));
      CHECK(after > before);
    }

    // all-distinct categorical: N_p * breadth
    std::vector<std::pair<FeatureValue, double>> distinct;
    for (int i = 0; i < n; ++i) distinct.push_back({"K" + std::to_string(i), 1.0});
    CHECK(categorical_factor(context("c", "ref", distinct), categorical("c")) == Approx(n * (n + 1.0)));

    // base weight scales only its own factor
    const double scale = std::uniform_real_distribution<double>(0.1, 10.0)(rng);
    auto ctx = context("c", "K0", distinct);
    CHECK(categorical_factor(ctx, categorical("c", scale)) == Approx(scale * categorical_factor(ctx, categorical("c"))).epsilon(1e-12));
  }
}

TEST_CASE("random corpora: oracle, delta-zero reduction, permutation invariance", "[metrics][property]") {
  std::mt19937_64 rng(987654321);
  for (int trial = 0; trial < 300; ++trial) {
    const double delta = trial % 2 ? 0.8 : 0.0;
    auto records = cindex::testing::random_records(rng);
    auto schema = cindex::testing::random_schema(rng, delta);
    auto corpus = build_corpus(records, schema);
    auto g = build_graph(corpus);
    auto scores = compute_all(corpus, g, schema);

    for (const auto& s : scores) {
      CHECK(s.c_index >= 0.0);
      CHECK(close(s.c_index, oracle::naive_community_index(corpus, s.author_key.str(), schema), 1e-9));
      for (const auto& b : s.per_publication) {
        auto o = oracle::naive_paper_factor(corpus, s.author_key.str(), b.publication.str(), schema);
        CHECK(close(b.paper_factor, o.paper_factor, 1e-9));
        double sum = 0.0;
        for (const auto& f : b.per_feature) {
          CHECK(f.value >= 0.0);
          CHECK(close(f.value, o.per_feature.at(f.feature), 1e-9));
          sum += f.value;
        }
        CHECK(sum == b.paper_factor);
      }
      if (delta == 0.0)
        CHECK(close(s.c_index, cindex::testing::plain_community_index(corpus, s.author_key, schema), 1e-12));
    }

    // row shuffles change nothing, bit for bit
    auto shuffled = build_corpus(cindex::testing::shuffled(records, rng), schema);
    auto again = compute_all(shuffled, schema, 3);
    REQUIRE(again.size() == scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
      CHECK(again[i].author_key == scores[i].author_key);
      CHECK(again[i].c_index == scores[i].c_index);
      REQUIRE(again[i].per_publication.size() == scores[i].per_publication.size());
      for (std::size_t j = 0; j < scores[i].per_publication.size(); ++j)
        CHECK(again[i].per_publication[j].paper_factor == scores[i].per_publication[j].paper_factor);
    }
  }
}

TEST_CASE("argmax is invariant to scaling every base weight", "[metrics][property]") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    auto records = cindex::testing::random_records(rng);
    auto schema = cindex::testing::random_schema(rng, 0.8);
    auto corpus = build_corpus(records, schema);
    auto base = compute_all(corpus, schema);
    auto scaled_schema = schema;
    for (auto& f : scaled_schema.features) f.base_weight *= 4.0;  // power of two keeps ties exact
    auto scaled = compute_all(corpus, scaled_schema);
    REQUIRE(!base.empty());
    CHECK(base.front().author_key == scaled.front().author_key);
    CHECK(scaled.front().c_index == Approx(4.0 * base.front().c_index));
  }
}
