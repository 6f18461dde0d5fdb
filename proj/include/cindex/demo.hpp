#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace cindex::demo {

// Worked-example fixtures. Tables 1, 3 and 5 share one publication; Table 4 swaps
// Joshua's country. Table 2 holds every gender composition of a 4-author paper as
// its own publication.

inline constexpr std::string_view table1_csv =
    "pub_id,first_name,last_name,gender,country,country_code\n"
    "123,Omar,Hassan,M,Egypt,EG\n"
    "123,Daniel,Young,M,United States,US\n"
    "123,Joshua,Carter,M,Italy,IT\n"
    "123,Anna,Nguyen,F,United States,US\n";

inline constexpr std::string_view table4_csv =
    "pub_id,first_name,last_name,gender,country,country_code\n"
    "123,Omar,Hassan,M,Egypt,EG\n"
    "123,Daniel,Young,M,United States,US\n"
    "123,Joshua,Carter,M,United States,US\n"
    "123,Anna,Nguyen,F,United States,US\n";

inline constexpr std::string_view table2_csv =
    "pub_id,author_id,gender\n"
    "4m0f,4m0f-1,M\n4m0f,4m0f-2,M\n4m0f,4m0f-3,M\n4m0f,4m0f-4,M\n"
    "3m1f,3m1f-1,M\n3m1f,3m1f-2,M\n3m1f,3m1f-3,M\n3m1f,3m1f-4,F\n"
    "2m2f,2m2f-1,M\n2m2f,2m2f-2,M\n2m2f,2m2f-3,F\n2m2f,2m2f-4,F\n"
    "1m3f,1m3f-1,M\n1m3f,1m3f-2,F\n1m3f,1m3f-3,F\n1m3f,1m3f-4,F\n"
    "0m4f,0m4f-1,F\n0m4f,0m4f-2,F\n0m4f,0m4f-3,F\n0m4f,0m4f-4,F\n";

inline constexpr std::string_view table6_csv =
    "pub_id,author_id,first_name,country,gender,field\n"
    "246,adam,Adam,Italy,M,Health\n"
    "246,david,David,US,M,Health\n"
    "246,emily,Emily,Cuba,F,CS\n"
    "246,maria,Maria,Mexico,F,SS\n"
    "246,robert,Robert,US,M,Biology\n"
    "246,sophia,Sophia,US,F,CS\n"
    "789,adam,Adam,Italy,M,Health\n"
    "789,emily,Emily,Cuba,F,CS\n"
    "789,maria,Maria,Mexico,F,SS\n"
    "789,robert,Robert,US,M,Biology\n"
    "369,adam,Adam,Italy,M,Health\n"
    "369,emily,Emily,Cuba,F,CS\n"
    "369,maria,Maria,Mexico,F,SS\n"
    "369,robert,Robert,US,M,Biology\n";

// Pub 111 lists only Maria in the source table; her four coauthors are a
// reconstruction that reproduces the listed factors (21.6, 1.89, 4.7).
inline constexpr std::string_view table7_csv =
    "pub_id,author_id,first_name,country,gender,field,source\n"
    "246,adam,Adam,Italy,M,Health,table\n"
    "246,emily,Emily,Cuba,F,Computer Sci,table\n"
    "246,maria,Maria,Mexico,F,Social Sci,table\n"
    "246,robert,Robert,United States,M,Engineering,table\n"
    "789,adam,Adam,Italy,M,Health,table\n"
    "789,david,David,United States,M,Health,table\n"
    "789,emily,Emily,Cuba,F,Computer Sci,table\n"
    "789,maria,Maria,Mexico,F,Social Sci,table\n"
    "789,robert,Robert,United States,M,Engineering,table\n"
    "789,sophia,Sophia,United States,F,Computer Sci,table\n"
    "369,adam,Adam,Italy,M,Health,table\n"
    "369,emily,Emily,Cuba,F,Computer Sci,table\n"
    "369,maria,Maria,Mexico,F,Social Sci,table\n"
    "369,robert,Robert,United States,M,Engineering,table\n"
    "111,maria,Maria,Mexico,F,Social Sci,table\n"
    "111,aisha,Aisha,Nigeria,F,Social Sci,reconstructed\n"
    "111,kenji,Kenji,Japan,M,Social Sci,reconstructed\n"
    "111,leila,Leila,Nigeria,F,Economics,reconstructed\n"
    "111,tomas,Tomas,Japan,M,Physics,reconstructed\n";

inline constexpr std::string_view schema_gender_json =
    R"({"features": [{"name": "gender", "kind": "binary"}], "delta": 0.0})"
    "\n";

inline constexpr std::string_view schema_country_json =
    R"({"features": [{"name": "country", "kind": "categorical"}], "delta": 0.0})"
    "\n";

inline constexpr std::string_view schema_country_weighted_json =
    R"({"features": [{"name": "country", "kind": "categorical", "category_weights": {"United States": 0.5}}], "delta": 0.0})"
    "\n";

inline constexpr std::string_view schema_table6_json =
    R"({"features": [{"name": "country", "kind": "categorical"}, {"name": "gender", "kind": "binary"}, {"name": "field", "kind": "categorical"}], "delta": 0.0})"
    "\n";

inline constexpr std::string_view schema_table7_json =
    R"({"features": [{"name": "country", "kind": "categorical"}, {"name": "gender", "kind": "binary"}, {"name": "field", "kind": "categorical"}], "delta": 0.8})"
    "\n";

struct Fixture {
  std::string_view file;
  std::string_view content;
};

inline std::vector<Fixture> fixtures() {
  return {
      {"table1.csv", table1_csv},
      {"table2.csv", table2_csv},
      {"table4.csv", table4_csv},
      {"table6.csv", table6_csv},
      {"table7.csv", table7_csv},
      {"schema_gender.json", schema_gender_json},
      {"schema_country.json", schema_country_json},
      {"schema_country_weighted.json", schema_country_weighted_json},
      {"schema_table6.json", schema_table6_json},
      {"schema_table7.json", schema_table7_json},
  };
}

inline std::string_view fixture(std::string_view file) {
  for (const auto& f : fixtures())
    if (f.file == file) return f.content;
  return {};
}

// quantity is a feature name, "paper_factor" (needs pub) or "c_index".
struct Expected {
  std::string table;
  std::string data;
  std::string schema;
  std::optional<double> delta_override;
  std::string author;
  std::string pub;
  std::string quantity;
  double value;
  double tolerance;
};

inline std::vector<Expected> expected_values() {
  std::vector<Expected> out;

  // Table 1: gender factor on the 4-author paper.
  for (auto [author, v] : {std::pair{"omar|hassan", 1.0}, {"daniel|young", 1.0}, {"joshua|carter", 1.0},
                           {"anna|nguyen", 3.0}})
    out.push_back({"1", "table1.csv", "schema_gender.json", {}, author, "123", "gender", v, 0.0});

  // Table 2: every composition; N/A cells have no author and are absent.
  for (auto [pub, author, v] :
       {std::tuple{"4m0f", "4m0f-1", 0.75}, {"3m1f", "3m1f-1", 1.0}, {"3m1f", "3m1f-4", 3.0},
        {"2m2f", "2m2f-1", 1.5}, {"2m2f", "2m2f-3", 1.5}, {"1m3f", "1m3f-1", 3.0}, {"1m3f", "1m3f-2", 1.0},
        {"0m4f", "0m4f-1", 0.75}})
    out.push_back({"2", "table2.csv", "schema_gender.json", {}, author, pub, "gender", v, 0.0});

  const std::pair<const char*, double> t3[] = {
      {"omar|hassan", 9.0}, {"daniel|young", 4.5}, {"joshua|carter", 9.0}, {"anna|nguyen", 4.5}};
  for (auto [author, v] : t3)
    out.push_back({"3", "table1.csv", "schema_country.json", {}, author, "123", "country", v, 0.0});
  const std::pair<const char*, double> t4[] = {
      {"omar|hassan", 6.0}, {"daniel|young", 2.0}, {"joshua|carter", 2.0}, {"anna|nguyen", 2.0}};
  for (auto [author, v] : t4)
    out.push_back({"4", "table4.csv", "schema_country.json", {}, author, "123", "country", v, 0.0});
  const std::pair<const char*, double> t5[] = {
      {"omar|hassan", 9.0}, {"daniel|young", 2.25}, {"joshua|carter", 9.0}, {"anna|nguyen", 2.25}};
  for (auto [author, v] : t5)
    out.push_back({"5", "table1.csv", "schema_country_weighted.json", {}, author, "123", "country", v, 0.0});

  // Table 6: values as printed (truncated to 2 decimals in places).
  struct Row {
    const char* pub;
    const char* author;
    double country, gender, field, paper;
  };
  const Row t6[] = {
      {"246", "adam", 20, 1.66, 10, 31.66},     {"789", "adam", 12, 1.5, 12, 25.5},
      {"369", "adam", 12, 1.5, 12, 25.5},       {"246", "david", 6.66, 1.66, 10, 18.32},
      {"246", "emily", 20, 1.66, 10, 31.66},    {"789", "emily", 12, 1.5, 12, 25.5},
      {"369", "emily", 12, 1.5, 12, 25.5},      {"246", "maria", 20, 1.66, 20, 41.66},
      {"789", "maria", 12, 1.5, 12, 25.5},      {"369", "maria", 12, 1.5, 12, 25.5},
      {"246", "robert", 6.66, 1.66, 20, 28.32}, {"789", "robert", 12, 1.5, 12, 25.5},
      {"369", "robert", 12, 1.5, 12, 25.5},     {"246", "sophia", 6.66, 1.66, 10, 18.32},
  };
  for (const auto& r : t6) {
    out.push_back({"6", "table6.csv", "schema_table6.json", {}, r.author, r.pub, "country", r.country, 0.02});
    out.push_back({"6", "table6.csv", "schema_table6.json", {}, r.author, r.pub, "gender", r.gender, 0.02});
    out.push_back({"6", "table6.csv", "schema_table6.json", {}, r.author, r.pub, "field", r.field, 0.02});
    out.push_back({"6", "table6.csv", "schema_table6.json", {}, r.author, r.pub, "paper_factor", r.paper, 0.02});
  }
  for (auto [author, v] : {std::pair{"adam", 27.55}, {"david", 18.32}, {"emily", 27.55}, {"maria", 30.89},
                           {"robert", 26.44}, {"sophia", 18.32}})
    out.push_back({"6", "table6.csv", "schema_table6.json", {}, author, "", "c_index", v, 0.02});

  // Table 7 with the 80% novelty bonus.
  const Row t7[] = {
      {"246", "adam", 12, 1.5, 12, 25.5},        {"789", "adam", 26.4, 1.96, 9.43, 37.79},
      {"369", "adam", 12, 1.5, 12, 25.5},        {"789", "david", 7.83, 2.37, 12.86, 23.05},
      {"246", "emily", 12, 1.5, 12, 25.5},       {"789", "emily", 26.4, 1.96, 9.43, 37.79},
      {"369", "emily", 12, 1.5, 12, 25.5},       {"246", "maria", 12, 1.5, 12, 25.5},
      {"789", "maria", 26.4, 1.96, 26.4, 54.76}, {"369", "maria", 12, 1.5, 12, 25.5},
      {"111", "maria", 21.6, 1.89, 4.7, 28.19},  {"246", "robert", 12, 1.5, 12, 25.5},
      {"789", "robert", 5.74, 1.96, 26.4, 34.1}, {"369", "robert", 12, 1.5, 12, 25.5},
      {"789", "sophia", 7.83, 2.37, 12.86, 23.05},
  };
  for (const auto& r : t7) {
    out.push_back({"7", "table7.csv", "schema_table7.json", {}, r.author, r.pub, "country", r.country, 0.05});
    out.push_back({"7", "table7.csv", "schema_table7.json", {}, r.author, r.pub, "gender", r.gender, 0.05});
    out.push_back({"7", "table7.csv", "schema_table7.json", {}, r.author, r.pub, "field", r.field, 0.05});
    out.push_back({"7", "table7.csv", "schema_table7.json", {}, r.author, r.pub, "paper_factor", r.paper, 0.05});
  }
  for (auto [author, v] : {std::pair{"adam", 29.6}, {"david", 23.05}, {"emily", 29.6}, {"maria", 33.49},
                           {"robert", 28.37}, {"sophia", 23.05}})
    out.push_back({"7", "table7.csv", "schema_table7.json", {}, author, "", "c_index", v, 0.05});
  // Table 7's pre-bonus c-index column: same data, delta forced to 0.
  for (auto [author, v] : {std::pair{"adam", 27.56}, {"david", 18.33}, {"emily", 27.56}, {"maria", 27.5},
                           {"robert", 26.44}, {"sophia", 18.33}})
    out.push_back({"7", "table7.csv", "schema_table7.json", 0.0, author, "", "c_index", v, 0.05});

  return out;
}

inline std::string expected_json() {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& e : expected_values()) {
    nlohmann::ordered_json j;
    j["table"] = e.table;
    j["data"] = e.data;
    j["schema"] = e.schema;
    j["delta"] = e.delta_override ? nlohmann::ordered_json(*e.delta_override) : nlohmann::ordered_json();
    j["author"] = e.author;
    j["pub"] = e.pub.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(e.pub);
    j["quantity"] = e.quantity;
    j["expected"] = e.value;
    j["tolerance"] = e.tolerance;
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace cindex::demo
