#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cindex/corpus.hpp"
#include "cindex/demo.hpp"
#include "cindex/graph.hpp"
#include "cindex/metrics.hpp"
#include "cindex/report.hpp"
#include "cindex/schema.hpp"

namespace cindex::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int internal = 1;
inline constexpr int validation = 2;
inline constexpr int io = 3;
inline constexpr int not_found = 4;
}  // namespace exit_code

struct Options {
  std::string input;
  std::string schema;  // empty: built-in default schema
  std::string output;  // empty: stdout
  std::string input_format = "auto";
  ReportFormat format = ReportFormat::csv;
  std::optional<double> delta;
  bool skip_solo = false;
  std::string author;
  std::string pub;
  unsigned threads = 1;
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::io: return exit_code::io;
    case ErrorKind::not_found: return exit_code::not_found;
    default: return exit_code::validation;
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed reading '" + path + "'");
  return text;
}

inline void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

inline InputFormat resolve_input_format(const Options& opts) {
  if (opts.input_format == "csv") return InputFormat::csv;
  if (opts.input_format == "json") return InputFormat::json;
  if (opts.input_format != "auto") throw UsageError("unknown input format '" + opts.input_format + "'");
  return std::filesystem::path(opts.input).extension() == ".json" ? InputFormat::json : InputFormat::csv;
}

// Schema file (or default) with command-line overrides applied.
inline SchemaConfig load_schema(const Options& opts) {
  SchemaConfig schema = opts.schema.empty() ? default_schema() : parse_schema(read_file(opts.schema));
  if (opts.delta) schema.delta = *opts.delta;
  if (opts.skip_solo) schema.include_solo_publications = false;
  validate(schema);
  return schema;
}

inline Corpus load_corpus(const Options& opts, const SchemaConfig& schema) {
  if (opts.input.empty()) throw UsageError("--input is required");
  return build_corpus(parse_records(read_file(opts.input), resolve_input_format(opts)), schema);
}

// Runs a command body, turning errors into diagnostics and exit codes.
inline int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    for (const auto& d : e.diagnostics()) err << "validation error: " << d << "\n";
    return exit_code::validation;
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::internal;
  }
}

inline void emit(const Options& opts, std::ostream& out, std::string_view text) {
  if (opts.output.empty())
    out << text;
  else
    write_file(opts.output, text);
}

inline int cmd_validate(const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SchemaConfig schema = load_schema(opts);
    Corpus corpus = load_corpus(opts, schema);
    for (const auto& f : schema.features)
      if (!corpus.feature_columns().count(f.name) && corpus.publication_count() > 0)
        err << "warning: declared feature '" << f.name << "' has no column in the input; its factors will be 0\n";
    out << "ok: " << corpus.publication_count() << (corpus.publication_count() == 1 ? " publication, " : " publications, ")
        << corpus.author_count() << (corpus.author_count() == 1 ? " author" : " authors") << "\n";
    return exit_code::ok;
  });
}

inline int cmd_compute(const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SchemaConfig schema = load_schema(opts);
    Corpus corpus = load_corpus(opts, schema);
    auto scores = compute_all(corpus, build_graph(corpus), schema, opts.threads);
    emit(opts, out, render_report(scores, schema, opts.format));
    if (!opts.output.empty()) out << display_table(scores);
    return exit_code::ok;
  });
}

// Exact key first, then a unique case/whitespace-insensitive display-name match.
inline AuthorKey resolve_author(const Corpus& corpus, const std::string& query) {
  AuthorKey exact(query);
  if (corpus.contains(exact)) return exact;
  const std::string wanted = detail::normalize_name(query);
  std::vector<AuthorKey> hits;
  for (const auto& [key, _] : corpus.author_index())
    if (detail::normalize_name(key.str()) == wanted || detail::normalize_name(corpus.display_name(key)) == wanted)
      hits.push_back(key);
  if (hits.size() == 1) return hits.front();
  if (hits.empty()) throw NotFoundError("unknown author '" + query + "'");
  std::string list;
  for (const auto& h : hits) list += " " + h.str();
  throw UsageError("author '" + query + "' is ambiguous; candidates:" + list);
}

inline int cmd_explain(const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.author.empty()) throw UsageError("--author is required");
    SchemaConfig schema = load_schema(opts);
    Corpus corpus = load_corpus(opts, schema);
    CollabGraph graph = build_graph(corpus);
    AuthorKey author = resolve_author(corpus, opts.author);
    out << "schema: delta " << display(schema.delta) << ", features";
    for (const auto& f : schema.features) out << " " << f.name << "(" << to_string(f.kind) << ")";
    out << "\n";
    if (opts.pub.empty()) {
      out << explain_score(community_index(corpus, graph, author, schema));
    } else {
      PubId pub(opts.pub);
      if (!author_publications(corpus, author).count(pub))
        throw NotFoundError("author '" + author.str() + "' has no publication '" + opts.pub + "'");
      out << "author " << author.str() << " (" << corpus.display_name(author) << ")\n";
      out << explain_breakdown(paper_factor(corpus, graph, author, pub, schema));
    }
    return exit_code::ok;
  });
}

inline int cmd_graph(const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SchemaConfig schema = load_schema(opts);
    Corpus corpus = load_corpus(opts, schema);
    emit(opts, out, graph_to_json(build_graph(corpus)).dump(2) + "\n");
    return exit_code::ok;
  });
}

inline int cmd_demo(const std::string& directory, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    namespace fs = std::filesystem;
    fs::path dir(directory.empty() ? "." : directory);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());
    for (const auto& f : demo::fixtures()) {
      write_file(dir / f.file, f.content);
      out << "wrote " << (dir / f.file).string() << "\n";
    }
    write_file(dir / "expected.json", demo::expected_json());
    out << "wrote " << (dir / "expected.json").string() << "\n";
    return exit_code::ok;
  });
}

}  // namespace cindex::cli
