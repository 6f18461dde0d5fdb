#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cindex {

// Tagged string identifier. Keeps author keys and publication ids from mixing.
template <typename Tag>
struct Id {
  std::string value;

  Id() = default;
  explicit Id(std::string v) : value(std::move(v)) {}

  const std::string& str() const noexcept { return value; }
  bool empty() const noexcept { return value.empty(); }

  friend auto operator<=>(const Id&, const Id&) = default;
  friend bool operator==(const Id&, const Id&) = default;
};

using AuthorKey = Id<struct AuthorKeyTag>;
using PubId = Id<struct PubIdTag>;

using FeatureValue = std::optional<std::string>;

enum class ErrorKind {
  parse,
  schema,
  validation,
  usage,
  not_found,
  io,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse error";
    case ErrorKind::schema: return "schema error";
    case ErrorKind::validation: return "validation error";
    case ErrorKind::usage: return "usage error";
    case ErrorKind::not_found: return "not found";
    case ErrorKind::io: return "I/O error";
  }
  return "error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  // unit is "line" for CSV input, "record" for JSON input
  ParseError(std::size_t line, const std::string& what, const char* unit = "line")
      : Error(ErrorKind::parse, std::string(unit) + " " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what) : Error(ErrorKind::schema, what) {}
};

// Carries every problem found while building a corpus, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> diagnostics)
      : Error(ErrorKind::validation, join(diagnostics)), diagnostics_(std::move(diagnostics)) {}
  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

 private:
  static std::string join(const std::vector<std::string>& lines) {
    std::string out;
    for (const auto& l : lines) {
      if (!out.empty()) out += '\n';
      out += l;
    }
    return out;
  }
  std::vector<std::string> diagnostics_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::usage, what) {}
};

class NotFoundError : public Error {
 public:
  explicit NotFoundError(const std::string& what) : Error(ErrorKind::not_found, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::io, what) {}
};

}  // namespace cindex

template <typename Tag>
struct std::hash<cindex::Id<Tag>> {
  std::size_t operator()(const cindex::Id<Tag>& id) const noexcept {
    return std::hash<std::string>{}(id.value);
  }
};
