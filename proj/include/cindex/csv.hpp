#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cindex/core.hpp"

namespace cindex::csv {

struct Row {
  std::size_t line = 0;  // 1-based physical line where the row starts
  std::vector<std::string> cells;
};

inline bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    char32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > s.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // overlong, surrogate, out of range
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF)
      return false;
    i += len;
  }
  return true;
}

// RFC-4180 reader: quoted fields, doubled quotes, CRLF or LF, embedded newlines.
// Blank lines are skipped.
inline std::vector<Row> read(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  if (!valid_utf8(text)) throw ParseError(1, "input is not valid UTF-8");

  std::vector<Row> rows;
  Row row;
  std::string cell;
  std::size_t line = 1;
  row.line = line;
  bool in_quotes = false;
  bool quoted_cell = false;
  bool row_has_content = false;

  auto end_cell = [&] {
    row.cells.push_back(std::move(cell));
    cell.clear();
    quoted_cell = false;
  };
  auto end_row = [&] {
    if (row_has_content || !row.cells.empty()) {
      end_cell();
      rows.push_back(std::move(row));
    }
    row = Row{};
    cell.clear();
    quoted_cell = false;
    row_has_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        cell += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!cell.empty() || quoted_cell)
          throw ParseError(line, "unexpected quote inside unquoted field");
        in_quotes = true;
        quoted_cell = true;
        row_has_content = true;
        break;
      case ',':
        end_cell();
        row_has_content = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        [[fallthrough]];
      case '\n':
        end_row();
        ++line;
        row.line = line;
        break;
      default:
        if (quoted_cell) throw ParseError(line, "characters after closing quote");
        cell += c;
        row_has_content = true;
    }
  }
  if (in_quotes) throw ParseError(row.line, "unterminated quoted field");
  end_row();
  return rows;
}

inline std::string escape(std::string_view cell) {
  bool needs_quotes = cell.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(cell);
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string format_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += escape(cells[i]);
  }
  out += '\n';
  return out;
}

}  // namespace cindex::csv
