#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ustep/errors.hpp"

namespace ustep::eval {

/// One line of a labeled corpus: the message and its ground-truth group.
struct LabeledRecord {
  std::size_t line_id = 0;
  std::string content;
  std::string event_id;
  std::string event_template;
};

/// Minimal RFC 4180 reader: comma separated, double-quoted fields may hold
/// commas, line breaks and doubled quotes. Accepts LF or CRLF line endings.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // Reads the next record into `fields`. Returns false at end of input.
  bool next(std::vector<std::string>& fields) {
    fields.clear();
    int c = in_.get();
    if (c == std::char_traits<char>::eof()) return false;
    ++row_;
    std::string field;
    bool quoted = false;
    bool field_started_quoted = false;
    for (;; c = in_.get()) {
      if (c == std::char_traits<char>::eof()) {
        if (quoted) throw DatasetError("unterminated quoted field in row " + std::to_string(row_));
        fields.push_back(std::move(field));
        return true;
      }
      char ch = static_cast<char>(c);
      if (quoted) {
        if (ch == '"') {
          if (in_.peek() == '"') {
            in_.get();
            field.push_back('"');
          } else {
            quoted = false;
          }
        } else {
          field.push_back(ch);
        }
        continue;
      }
      if (ch == '"' && field.empty() && !field_started_quoted) {
        quoted = true;
        field_started_quoted = true;
      } else if (ch == ',') {
        fields.push_back(std::move(field));
        field.clear();
        field_started_quoted = false;
      } else if (ch == '\n') {
        fields.push_back(std::move(field));
        return true;
      } else if (ch == '\r' && in_.peek() == '\n') {
        // CR of a CRLF terminator
      } else {
        field.push_back(ch);
      }
    }
  }

  std::size_t row() const noexcept { return row_; }

 private:
  std::istream& in_;
  std::size_t row_ = 0;
};

namespace detail {

inline std::optional<std::size_t> find_column(const std::vector<std::string>& header,
                                              std::string_view name) {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) return std::nullopt;
  return static_cast<std::size_t>(it - header.begin());
}

inline std::size_t require_column(const std::vector<std::string>& header, std::string_view name) {
  auto col = find_column(header, name);
  if (!col) throw DatasetError("dataset is missing required column '" + std::string(name) + "'");
  return *col;
}

}  // namespace detail

/// Reads a loghub-style structured CSV. The header must name LineId, Content
/// and EventId; EventTemplate is optional and other columns are ignored.
/// LineId values must be exactly 1..n (in any order).
inline std::vector<LabeledRecord> parse_labeled_dataset(std::istream& in) {
  CsvReader reader(in);
  std::vector<std::string> header;
  if (!reader.next(header)) throw DatasetError("dataset is empty (no header row)");
  if (!header.empty() && header[0].starts_with("\xEF\xBB\xBF")) header[0].erase(0, 3);

  const std::size_t line_col = detail::require_column(header, "LineId");
  const std::size_t content_col = detail::require_column(header, "Content");
  const std::size_t event_col = detail::require_column(header, "EventId");
  const auto template_col = detail::find_column(header, "EventTemplate");

  std::vector<LabeledRecord> out;
  std::vector<std::string> row;
  while (reader.next(row)) {
    if (row.size() == 1 && row[0].empty()) continue;  // blank line
    if (row.size() != header.size()) {
      throw DatasetError("row " + std::to_string(reader.row()) + " has " +
                         std::to_string(row.size()) + " fields, header has " +
                         std::to_string(header.size()));
    }
    LabeledRecord rec;
    const std::string& id_text = row[line_col];
    auto [ptr, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), rec.line_id);
    if (ec != std::errc{} || ptr != id_text.data() + id_text.size()) {
      throw DatasetError("row " + std::to_string(reader.row()) + ": LineId '" + id_text +
                         "' is not an integer");
    }
    rec.content = std::move(row[content_col]);
    rec.event_id = std::move(row[event_col]);
    if (rec.event_id.empty()) {
      throw DatasetError("row " + std::to_string(reader.row()) + ": empty EventId");
    }
    if (template_col) rec.event_template = std::move(row[*template_col]);
    out.push_back(std::move(rec));
  }

  std::vector<bool> seen(out.size() + 1, false);
  for (const auto& r : out) {
    if (r.line_id < 1 || r.line_id > out.size() || seen[r.line_id]) {
      throw DatasetError("LineId values must be unique and cover 1.." + std::to_string(out.size()));
    }
    seen[r.line_id] = true;
  }
  return out;
}

inline std::vector<LabeledRecord> load_labeled_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open dataset: " + path);
  return parse_labeled_dataset(in);
}

/// Reads a plain log file, one message per line (trailing CR removed).
inline std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

inline std::vector<std::string> load_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input: " + path);
  return read_lines(in);
}

}  // namespace ustep::eval
