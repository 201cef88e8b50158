#include "tlev/csv.hpp"

#include <fmt/core.h>

#include "tlev/error.hpp"

namespace tlev::csv {

std::vector<Record> parse(std::string_view text) {
  std::vector<Record> records;
  Record current;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t line = 1;
  std::size_t quote_line = 0;
  current.line = 1;

  auto finish_record = [&] {
    const bool blank = current.fields.empty() && field.empty() && !field_started;
    if (!blank) {
      current.fields.push_back(std::move(field));
      records.push_back(std::move(current));
    }
    current = Record{};
    field.clear();
    field_started = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') {
          ++line;
        }
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        field_started = true;
        quote_line = line;
        break;
      case ',':
        current.fields.push_back(std::move(field));
        field.clear();
        field_started = true;
        break;
      case '\r':
        break;
      case '\n':
        finish_record();
        ++line;
        current.line = line;
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (in_quotes) {
    throw DataError(fmt::format("unterminated quoted field starting on line {}", quote_line));
  }
  finish_record();
  return records;
}

std::string quote(std::string_view field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  return quote(field);
}

}  // namespace tlev::csv
