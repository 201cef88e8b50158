#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tlev::csv {

/// One parsed record with the 1-based line it started on.
struct Record {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

/// RFC 4180 reader: comma separated, double-quoted fields may hold commas,
/// newlines and "" escapes. Blank lines are skipped. Throws DataError on an
/// unterminated quote.
std::vector<Record> parse(std::string_view text);

/// Quotes a field when it contains a comma, quote or line break.
std::string escape(std::string_view field);

/// Always-quoted rendering.
std::string quote(std::string_view field);

}  // namespace tlev::csv
