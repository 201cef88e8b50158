#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace tlev {

using Timestamp = std::chrono::sys_seconds;

/// Parses ISO-8601 timestamps as found in npm registry `time` tables:
/// `YYYY-MM-DD`, `YYYY-MM-DDTHH:MM[:SS[.fff]](Z|±HH:MM)`. Fractional seconds
/// are truncated. Throws DataError on malformed input.
Timestamp parse_timestamp(std::string_view text);

/// Canonical `YYYY-MM-DDTHH:MM:SSZ` rendering.
std::string format_timestamp(Timestamp t);

/// Signed difference `later - earlier` in fractional days.
double days_between(Timestamp earlier, Timestamp later);

}  // namespace tlev
