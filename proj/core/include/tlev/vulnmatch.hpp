#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlev/resolver.hpp"
#include "tlev/semver.hpp"
#include "tlev/timestamp.hpp"

namespace tlev::vulnmatch {

enum class Severity { Low = 0, Medium = 1, High = 2 };

std::string_view to_string(Severity severity);
/// Accepts exactly "low", "medium", "high" (any case). Throws DataError.
Severity parse_severity(std::string_view text);

struct Advisory {
  std::string id;
  std::string package;
  std::string affected_range;
  semver::RangeExpr range;
  Severity severity = Severity::Low;
  Timestamp published_at;
  std::string title;
};

/// CSV with header `id,package,affected_range,severity,published_at,title`.
/// Errors name the offending line.
std::vector<Advisory> parse_advisories_csv(std::string_view text);

/// JSON array of objects with the same six keys. Errors name the entry index.
std::vector<Advisory> parse_advisories_json(std::string_view text);

/// Dispatches on extension: `.json` or anything else as CSV. Throws
/// DataError for unreadable files, bad records and duplicate ids.
std::vector<Advisory> load_advisories(const std::filesystem::path& path);

/// Exact, case-sensitive package match and range satisfaction.
bool affects(const Advisory& advisory, std::string_view package, const semver::Version& version);

/// Advisories grouped by package for per-release lookup. Immutable once built.
class AdvisoryIndex {
public:
  AdvisoryIndex() = default;
  explicit AdvisoryIndex(std::vector<Advisory> advisories);

  [[nodiscard]] const std::vector<Advisory>& all() const noexcept { return advisories_; }

  /// Advisories affecting `package@version`, in snapshot order.
  [[nodiscard]] std::vector<const Advisory*> matching(std::string_view package,
                                                      const semver::Version& version) const;

private:
  std::vector<Advisory> advisories_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_package_;
};

struct MatchOptions {
  int depth_mode = 1;  // 1: own + direct; 2: also level-1 transitive
  /// Only count advisories published strictly before this instant.
  std::optional<Timestamp> published_before{};
};

struct VulnProfile {
  std::size_t own_count = 0;
  std::size_t dir_count = 0;
  std::size_t trans1_count = 0;  // always 0 in depth mode 1
  std::array<std::size_t, 3> by_severity{};  // indexed by Severity
  /// Distinct advisory ids across every counted source.
  std::size_t distinct_count = 0;
  bool is_vulnerable = false;

  [[nodiscard]] std::size_t total() const noexcept { return own_count + dir_count + trans1_count; }
};

/// Counts advisories hitting the root release and each resolved dependency
/// entry. An advisory hitting a package that appears in several entries is
/// counted once per entry; `distinct_count` reports the deduplicated figure.
VulnProfile vuln_profile(std::string_view package, const semver::Version& version,
                         const resolver::DependencySet& deps, const AdvisoryIndex& advisories,
                         const MatchOptions& options = {});

}  // namespace tlev::vulnmatch
