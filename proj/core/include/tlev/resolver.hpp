#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlev/corpus.hpp"
#include "tlev/semver.hpp"
#include "tlev/timestamp.hpp"

namespace tlev::resolver {

enum class Policy {
  /// Scan in publish order and keep the last satisfying version published
  /// at or before the as-of time.
  LatestPublished,
  /// Highest precedence satisfying version published at or before as-of.
  HighestSemver,
};

std::string_view to_string(Policy policy);
/// Accepts "latest-published" and "highest-semver".
Policy parse_policy(std::string_view text);

enum class Unresolved { UnknownPackage, NoSatisfyingVersion, UnsupportedSpec, InvalidSpec };

std::string_view to_string(Unresolved reason);

/// Either the chosen version record or the reason none was chosen.
struct Resolution {
  const corpus::VersionRecord* record = nullptr;
  Unresolved reason = Unresolved::NoSatisfyingVersion;

  [[nodiscard]] bool resolved() const noexcept { return record != nullptr; }
};

Resolution resolve_spec(std::string_view name, std::string_view spec, Timestamp as_of,
                        const corpus::Registry& registry, Policy policy = Policy::LatestPublished);

struct ResolvedDependency {
  std::string name;
  std::string spec;
  std::optional<semver::Version> resolved;
  std::string resolved_text;  // registry key of the resolved version, empty if unresolved
  std::optional<Unresolved> unresolved;
  int depth = 1;
  std::string parent;  // depth-1 dependency name for depth-2 entries, empty otherwise
  /// Depth-2 entry whose (name, resolved version) already appeared earlier
  /// in the set. Kept, only flagged.
  bool duplicate = false;
  const corpus::VersionRecord* record = nullptr;
};

struct DependencySet {
  std::string root_package;
  std::string root_version;
  Timestamp as_of;
  std::vector<ResolvedDependency> entries;  // ordered by depth, parent, name

  [[nodiscard]] std::size_t unresolved_count() const;
};

/// Resolves a release's runtime specs (depth 1) and, when `levels` is 2,
/// the specs of each resolved depth-1 version (depth 2). Every lookup uses
/// the root release's publish time. Throws DomainError if levels is not 1
/// or 2; individual failures are recorded per entry.
DependencySet resolve_release(const corpus::VersionRecord& release, const corpus::Registry& registry,
                              int levels, Policy policy = Policy::LatestPublished);

}  // namespace tlev::resolver
