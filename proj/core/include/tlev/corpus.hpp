#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlev/semver.hpp"
#include "tlev/timestamp.hpp"

namespace tlev::corpus {

struct VersionRecord {
  std::string package;
  std::string version_text;  // key as it appears in the registry document
  semver::Version version;
  Timestamp published_at;
  std::map<std::string, std::string> dependency_specs;  // runtime dependencies only
  std::optional<std::filesystem::path> source_root;
};

struct PackageRecord {
  std::string name;
  std::map<std::string, VersionRecord> versions;
  std::vector<std::string> warnings;  // skipped version keys and similar
};

/// Parses one npm-registry-shaped JSON document (`name`, `versions`, `time`).
/// Only `dependencies` is read from each version object. Unparseable
/// version keys are skipped with a warning; a version without a `time`
/// entry raises DataError naming it.
PackageRecord load_registry_doc(std::string_view json_text);

enum class ExclusionReason { Experimental, PrereleaseHash, Prerelease, Backport };

std::string_view to_string(ExclusionReason reason);

struct Exclusion {
  std::string version_text;
  ExclusionReason reason;
};

/// A package's releases in publish order (ties broken by precedence, then
/// by version text) plus everything filtered out along the way.
struct ReleaseTimeline {
  std::string package;
  std::vector<VersionRecord> releases;
  std::vector<Exclusion> exclusions;
};

ReleaseTimeline make_timeline(const PackageRecord& record);

struct ExperimentalFilterOptions {
  /// Drop every prerelease, not only experimental and commit-hash ones.
  bool exclude_all_prereleases = false;
};

/// True when the prerelease text names an experimental build
/// (case-insensitive "experimental").
bool is_experimental_prerelease(const semver::Version& v);

/// True when the prerelease is a single 7-40 character hex token, the shape
/// of a commit-hash build.
bool is_hash_prerelease(const semver::Version& v);

ReleaseTimeline filter_experimental(ReleaseTimeline timeline, const ExperimentalFilterOptions& options = {});

/// Drops every release published after a release of strictly higher
/// precedence. Expects `releases` in publish order.
ReleaseTimeline filter_backports(ReleaseTimeline timeline);

struct ReleasePair {
  VersionRecord previous;
  VersionRecord current;
  double interval_days = 0.0;
};

std::vector<ReleasePair> release_pairs(const ReleaseTimeline& timeline);

/// Read-only view over every package known to an analysis, keyed by name.
/// Holds the full, unfiltered version history the resolver scans.
class Registry {
public:
  Registry() = default;
  explicit Registry(std::vector<PackageRecord> packages);

  // Histories point into `packages_` nodes: movable, not copyable.
  Registry(const Registry&) = delete;
  Registry& operator=(const Registry&) = delete;
  Registry(Registry&&) noexcept = default;
  Registry& operator=(Registry&&) noexcept = default;

  /// Throws DataError when a package of the same name is already present.
  void add(PackageRecord package);

  [[nodiscard]] const PackageRecord* find(std::string_view name) const;

  /// Every version of `name` in publish order (same tie rule as timelines).
  /// Empty when the package is unknown.
  [[nodiscard]] const std::vector<const VersionRecord*>& history(std::string_view name) const;

  [[nodiscard]] const std::map<std::string, PackageRecord, std::less<>>& packages() const noexcept {
    return packages_;
  }

private:
  std::map<std::string, PackageRecord, std::less<>> packages_;
  std::map<std::string, std::vector<const VersionRecord*>, std::less<>> histories_;
};

/// A corpus directory: `<name>.json` registry documents at the top level
/// (scoped packages as `@scope/<name>.json`) and unpacked releases under
/// `sources/<name>/<version>/`.
struct Corpus {
  std::filesystem::path root;
  Registry registry;
  std::vector<std::string> warnings;

  [[nodiscard]] std::filesystem::path sources_dir() const { return root / "sources"; }
};

/// Loads every document under `root` and attaches source roots that exist.
/// Throws DataError for unreadable or invalid documents, duplicate package
/// names, or a missing directory.
Corpus load_corpus(const std::filesystem::path& root);

}  // namespace tlev::corpus
