#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tlev/corpus.hpp"
#include "tlev/resolver.hpp"

namespace tlev::sizer {

using Lines = std::uint64_t;

/// Test code by the directory and file-name conventions of JavaScript
/// packages. `relative_path` uses '/' (or '\') separators and is matched
/// case-insensitively.
bool is_test_path(std::string_view relative_path);

/// .js, .mjs and .cjs files.
bool is_javascript_file(const std::filesystem::path& path);

struct FileCount {
  Lines loc = 0;
  std::size_t longest_line = 0;  // characters, before stripping
};

/// Counts lines that keep at least one non-whitespace character once `//`
/// and `/* */` comments are removed. Quotes and template literals shield
/// comment markers. Regex literals are not lexed.
FileCount count_source_lines(std::string_view content);

struct CountOptions {
  std::vector<std::string> exclude_globs;  // fnmatch patterns on the relative path
  std::size_t long_line_threshold = 5000;
};

struct TreeCount {
  Lines loc = 0;
  std::size_t files_counted = 0;
  std::vector<std::string> warnings;
  /// Counted files with a line longer than the threshold (likely minified).
  std::vector<std::string> long_line_files;
};

/// Relative paths of every file the counter would read, sorted.
std::vector<std::filesystem::path> list_countable_files(const std::filesystem::path& root,
                                                        const CountOptions& options = {});

/// Counts exactly the listed files (relative to `root`), in the given order.
TreeCount count_listed_files(const std::filesystem::path& root,
                             std::span<const std::filesystem::path> files,
                             const CountOptions& options = {});

/// JavaScript LOC of a source tree, excluding tests and node_modules.
/// Throws DataError when `root` is not a directory.
TreeCount count_js_loc(const std::filesystem::path& root, const CountOptions& options = {});

struct DependencyKey {
  std::string name;
  std::string version;
  friend auto operator<=>(const DependencyKey&, const DependencyKey&) = default;
};

struct SizeProfile {
  Lines l_own = 0;
  Lines l_dir = 0;
  Lines l_trans1 = 0;
  /// l_trans1 without depth-2 entries flagged duplicate.
  Lines l_trans1_dedup = 0;
  std::size_t files_counted = 0;  // root tree only
  /// LOC of each distinct sized dependency version.
  std::map<DependencyKey, Lines> per_dependency;
  std::size_t unresolved = 0;
  std::vector<std::string> sizing_gaps;  // "name@version" with no source tree
  bool own_sized = false;                // false when the root tree was missing
  bool long_lines = false;               // any counted file over the threshold
};

/// Thread-safe memo of tree counts keyed by package and version.
class SourceSizer {
public:
  explicit SourceSizer(CountOptions options = {}) : options_(std::move(options)) {}

  /// Count for the release's source tree, or nullopt when it has none.
  std::optional<TreeCount> size_of(const corpus::VersionRecord& release);

private:
  CountOptions options_;
  std::mutex mutex_;
  std::map<DependencyKey, TreeCount> cache_;
};

/// Sums own, depth-1 and depth-2 sizes for one release. Unresolved entries
/// and entries without a source tree contribute zero and are tallied.
SizeProfile size_release(const corpus::VersionRecord& release, const resolver::DependencySet& deps,
                         SourceSizer& sizer);

}  // namespace tlev::sizer
