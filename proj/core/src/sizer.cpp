#include "tlev/sizer.hpp"

#include <fmt/core.h>
#include <fnmatch.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "tlev/error.hpp"

namespace tlev::sizer {
namespace fs = std::filesystem;

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

constexpr std::array<std::string_view, 6> kTestDirs = {"test", "tests", "testing", "__test__", "__tests__", "spec"};
constexpr std::array<std::string_view, 3> kJsExtensions = {".js", ".mjs", ".cjs"};

bool is_test_file_name(std::string_view name) {
  for (auto ext : kJsExtensions) {
    if (!name.ends_with(ext)) {
      continue;
    }
    const std::string_view stem = name.substr(0, name.size() - ext.size());
    if (stem == "test" || stem == "tests" || stem == "testing" || stem.starts_with("test-") ||
        stem.ends_with("-test") || stem.ends_with(".spec")) {
      return true;
    }
  }
  return false;
}

bool glob_excluded(const std::string& relative, const CountOptions& options) {
  return std::any_of(options.exclude_globs.begin(), options.exclude_globs.end(),
                     [&](const std::string& g) { return ::fnmatch(g.c_str(), relative.c_str(), 0) == 0; });
}

enum class State { Code, LineComment, BlockComment, SingleQuote, DoubleQuote, Template };

}  // namespace

bool is_test_path(std::string_view relative_path) {
  const std::string path = lowercase(relative_path);
  std::size_t start = 0;
  std::string_view last;
  while (start <= path.size()) {
    std::size_t end = path.find_first_of("/\\", start);
    if (end == std::string::npos) {
      end = path.size();
    }
    const std::string_view segment = std::string_view(path).substr(start, end - start);
    if (std::find(kTestDirs.begin(), kTestDirs.end(), segment) != kTestDirs.end()) {
      return true;
    }
    if (!segment.empty()) {
      last = segment;
    }
    start = end + 1;
  }
  return is_test_file_name(last);
}

bool is_javascript_file(const fs::path& path) {
  const std::string ext = lowercase(path.extension().string());
  return std::find(kJsExtensions.begin(), kJsExtensions.end(), ext) != kJsExtensions.end();
}

FileCount count_source_lines(std::string_view content) {
  FileCount out;
  State state = State::Code;
  bool line_has_code = false;
  bool continued = false;  // backslash-newline inside a quoted string
  std::size_t line_length = 0;

  auto end_line = [&] {
    if (line_has_code) {
      ++out.loc;
    }
    out.longest_line = std::max(out.longest_line, line_length);
    line_has_code = false;
    line_length = 0;
  };

  for (std::size_t i = 0; i < content.size(); ++i) {
    const char c = content[i];
    const char next = i + 1 < content.size() ? content[i + 1] : '\0';
    if (c == '\n') {
      end_line();
      const bool quoted = state == State::SingleQuote || state == State::DoubleQuote;
      if (state == State::LineComment || (quoted && !continued)) {
        state = State::Code;  // unterminated string literals end at the newline
      }
      continued = false;
      continue;
    }
    ++line_length;
    const bool blank = c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';

    switch (state) {
      case State::Code:
        if (c == '/' && next == '/') {
          state = State::LineComment;
          ++i;
          ++line_length;
        } else if (c == '/' && next == '*') {
          state = State::BlockComment;
          ++i;
          ++line_length;
        } else if (c == '\'') {
          state = State::SingleQuote;
          line_has_code = true;
        } else if (c == '"') {
          state = State::DoubleQuote;
          line_has_code = true;
        } else if (c == '`') {
          state = State::Template;
          line_has_code = true;
        } else if (!blank) {
          line_has_code = true;
        }
        break;
      case State::LineComment:
        break;
      case State::BlockComment:
        if (c == '*' && next == '/') {
          state = State::Code;
          ++i;
          ++line_length;
        }
        break;
      case State::SingleQuote:
      case State::DoubleQuote:
      case State::Template: {
        if (!blank) {
          line_has_code = true;
        }
        const char quote = state == State::SingleQuote ? '\'' : state == State::DoubleQuote ? '"' : '`';
        if (c == '\\' && next == '\n') {
          continued = true;
        } else if (c == '\\') {
          ++i;
          ++line_length;
        } else if (c == quote) {
          state = State::Code;
        }
        break;
      }
    }
  }
  if (line_length > 0 || line_has_code) {
    end_line();
  }
  return out;
}

std::vector<fs::path> list_countable_files(const fs::path& root, const CountOptions& options) {
  if (!fs::is_directory(root)) {
    throw DataError(fmt::format("source tree '{}' does not exist", root.string()));
  }
  std::vector<fs::path> files;
  std::error_code ec;
  fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
  if (ec) {
    throw DataError(fmt::format("cannot walk '{}': {}", root.string(), ec.message()));
  }
  for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) {
      break;
    }
    const fs::directory_entry& entry = *it;
    if (entry.is_directory()) {
      if (entry.path().filename() == "node_modules") {
        it.disable_recursion_pending();
      }
      continue;
    }
    if (!entry.is_regular_file() || !is_javascript_file(entry.path())) {
      continue;
    }
    const fs::path relative = entry.path().lexically_relative(root);
    const std::string rel = relative.generic_string();
    if (is_test_path(rel) || glob_excluded(rel, options)) {
      continue;
    }
    files.push_back(relative);
  }
  std::sort(files.begin(), files.end());
  return files;
}

TreeCount count_listed_files(const fs::path& root, std::span<const fs::path> files,
                             const CountOptions& options) {
  TreeCount out;
  for (const auto& relative : files) {
    std::ifstream in(root / relative, std::ios::binary);
    if (!in) {
      out.warnings.push_back(fmt::format("unreadable file '{}'", (root / relative).string()));
      continue;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const FileCount fc = count_source_lines(buffer.str());
    out.loc += fc.loc;
    ++out.files_counted;
    if (fc.longest_line > options.long_line_threshold) {
      out.long_line_files.push_back(relative.generic_string());
    }
  }
  std::sort(out.long_line_files.begin(), out.long_line_files.end());
  return out;
}

TreeCount count_js_loc(const fs::path& root, const CountOptions& options) {
  const auto files = list_countable_files(root, options);
  return count_listed_files(root, files, options);
}

std::optional<TreeCount> SourceSizer::size_of(const corpus::VersionRecord& release) {
  if (!release.source_root) {
    return std::nullopt;
  }
  DependencyKey key{release.package, release.version_text};
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) {
      return it->second;
    }
  }
  TreeCount count = count_js_loc(*release.source_root, options_);
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(std::move(key), std::move(count)).first->second;
}

SizeProfile size_release(const corpus::VersionRecord& release, const resolver::DependencySet& deps,
                         SourceSizer& sizer) {
  SizeProfile profile;
  if (auto own = sizer.size_of(release)) {
    profile.l_own = own->loc;
    profile.files_counted = own->files_counted;
    profile.long_lines = !own->long_line_files.empty();
    profile.own_sized = true;
  } else {
    profile.sizing_gaps.push_back(fmt::format("{}@{}", release.package, release.version_text));
  }

  for (const auto& entry : deps.entries) {
    if (entry.record == nullptr) {
      ++profile.unresolved;
      continue;
    }
    const auto count = sizer.size_of(*entry.record);
    if (!count) {
      profile.sizing_gaps.push_back(fmt::format("{}@{}", entry.name, entry.resolved_text));
      continue;
    }
    profile.per_dependency[{entry.name, entry.resolved_text}] = count->loc;
    if (entry.depth == 1) {
      profile.l_dir += count->loc;
    } else {
      profile.l_trans1 += count->loc;
      if (!entry.duplicate) {
        profile.l_trans1_dedup += count->loc;
      }
    }
  }
  return profile;
}

}  // namespace tlev::sizer
