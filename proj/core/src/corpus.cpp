#include "tlev/corpus.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tlev/error.hpp"

namespace tlev::corpus {
namespace {

using nlohmann::json;

bool publish_order(const VersionRecord& a, const VersionRecord& b) {
  if (a.published_at != b.published_at) {
    return a.published_at < b.published_at;
  }
  if (const auto c = semver::compare(a.version, b.version); c != 0) {
    return c < 0;
  }
  return a.version_text < b.version_text;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DataError(fmt::format("cannot read '{}'", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

PackageRecord load_registry_doc(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DataError(fmt::format("registry document is not valid JSON: {}", e.what()));
  }
  if (!doc.is_object()) {
    throw DataError("registry document must be a JSON object");
  }
  PackageRecord record;
  if (!doc.contains("name") || !doc["name"].is_string() || doc["name"].get<std::string>().empty()) {
    throw DataError("registry document lacks a non-empty 'name'");
  }
  record.name = doc["name"].get<std::string>();

  const auto versions = doc.find("versions");
  if (versions == doc.end() || !versions->is_object()) {
    throw DataError(fmt::format("{}: registry document lacks a 'versions' object", record.name));
  }
  const auto time = doc.find("time");
  const bool has_time = time != doc.end() && time->is_object();

  for (const auto& [key, body] : versions->items()) {
    VersionRecord v;
    v.package = record.name;
    v.version_text = key;
    try {
      v.version = semver::parse_version(key);
    } catch (const ParseError& e) {
      record.warnings.push_back(fmt::format("{}: skipped version '{}': {}", record.name, key, e.what()));
      continue;
    }
    if (!has_time || !time->contains(key) || !(*time)[key].is_string()) {
      throw DataError(fmt::format("{}: no publish time for version '{}'", record.name, key));
    }
    v.published_at = parse_timestamp((*time)[key].get<std::string>());

    if (body.is_object()) {
      if (const auto deps = body.find("dependencies"); deps != body.end() && deps->is_object()) {
        for (const auto& [dep, spec] : deps->items()) {
          if (!spec.is_string()) {
            record.warnings.push_back(
                fmt::format("{}@{}: dependency '{}' has a non-string spec", record.name, key, dep));
            continue;
          }
          v.dependency_specs.emplace(dep, spec.get<std::string>());
        }
      }
    }
    record.versions.emplace(key, std::move(v));
  }
  return record;
}

std::string_view to_string(ExclusionReason reason) {
  switch (reason) {
    case ExclusionReason::Experimental:
      return "experimental";
    case ExclusionReason::PrereleaseHash:
      return "prerelease-hash";
    case ExclusionReason::Prerelease:
      return "prerelease";
    case ExclusionReason::Backport:
      return "backport";
  }
  return "unknown";
}

ReleaseTimeline make_timeline(const PackageRecord& record) {
  ReleaseTimeline t;
  t.package = record.name;
  t.releases.reserve(record.versions.size());
  for (const auto& [key, v] : record.versions) {
    t.releases.push_back(v);
  }
  std::sort(t.releases.begin(), t.releases.end(), publish_order);
  return t;
}

bool is_experimental_prerelease(const semver::Version& v) {
  std::string text = v.prerelease_text();
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return text.find("experimental") != std::string::npos;
}

bool is_hash_prerelease(const semver::Version& v) {
  if (v.prerelease.size() != 1) {
    return false;
  }
  const std::string& token = v.prerelease.front().text;
  return token.size() >= 7 && token.size() <= 40 &&
         std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isxdigit(c) != 0; });
}

ReleaseTimeline filter_experimental(ReleaseTimeline timeline, const ExperimentalFilterOptions& options) {
  std::vector<VersionRecord> kept;
  kept.reserve(timeline.releases.size());
  for (auto& r : timeline.releases) {
    if (!r.version.is_prerelease()) {
      kept.push_back(std::move(r));
    } else if (is_experimental_prerelease(r.version)) {
      timeline.exclusions.push_back({r.version_text, ExclusionReason::Experimental});
    } else if (is_hash_prerelease(r.version)) {
      timeline.exclusions.push_back({r.version_text, ExclusionReason::PrereleaseHash});
    } else if (options.exclude_all_prereleases) {
      timeline.exclusions.push_back({r.version_text, ExclusionReason::Prerelease});
    } else {
      kept.push_back(std::move(r));
    }
  }
  timeline.releases = std::move(kept);
  return timeline;
}

ReleaseTimeline filter_backports(ReleaseTimeline timeline) {
  std::vector<VersionRecord> kept;
  kept.reserve(timeline.releases.size());  // keeps `highest` valid
  const semver::Version* highest = nullptr;
  for (auto& r : timeline.releases) {
    if (highest != nullptr && semver::compare(r.version, *highest) < 0) {
      timeline.exclusions.push_back({r.version_text, ExclusionReason::Backport});
      continue;
    }
    kept.push_back(std::move(r));
    highest = &kept.back().version;
  }
  timeline.releases = std::move(kept);
  return timeline;
}

std::vector<ReleasePair> release_pairs(const ReleaseTimeline& timeline) {
  std::vector<ReleasePair> pairs;
  for (std::size_t i = 1; i < timeline.releases.size(); ++i) {
    const auto& prev = timeline.releases[i - 1];
    const auto& cur = timeline.releases[i];
    pairs.push_back({prev, cur, days_between(prev.published_at, cur.published_at)});
  }
  return pairs;
}

Registry::Registry(std::vector<PackageRecord> packages) {
  for (auto& p : packages) {
    add(std::move(p));
  }
}

void Registry::add(PackageRecord package) {
  const std::string name = package.name;
  if (packages_.contains(name)) {
    throw DataError(fmt::format("package '{}' added twice", name));
  }
  auto it = packages_.emplace(name, std::move(package)).first;
  std::vector<const VersionRecord*> order;
  order.reserve(it->second.versions.size());
  for (const auto& [key, v] : it->second.versions) {
    order.push_back(&v);
  }
  std::sort(order.begin(), order.end(),
            [](const VersionRecord* a, const VersionRecord* b) { return publish_order(*a, *b); });
  histories_.insert_or_assign(name, std::move(order));
}

const PackageRecord* Registry::find(std::string_view name) const {
  const auto it = packages_.find(name);
  return it == packages_.end() ? nullptr : &it->second;
}

const std::vector<const VersionRecord*>& Registry::history(std::string_view name) const {
  static const std::vector<const VersionRecord*> kEmpty;
  const auto it = histories_.find(name);
  return it == histories_.end() ? kEmpty : it->second;
}

Corpus load_corpus(const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root)) {
    throw DataError(fmt::format("corpus directory '{}' does not exist", root.string()));
  }
  std::vector<fs::path> documents;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      documents.push_back(entry.path());
    } else if (entry.is_directory() && entry.path().filename().string().starts_with("@")) {
      for (const auto& scoped : fs::directory_iterator(entry.path())) {
        if (scoped.is_regular_file() && scoped.path().extension() == ".json") {
          documents.push_back(scoped.path());
        }
      }
    }
  }
  std::sort(documents.begin(), documents.end());

  Corpus corpus;
  corpus.root = root;
  for (const auto& path : documents) {
    PackageRecord record;
    try {
      record = load_registry_doc(read_file(path));
    } catch (const DataError& e) {
      throw DataError(fmt::format("{}: {}", path.string(), e.what()));
    }
    if (corpus.registry.find(record.name) != nullptr) {
      throw DataError(fmt::format("package '{}' defined twice (second in {})", record.name, path.string()));
    }
    for (auto& [key, v] : record.versions) {
      const fs::path tree = corpus.sources_dir() / record.name / key;
      if (fs::is_directory(tree)) {
        v.source_root = tree;
      }
    }
    corpus.warnings.insert(corpus.warnings.end(), record.warnings.begin(), record.warnings.end());
    corpus.registry.add(std::move(record));
  }
  return corpus;
}

}  // namespace tlev::corpus
