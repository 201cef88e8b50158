#include "tlev/vulnmatch.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tlev/csv.hpp"
#include "tlev/error.hpp"

namespace tlev::vulnmatch {
namespace {

constexpr std::string_view kHeader[] = {"id", "package", "affected_range", "severity", "published_at", "title"};

Advisory make_advisory(std::string id, std::string package, std::string range_text, std::string_view severity,
                       std::string_view published_at, std::string title, const std::string& where) {
  try {
    if (id.empty()) {
      throw DataError("empty id");
    }
    if (package.empty()) {
      throw DataError("empty package");
    }
    semver::RangeExpr range = semver::parse_range(range_text);
    return Advisory{std::move(id),
                    std::move(package),
                    std::move(range_text),
                    std::move(range),
                    parse_severity(severity),
                    parse_timestamp(published_at),
                    std::move(title)};
  } catch (const Error& e) {
    throw DataError(fmt::format("advisory {}: {}", where, e.what()));
  }
}

void reject_duplicates(const std::vector<Advisory>& advisories) {
  std::set<std::string_view> ids;
  for (const auto& a : advisories) {
    if (!ids.insert(a.id).second) {
      throw DataError(fmt::format("duplicate advisory id '{}'", a.id));
    }
  }
}

}  // namespace

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::Low:
      return "low";
    case Severity::Medium:
      return "medium";
    case Severity::High:
      return "high";
  }
  return "unknown";
}

Severity parse_severity(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "low") return Severity::Low;
  if (lower == "medium") return Severity::Medium;
  if (lower == "high") return Severity::High;
  throw DataError(fmt::format("unknown severity '{}' (expected low, medium or high)", text));
}

std::vector<Advisory> parse_advisories_csv(std::string_view text) {
  const std::vector<csv::Record> records = csv::parse(text);
  std::vector<Advisory> out;
  if (records.empty()) {
    return out;
  }
  const auto& header = records.front().fields;
  if (!std::equal(header.begin(), header.end(), std::begin(kHeader), std::end(kHeader))) {
    throw DataError("advisory CSV header must be 'id,package,affected_range,severity,published_at,title'");
  }
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& r = records[i];
    const std::string where = fmt::format("on line {}", r.line);
    if (r.fields.size() != std::size(kHeader)) {
      throw DataError(fmt::format("advisory {}: expected 6 fields, found {}", where, r.fields.size()));
    }
    out.push_back(make_advisory(r.fields[0], r.fields[1], r.fields[2], r.fields[3], r.fields[4], r.fields[5], where));
  }
  reject_duplicates(out);
  return out;
}

std::vector<Advisory> parse_advisories_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(fmt::format("advisory JSON is malformed: {}", e.what()));
  }
  if (!doc.is_array()) {
    throw DataError("advisory JSON must be an array");
  }
  std::vector<Advisory> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& e = doc[i];
    const std::string where = fmt::format("at entry {}", i);
    auto field = [&](std::string_view key) -> std::string {
      const auto it = e.find(key);
      if (it == e.end() || !it->is_string()) {
        throw DataError(fmt::format("advisory {}: missing string field '{}'", where, key));
      }
      return it->get<std::string>();
    };
    if (!e.is_object()) {
      throw DataError(fmt::format("advisory {}: not an object", where));
    }
    out.push_back(make_advisory(field("id"), field("package"), field("affected_range"), field("severity"),
                                field("published_at"), field("title"), where));
  }
  reject_duplicates(out);
  return out;
}

std::vector<Advisory> load_advisories(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DataError(fmt::format("cannot read advisory snapshot '{}'", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    if (path.extension() == ".json") {
      return parse_advisories_json(buffer.str());
    }
    return parse_advisories_csv(buffer.str());
  } catch (const DataError& e) {
    throw DataError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

bool affects(const Advisory& advisory, std::string_view package, const semver::Version& version) {
  return advisory.package == package && semver::satisfies(version, advisory.range);
}

AdvisoryIndex::AdvisoryIndex(std::vector<Advisory> advisories) : advisories_(std::move(advisories)) {
  for (std::size_t i = 0; i < advisories_.size(); ++i) {
    by_package_[advisories_[i].package].push_back(i);
  }
}

std::vector<const Advisory*> AdvisoryIndex::matching(std::string_view package,
                                                     const semver::Version& version) const {
  std::vector<const Advisory*> out;
  const auto it = by_package_.find(package);
  if (it == by_package_.end()) {
    return out;
  }
  for (std::size_t i : it->second) {
    if (affects(advisories_[i], package, version)) {
      out.push_back(&advisories_[i]);
    }
  }
  return out;
}

VulnProfile vuln_profile(std::string_view package, const semver::Version& version,
                         const resolver::DependencySet& deps, const AdvisoryIndex& advisories,
                         const MatchOptions& options) {
  VulnProfile profile;
  std::set<std::string_view> distinct;

  auto count = [&](std::string_view name, const semver::Version& v) {
    std::size_t hits = 0;
    for (const Advisory* a : advisories.matching(name, v)) {
      if (options.published_before && a->published_at >= *options.published_before) {
        continue;
      }
      ++hits;
      ++profile.by_severity[static_cast<std::size_t>(a->severity)];
      distinct.insert(a->id);
    }
    return hits;
  };

  profile.own_count = count(package, version);
  for (const auto& entry : deps.entries) {
    if (!entry.resolved) {
      continue;
    }
    if (entry.depth == 1) {
      profile.dir_count += count(entry.name, *entry.resolved);
    } else if (options.depth_mode >= 2) {
      profile.trans1_count += count(entry.name, *entry.resolved);
    }
  }
  profile.distinct_count = distinct.size();
  profile.is_vulnerable = profile.total() >= 1;
  return profile;
}

}  // namespace tlev::vulnmatch
