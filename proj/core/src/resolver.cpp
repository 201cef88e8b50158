#include "tlev/resolver.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

#include "tlev/error.hpp"

namespace tlev::resolver {

std::string_view to_string(Policy policy) {
  switch (policy) {
    case Policy::LatestPublished:
      return "latest-published";
    case Policy::HighestSemver:
      return "highest-semver";
  }
  return "unknown";
}

Policy parse_policy(std::string_view text) {
  if (text == "latest-published") return Policy::LatestPublished;
  if (text == "highest-semver") return Policy::HighestSemver;
  throw DomainError(fmt::format("unknown resolver policy '{}'", text));
}

std::string_view to_string(Unresolved reason) {
  switch (reason) {
    case Unresolved::UnknownPackage:
      return "unknown-package";
    case Unresolved::NoSatisfyingVersion:
      return "no-satisfying-version";
    case Unresolved::UnsupportedSpec:
      return "unsupported-spec";
    case Unresolved::InvalidSpec:
      return "invalid-spec";
  }
  return "unknown";
}

Resolution resolve_spec(std::string_view name, std::string_view spec, Timestamp as_of,
                        const corpus::Registry& registry, Policy policy) {
  // Spec shape first: git/file specs count as unsupported even for names
  // the registry does not carry.
  std::optional<semver::RangeExpr> range;
  try {
    range = semver::parse_range(spec);
  } catch (const UnsupportedSpecError&) {
    return {nullptr, Unresolved::UnsupportedSpec};
  } catch (const ParseError&) {
    return {nullptr, Unresolved::InvalidSpec};
  }
  if (registry.find(name) == nullptr) {
    return {nullptr, Unresolved::UnknownPackage};
  }

  const corpus::VersionRecord* candidate = nullptr;
  for (const corpus::VersionRecord* v : registry.history(name)) {
    if (v->published_at > as_of) {
      break;
    }
    if (!semver::satisfies(v->version, *range)) {
      continue;
    }
    if (policy == Policy::LatestPublished || candidate == nullptr ||
        semver::compare(v->version, candidate->version) > 0) {
      candidate = v;
    }
  }
  if (candidate == nullptr) {
    return {nullptr, Unresolved::NoSatisfyingVersion};
  }
  return Resolution{.record = candidate};
}

std::size_t DependencySet::unresolved_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.unresolved.has_value(); }));
}

namespace {

ResolvedDependency make_entry(const std::string& name, const std::string& spec, Timestamp as_of,
                              const corpus::Registry& registry, Policy policy, int depth,
                              const std::string& parent) {
  ResolvedDependency entry;
  entry.name = name;
  entry.spec = spec;
  entry.depth = depth;
  entry.parent = parent;
  const Resolution r = resolve_spec(name, spec, as_of, registry, policy);
  if (r.resolved()) {
    entry.resolved = r.record->version;
    entry.resolved_text = r.record->version_text;
    entry.record = r.record;
  } else {
    entry.unresolved = r.reason;
  }
  return entry;
}

}  // namespace

DependencySet resolve_release(const corpus::VersionRecord& release, const corpus::Registry& registry,
                              int levels, Policy policy) {
  if (levels != 1 && levels != 2) {
    throw DomainError(fmt::format("dependency levels must be 1 or 2, got {}", levels));
  }
  DependencySet set;
  set.root_package = release.package;
  set.root_version = release.version_text;
  set.as_of = release.published_at;

  // dependency_specs is a std::map, so depth-1 entries come out name-sorted.
  for (const auto& [name, spec] : release.dependency_specs) {
    set.entries.push_back(make_entry(name, spec, set.as_of, registry, policy, 1, {}));
  }

  if (levels == 2) {
    std::vector<ResolvedDependency> second;
    for (const auto& direct : set.entries) {
      if (direct.record == nullptr) {
        continue;
      }
      for (const auto& [name, spec] : direct.record->dependency_specs) {
        second.push_back(make_entry(name, spec, set.as_of, registry, policy, 2, direct.name));
      }
    }
    std::stable_sort(second.begin(), second.end(), [](const auto& a, const auto& b) {
      return std::tie(a.parent, a.name) < std::tie(b.parent, b.name);
    });

    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& e : set.entries) {
      if (e.record != nullptr) {
        seen.emplace(e.name, e.resolved_text);
      }
    }
    for (auto& e : second) {
      if (e.record != nullptr && !seen.emplace(e.name, e.resolved_text).second) {
        e.duplicate = true;
      }
    }
    set.entries.insert(set.entries.end(), std::make_move_iterator(second.begin()),
                       std::make_move_iterator(second.end()));
  }
  return set;
}

}  // namespace tlev::resolver
