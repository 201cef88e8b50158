// tlev: technical leverage analysis over a local npm-shaped corpus.
//
//   tlev ingest  --corpus DIR
//   tlev resolve --corpus DIR [--package NAME [--version V]]
//   tlev measure --corpus DIR [--advisories FILE] [--output FILE]
//   tlev analyze --corpus DIR [--advisories FILE]
//   tlev report  --corpus DIR [--advisories FILE] --output DIR
//
// Exit status: 0 success, 1 usage error, 2 data error.

#include <CLI11.hpp>
#include <fmt/core.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "tlev/corpus.hpp"
#include "tlev/error.hpp"
#include "tlev/pipeline.hpp"
#include "tlev/resolver.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct Options {
  std::string corpus;
  std::string advisories;
  int levels = 1;
  std::uint64_t kloc_threshold = tlev::stats::kDefaultKlocThreshold;
  std::string policy = "latest-published";
  std::optional<double> log_offset;
  std::string published_before;
  bool dedup = false;
  std::vector<std::string> exclude_globs;
  bool exclude_all_prereleases = false;
  std::size_t jobs = 0;
  std::uint64_t seed = 0;
  std::string output;
  std::string package;
  std::string version;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--corpus", o.corpus, "Corpus directory")->required();
  cmd->add_option("--policy", o.policy, "latest-published or highest-semver")->capture_default_str();
  cmd->add_option("--levels", o.levels, "Dependency depth, 1 or 2")->capture_default_str();
  cmd->add_flag("--exclude-all-prereleases", o.exclude_all_prereleases, "Drop every prerelease from timelines");
}

void add_measurement(CLI::App* cmd, Options& o) {
  cmd->add_option("--advisories", o.advisories, "Advisory snapshot (.csv or .json)");
  cmd->add_option("--kloc-threshold", o.kloc_threshold, "Own-LOC split between small-medium and large")
      ->capture_default_str();
  cmd->add_option("--log-offset", o.log_offset, "Use log10(x + offset) instead of excluding zero rows");
  cmd->add_option("--published-before", o.published_before, "Only count advisories published before this time");
  cmd->add_flag("--dedup", o.dedup, "Count repeated level-1 transitive versions once");
  cmd->add_option("--exclude-glob", o.exclude_globs, "Extra path pattern to skip when counting LOC");
  cmd->add_option("--jobs", o.jobs, "Worker threads (default: hardware concurrency)");
  cmd->add_option("--seed", o.seed, "Seed recorded in the summary")->capture_default_str();
}

tlev::pipeline::AnalysisConfig make_config(const Options& o) {
  tlev::pipeline::AnalysisConfig c;
  c.corpus_path = o.corpus;
  c.advisory_path = o.advisories;
  c.levels = o.levels;
  c.kloc_threshold = o.kloc_threshold;
  c.policy = tlev::resolver::parse_policy(o.policy);
  c.log_offset = o.log_offset;
  c.output_dir = o.output;
  c.seed = o.seed;
  if (!o.published_before.empty()) {
    c.published_before = tlev::parse_timestamp(o.published_before);
  }
  c.dedup = o.dedup;
  c.exclude_globs = o.exclude_globs;
  c.exclude_all_prereleases = o.exclude_all_prereleases;
  c.jobs = o.jobs != 0 ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  c.validate();
  return c;
}

int run_ingest(const Options& o) {
  const tlev::corpus::Corpus corpus = tlev::corpus::load_corpus(o.corpus);
  std::size_t versions = 0;
  for (const auto& [name, record] : corpus.registry.packages()) {
    versions += record.versions.size();
    for (const auto& w : record.warnings) {
      fmt::print(stderr, "warning: {}: {}\n", name, w);
    }
  }
  for (const auto& w : corpus.warnings) {
    fmt::print(stderr, "warning: {}\n", w);
  }
  if (corpus.registry.packages().empty()) {
    throw tlev::DataError(fmt::format("corpus '{}' contains no packages", o.corpus));
  }
  fmt::print("{} packages, {} versions\n", corpus.registry.packages().size(), versions);
  return 0;
}

int run_resolve(const Options& o, const tlev::pipeline::AnalysisConfig& config) {
  const tlev::corpus::Corpus corpus = tlev::corpus::load_corpus(o.corpus);
  if (!o.package.empty() && corpus.registry.find(o.package) == nullptr) {
    throw tlev::DataError(fmt::format("package '{}' is not in the corpus", o.package));
  }
  bool found = false;
  for (const auto& [name, record] : corpus.registry.packages()) {
    if (!o.package.empty() && name != o.package) {
      continue;
    }
    for (const tlev::corpus::VersionRecord* release : corpus.registry.history(name)) {
      if (!o.version.empty() && release->version_text != o.version) {
        continue;
      }
      found = true;
      const auto deps = tlev::resolver::resolve_release(*release, corpus.registry, config.levels, config.policy);
      fmt::print("{}@{} ({})\n", name, release->version_text, tlev::format_timestamp(release->published_at));
      for (const auto& e : deps.entries) {
        const std::string indent(static_cast<std::size_t>(e.depth) * 2, ' ');
        const std::string target =
            e.resolved ? e.resolved_text : fmt::format("unresolved: {}", tlev::resolver::to_string(*e.unresolved));
        fmt::print("{}{} {} -> {}{}\n", indent, e.name, e.spec, target, e.duplicate ? " (duplicate)" : "");
      }
    }
  }
  if (!o.version.empty() && !found) {
    throw tlev::DataError(fmt::format("version '{}' of '{}' is not in the corpus", o.version, o.package));
  }
  return 0;
}

int run_measure(const Options& o, const tlev::pipeline::AnalysisConfig& config) {
  const auto bundle = tlev::pipeline::run_pipeline(config);
  const std::string csv = tlev::pipeline::releases_csv(bundle.rows);
  if (o.output.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(o.output, std::ios::binary);
    out << csv;
    if (!out) {
      throw tlev::DataError(fmt::format("cannot write '{}'", o.output));
    }
  }
  return 0;
}

int run_analyze(const tlev::pipeline::AnalysisConfig& config) {
  std::cout << tlev::pipeline::summary_json(tlev::pipeline::run_pipeline(config));
  return 0;
}

int run_report(const Options& o, const tlev::pipeline::AnalysisConfig& config) {
  const auto bundle = tlev::pipeline::run_pipeline(config);
  for (const auto& path : tlev::pipeline::emit_reports(bundle, o.output)) {
    fmt::print("{}\n", path.string());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Technical leverage analysis of npm-style library releases"};
  app.require_subcommand(1);
  Options o;

  auto* ingest = app.add_subcommand("ingest", "Validate a corpus and print its size");
  ingest->add_option("--corpus", o.corpus, "Corpus directory")->required();

  auto* resolve = app.add_subcommand("resolve", "Print time-travel dependency resolutions");
  add_common(resolve, o);
  resolve->add_option("--package", o.package, "Only this package");
  resolve->add_option("--version", o.version, "Only this version (needs --package)")->needs("--package");

  auto* measure = app.add_subcommand("measure", "Write releases.csv to stdout or --output");
  add_common(measure, o);
  add_measurement(measure, o);
  measure->add_option("--output", o.output, "Destination file");

  auto* analyze = app.add_subcommand("analyze", "Run the full analysis and print summary.json");
  add_common(analyze, o);
  add_measurement(analyze, o);

  auto* report = app.add_subcommand("report", "Run the full analysis and write every report file");
  add_common(report, o);
  add_measurement(report, o);
  report->add_option("--output", o.output, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  tlev::pipeline::AnalysisConfig config;
  try {
    if (!ingest->parsed()) {
      config = make_config(o);
    }
  } catch (const tlev::Error& e) {
    fmt::print(stderr, "tlev: {}\n", e.what());
    return kExitUsage;
  }

  try {
    if (ingest->parsed()) return run_ingest(o);
    if (resolve->parsed()) return run_resolve(o, config);
    if (measure->parsed()) return run_measure(o, config);
    if (analyze->parsed()) return run_analyze(config);
    return run_report(o, config);
  } catch (const tlev::Error& e) {
    fmt::print(stderr, "tlev: {}\n", e.what());
    return kExitData;
  } catch (const std::exception& e) {
    fmt::print(stderr, "tlev: {}\n", e.what());
    return kExitData;
  }
}
