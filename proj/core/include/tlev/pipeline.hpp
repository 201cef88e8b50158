#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlev/corpus.hpp"
#include "tlev/metrics.hpp"
#include "tlev/resolver.hpp"
#include "tlev/sizer.hpp"
#include "tlev/stats.hpp"
#include "tlev/timestamp.hpp"
#include "tlev/vulnmatch.hpp"

namespace tlev::pipeline {

/// Bumped whenever a report column or key is added, removed or reordered.
inline constexpr int kSchemaVersion = 1;

struct AnalysisConfig {
  std::filesystem::path corpus_path;
  std::filesystem::path advisory_path;  // empty: no advisories
  int levels = 1;
  std::uint64_t kloc_threshold = stats::kDefaultKlocThreshold;
  resolver::Policy policy = resolver::Policy::LatestPublished;
  std::optional<double> log_offset;  // unset: zero leverage / rho rows are excluded
  std::filesystem::path output_dir;
  std::uint64_t seed = 0;
  std::optional<Timestamp> published_before;
  bool dedup = false;  // level-1 totals skip entries already counted
  std::vector<std::string> exclude_globs;
  bool exclude_all_prereleases = false;
  std::size_t jobs = 1;

  /// Throws DomainError when levels or kloc_threshold is out of range.
  void validate() const;
  [[nodiscard]] metrics::Mode active_mode() const noexcept {
    return levels == 2 ? metrics::Mode::DirectTrans1 : metrics::Mode::Direct;
  }
};

/// Everything measured for one surviving release.
struct ReleaseMeasurement {
  corpus::VersionRecord release;
  resolver::DependencySet deps;
  sizer::SizeProfile size;  // l_trans1 already deduplicated when config.dedup
  vulnmatch::VulnProfile vulns_dir;
  std::optional<vulnmatch::VulnProfile> vulns_trans1;  // levels == 2 only
};

struct PackageTimeline {
  corpus::ReleaseTimeline timeline;
  std::vector<ReleaseMeasurement> measurements;  // parallel to timeline.releases
};

/// Filters every package's history and measures each surviving release.
/// Packages come out sorted by name; the result does not depend on `jobs`.
std::vector<PackageTimeline> measure_corpus(const corpus::Corpus& corpus, const vulnmatch::AdvisoryIndex& advisories,
                                            const AnalysisConfig& config);

/// One line of releases.csv.
struct ReleaseRow {
  std::string package;
  std::string version;
  Timestamp published_at;
  sizer::Lines l_own = 0;
  sizer::Lines l_dir = 0;
  sizer::Lines l_trans1 = 0;
  std::optional<double> lambda_dir;
  std::optional<double> lambda_dir_trans1;
  std::optional<double> rho;  // change from the previous release, active mode
  std::optional<double> theta_deg;
  std::optional<double> interval_days;
  std::size_t own_vulns = 0;
  std::size_t dir_vulns = 0;
  std::size_t trans1_vulns = 0;
  bool is_vulnerable = false;
  std::vector<std::string> flags;

  stats::SizeGroup group = stats::SizeGroup::SmallMedium;
};

/// Column names of releases.csv, in order.
const std::vector<std::string>& release_columns();

struct ModeFit {
  metrics::Mode mode = metrics::Mode::Direct;
  std::optional<stats::RegressionFit> fit;
  std::string status;  // "ok", "insufficient rows" or "rank deficient"
  std::vector<std::string> collinear;
  std::size_t n_rows = 0;
  stats::ExclusionTally excluded;
};

struct GroupRegression {
  std::string group;  // small_medium, large, global
  std::vector<ModeFit> fits;
};

struct ContingencyReport {
  std::string group;
  metrics::Mode mode = metrics::Mode::Direct;
  stats::ContingencyTable table;
  std::map<std::string, double> thresholds;  // group -> median leverage used
  std::optional<double> odds_ratio;
  std::optional<double> haldane_odds_ratio;  // set when some cell is zero
  stats::FisherResult fisher;
  std::string status;  // "ok", "zero cell", "empty"
};

struct KdeReport {
  std::string group;
  std::vector<double> grid;
  std::vector<double> density;  // empty when status != "ok"
  std::optional<double> bandwidth;
  std::size_t samples = 0;
  std::string status;
};

struct VulnSourceCount {
  std::string group;
  std::string leverage_class;  // high, low
  std::size_t releases = 0;
  std::size_t own = 0;
  std::size_t dir = 0;
  std::size_t trans1 = 0;
  std::array<std::size_t, 3> by_severity{};
};

struct Summary {
  std::size_t packages = 0;
  std::size_t ingested_versions = 0;
  std::size_t releases = 0;
  std::map<std::string, std::size_t> exclusions;  // reason -> count
  std::size_t unresolved_entries = 0;
  std::map<std::string, std::size_t> unresolved_by_reason;
  std::size_t sizing_gaps = 0;
  std::size_t zero_own_releases = 0;
  std::size_t long_line_releases = 0;
  std::uint64_t l_trans1_total = 0;
  std::uint64_t l_trans1_dedup_total = 0;
  std::size_t trans1_vulns_total = 0;
  std::size_t distinct_vulns_total = 0;
  /// group -> metric -> median, over rows where the metric is defined.
  std::map<std::string, std::map<std::string, double>> medians;
  std::map<std::string, std::size_t> group_sizes;
  std::optional<stats::SpearmanResult> spearman;  // lambda_dir vs l_own
  std::string spearman_status;
  std::optional<double> cohens_d;  // lambda_dir, small_medium vs large
  std::string cohens_d_status;
  std::vector<std::string> warnings;
};

struct AnalysisBundle {
  AnalysisConfig config;
  std::vector<ReleaseRow> rows;
  std::vector<GroupRegression> regressions;
  std::vector<ContingencyReport> contingencies;
  std::vector<KdeReport> kdes;
  std::vector<VulnSourceCount> vuln_sources;
  Summary summary;
};

/// Loads, filters, resolves, sizes, matches and analyses the corpus named in
/// `config`. Throws DataError for an empty corpus; module errors carry the
/// package and version they occurred on.
AnalysisBundle run_pipeline(const AnalysisConfig& config);

/// Same, over an already-loaded corpus and advisory list.
AnalysisBundle analyze(const corpus::Corpus& corpus, const vulnmatch::AdvisoryIndex& advisories,
                       const AnalysisConfig& config);

/// releases.csv contents.
std::string releases_csv(const std::vector<ReleaseRow>& rows);

/// summary.json contents.
std::string summary_json(const AnalysisBundle& bundle);

/// Writes releases.csv, regression_<group>.json, contingency_<group>_<mode>.json,
/// kde_<group>.csv, scatter_leverage_vs_own.csv and summary.json. Returns the
/// written paths in order. Throws DataError when the directory is unwritable.
std::vector<std::filesystem::path> emit_reports(const AnalysisBundle& bundle, const std::filesystem::path& dir);

}  // namespace tlev::pipeline
