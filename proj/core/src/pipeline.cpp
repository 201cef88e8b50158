#include "tlev/pipeline.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <set>
#include <thread>

#include "json.hpp"
#include "tlev/csv.hpp"
#include "tlev/error.hpp"

namespace tlev::pipeline {

using nlohmann::json;

void AnalysisConfig::validate() const {
  if (levels != 1 && levels != 2) {
    throw DomainError(fmt::format("levels must be 1 or 2, got {}", levels));
  }
  if (kloc_threshold == 0) {
    throw DomainError("kloc threshold must be positive");
  }
  if (log_offset && !(*log_offset > 0.0 && std::isfinite(*log_offset))) {
    throw DomainError("log offset must be a positive finite number");
  }
}

namespace {

struct Task {
  std::size_t package = 0;
  std::size_t release = 0;
};

[[noreturn]] void rethrow_with_context(const std::string& context) {
  try {
    throw;
  } catch (const DataError& e) {
    throw DataError(fmt::format("{}: {}", context, e.what()));
  } catch (const DomainError& e) {
    throw DomainError(fmt::format("{}: {}", context, e.what()));
  } catch (const Error& e) {
    throw DataError(fmt::format("{}: {}", context, e.what()));
  }
}

ReleaseMeasurement measure_release(const corpus::VersionRecord& release, const corpus::Registry& registry,
                                   const vulnmatch::AdvisoryIndex& advisories, sizer::SourceSizer& sizer,
                                   const AnalysisConfig& config) {
  ReleaseMeasurement m;
  m.release = release;
  m.deps = resolver::resolve_release(release, registry, config.levels, config.policy);
  m.size = sizer::size_release(release, m.deps, sizer);
  if (config.dedup) {
    m.size.l_trans1 = m.size.l_trans1_dedup;
  }
  m.vulns_dir = vulnmatch::vuln_profile(release.package, release.version, m.deps, advisories,
                                        {.depth_mode = 1, .published_before = config.published_before});
  if (config.levels == 2) {
    m.vulns_trans1 = vulnmatch::vuln_profile(release.package, release.version, m.deps, advisories,
                                             {.depth_mode = 2, .published_before = config.published_before});
  }
  return m;
}

}  // namespace

std::vector<PackageTimeline> measure_corpus(const corpus::Corpus& corpus, const vulnmatch::AdvisoryIndex& advisories,
                                            const AnalysisConfig& config) {
  config.validate();
  std::vector<PackageTimeline> out;
  std::vector<Task> tasks;
  for (const auto& [name, record] : corpus.registry.packages()) {
    corpus::ReleaseTimeline timeline = corpus::make_timeline(record);
    timeline = corpus::filter_experimental(std::move(timeline), {config.exclude_all_prereleases});
    timeline = corpus::filter_backports(std::move(timeline));
    for (std::size_t r = 0; r < timeline.releases.size(); ++r) {
      tasks.push_back({out.size(), r});
    }
    PackageTimeline p;
    p.measurements.resize(timeline.releases.size());
    p.timeline = std::move(timeline);
    out.push_back(std::move(p));
  }

  sizer::SourceSizer sizer({.exclude_globs = config.exclude_globs});
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      const corpus::VersionRecord& release = out[t.package].timeline.releases[t.release];
      try {
        try {
          out[t.package].measurements[t.release] =
              measure_release(release, corpus.registry, advisories, sizer, config);
        } catch (const Error&) {
          rethrow_with_context(fmt::format("{}@{}", release.package, release.version_text));
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(config.jobs, 1, std::max<std::size_t>(tasks.size(), 1));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) {
      pool.emplace_back(work);
    }
  }
  // Lowest task index wins so the reported error does not depend on scheduling.
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return out;
}

const std::vector<std::string>& release_columns() {
  static const std::vector<std::string> columns = {
      "package",     "version",        "published_at", "l_own",    "l_dir",        "l_trans1",
      "lambda_dir",  "lambda_dir_trans1", "rho",       "theta_deg", "interval_days", "own_vulns",
      "dir_vulns",   "trans1_vulns",   "is_vulnerable", "flags",   "group"};
  return columns;
}

namespace {

const std::string kGroups[] = {"small_medium", "large", "global"};

bool in_group(const ReleaseRow& row, const std::string& group) {
  return group == "global" || stats::to_string(row.group) == group;
}

std::vector<metrics::Mode> analysed_modes(const AnalysisConfig& config) {
  if (config.levels == 2) {
    return {metrics::Mode::Direct, metrics::Mode::DirectTrans1};
  }
  return {metrics::Mode::Direct};
}

std::optional<double> leverage_of(const ReleaseMeasurement& m, metrics::Mode mode) {
  if (m.size.l_own == 0) {
    return std::nullopt;
  }
  return metrics::leverage(m.size, mode);
}

const vulnmatch::VulnProfile& profile_of(const ReleaseMeasurement& m, metrics::Mode mode) {
  return mode == metrics::Mode::DirectTrans1 && m.vulns_trans1 ? *m.vulns_trans1 : m.vulns_dir;
}

ReleaseRow make_row(const ReleaseMeasurement* previous, const ReleaseMeasurement& m, const AnalysisConfig& config) {
  ReleaseRow row;
  row.package = m.release.package;
  row.version = m.release.version_text;
  row.published_at = m.release.published_at;
  row.l_own = m.size.l_own;
  row.l_dir = m.size.l_dir;
  row.l_trans1 = m.size.l_trans1;
  row.lambda_dir = leverage_of(m, metrics::Mode::Direct);
  if (config.levels == 2) {
    row.lambda_dir_trans1 = leverage_of(m, metrics::Mode::DirectTrans1);
  }
  if (previous != nullptr) {
    const metrics::ChangeVector cv = metrics::change_vector(previous->size, m.size, config.active_mode());
    row.rho = cv.rho;
    row.theta_deg = cv.theta_deg;
    row.interval_days = days_between(previous->release.published_at, m.release.published_at);
  } else {
    row.flags.emplace_back("first-release");
  }
  row.own_vulns = m.vulns_dir.own_count;
  row.dir_vulns = m.vulns_dir.dir_count;
  row.trans1_vulns = m.vulns_trans1 ? m.vulns_trans1->trans1_count : 0;
  row.is_vulnerable = profile_of(m, config.active_mode()).is_vulnerable;

  if (!m.size.own_sized) {
    row.flags.emplace_back("missing-source");
  } else if (m.size.l_own == 0) {
    row.flags.emplace_back("zero-own");
  }
  if (m.size.unresolved > 0) {
    row.flags.push_back(fmt::format("unresolved={}", m.size.unresolved));
  }
  const std::size_t dep_gaps = m.size.sizing_gaps.size() - (m.size.own_sized ? 0 : 1);
  if (dep_gaps > 0) {
    row.flags.push_back(fmt::format("sizing-gap={}", dep_gaps));
  }
  if (m.size.long_lines) {
    row.flags.emplace_back("long-lines");
  }
  row.group = stats::size_group(m.size.l_own, config.kloc_threshold);
  return row;
}

// Regression over every package's pairs, restricted to pairs whose newer
// release falls in `group`.
ModeFit fit_group(const std::vector<PackageTimeline>& timelines, const std::vector<ReleaseRow>& rows,
                  const std::string& group, metrics::Mode mode, const AnalysisConfig& config) {
  stats::DesignMatrix design;
  std::size_t row_base = 0;
  for (const auto& p : timelines) {
    const auto& ms = p.measurements;
    std::vector<stats::PairObservation> pairs;
    for (std::size_t i = 1; i < ms.size(); ++i) {
      const metrics::ChangeVector cv = metrics::change_vector(ms[i - 1].size, ms[i].size, mode);
      pairs.push_back({.interval_days = days_between(ms[i - 1].release.published_at, ms[i].release.published_at),
                       .leverage = leverage_of(ms[i], mode),
                       .rho = cv.rho,
                       .theta_deg = cv.theta_deg});
    }
    stats::DesignOptions options;
    options.log_offset = config.log_offset;
    options.include = [&, row_base](std::size_t j) { return in_group(rows[row_base + j + 1], group); };
    design.append(stats::build_design_matrix(pairs, options));
    row_base += ms.size();
  }

  ModeFit out;
  out.mode = mode;
  out.n_rows = design.rows.size();
  out.excluded = design.excluded;
  try {
    out.fit = stats::fit_release_model(design);
    out.fit->n_excluded = design.excluded.total();
    out.status = "ok";
  } catch (const stats::InsufficientRowsError&) {
    out.status = "insufficient rows";
  } catch (const stats::CollinearityError& e) {
    out.status = "rank deficient";
    out.collinear = e.columns();
  }
  return out;
}

std::map<std::string, double> leverage_medians(const std::vector<PackageTimeline>& timelines,
                                               const std::vector<ReleaseRow>& rows, metrics::Mode mode) {
  std::map<std::string, std::vector<double>> values;
  std::size_t k = 0;
  for (const auto& p : timelines) {
    for (const auto& m : p.measurements) {
      if (const auto lev = leverage_of(m, mode)) {
        values[std::string(stats::to_string(rows[k].group))].push_back(*lev);
      }
      ++k;
    }
  }
  std::map<std::string, double> out;
  for (const auto& [group, v] : values) {
    out[group] = stats::median(v);
  }
  return out;
}

std::vector<ContingencyReport> contingencies(const std::vector<PackageTimeline>& timelines,
                                             const std::vector<ReleaseRow>& rows, metrics::Mode mode) {
  const std::map<std::string, double> thresholds = leverage_medians(timelines, rows, mode);
  std::vector<ContingencyReport> out;
  for (const std::string& group : kGroups) {
    ContingencyReport report;
    report.group = group;
    report.mode = mode;
    for (const auto& [g, t] : thresholds) {
      if (group == "global" || g == group) {
        report.thresholds[g] = t;
      }
    }
    std::size_t k = 0;
    for (const auto& p : timelines) {
      for (const auto& m : p.measurements) {
        const ReleaseRow& row = rows[k++];
        const auto lev = leverage_of(m, mode);
        if (!lev || !in_group(row, group)) {
          continue;
        }
        const bool high = *lev > thresholds.at(std::string(stats::to_string(row.group)));
        const bool vulnerable = profile_of(m, mode).is_vulnerable;
        auto& cell = high ? (vulnerable ? report.table.a : report.table.b) : (vulnerable ? report.table.c : report.table.d);
        ++cell;
      }
    }
    const auto& t = report.table;
    if (t.a + t.b + t.c + t.d == 0) {
      report.status = "empty";
      report.fisher = {1.0, true};
    } else {
      try {
        report.odds_ratio = stats::odds_ratio(t);
        report.status = "ok";
      } catch (const stats::ZeroCellError& e) {
        report.haldane_odds_ratio = e.haldane();
        report.status = "zero cell";
      }
      report.fisher = stats::fisher_exact(t);
    }
    out.push_back(std::move(report));
  }
  return out;
}

KdeReport kde_for(const std::vector<ReleaseRow>& rows, const std::string& group) {
  KdeReport report;
  report.group = group;
  report.grid = stats::linspace(-180.0, 180.0, 361);
  std::vector<double> samples;
  for (const auto& row : rows) {
    if (row.theta_deg && in_group(row, group)) {
      samples.push_back(*row.theta_deg);
    }
  }
  report.samples = samples.size();
  if (samples.size() < 2) {
    report.status = "insufficient samples";
    return report;
  }
  try {
    const stats::GaussianKde kde(std::move(samples));
    report.bandwidth = kde.bandwidth();
    report.density = kde.evaluate(report.grid);
    report.status = "ok";
  } catch (const DomainError&) {
    report.status = "zero variance";
  }
  return report;
}

std::vector<VulnSourceCount> vuln_sources(const std::vector<PackageTimeline>& timelines,
                                          const std::vector<ReleaseRow>& rows, metrics::Mode mode) {
  const std::map<std::string, double> thresholds = leverage_medians(timelines, rows, mode);
  std::vector<VulnSourceCount> out;
  for (const char* group : {"small_medium", "large"}) {
    for (const char* cls : {"high", "low"}) {
      VulnSourceCount c;
      c.group = group;
      c.leverage_class = cls;
      out.push_back(c);
    }
  }
  std::size_t k = 0;
  for (const auto& p : timelines) {
    for (const auto& m : p.measurements) {
      const ReleaseRow& row = rows[k++];
      const auto lev = leverage_of(m, mode);
      if (!lev) {
        continue;
      }
      const std::string group(stats::to_string(row.group));
      const bool high = *lev > thresholds.at(group);
      VulnSourceCount& c = out[(row.group == stats::SizeGroup::Large ? 2 : 0) + (high ? 0 : 1)];
      const auto& v = profile_of(m, mode);
      ++c.releases;
      c.own += v.own_count;
      c.dir += v.dir_count;
      c.trans1 += v.trans1_count;
      for (std::size_t s = 0; s < c.by_severity.size(); ++s) {
        c.by_severity[s] += v.by_severity[s];
      }
    }
  }
  return out;
}

void add_median(std::map<std::string, double>& into, const std::string& key, const std::vector<double>& values) {
  if (!values.empty()) {
    into[key] = stats::median(values);
  }
}

Summary summarize(const corpus::Corpus& corpus, const std::vector<PackageTimeline>& timelines,
                  const std::vector<ReleaseRow>& rows, const AnalysisConfig& config) {
  Summary s;
  s.warnings = corpus.warnings;
  for (const auto& [name, record] : corpus.registry.packages()) {
    ++s.packages;
    s.ingested_versions += record.versions.size();
    for (const auto& w : record.warnings) {
      s.warnings.push_back(fmt::format("{}: {}", name, w));
    }
  }
  for (const auto& p : timelines) {
    for (const auto& e : p.timeline.exclusions) {
      ++s.exclusions[std::string(corpus::to_string(e.reason))];
    }
    for (const auto& m : p.measurements) {
      for (const auto& entry : m.deps.entries) {
        if (entry.unresolved) {
          ++s.unresolved_entries;
          ++s.unresolved_by_reason[std::string(resolver::to_string(*entry.unresolved))];
        }
      }
      s.sizing_gaps += m.size.sizing_gaps.size();
      s.long_line_releases += m.size.long_lines ? 1 : 0;
      s.l_trans1_total += m.size.l_trans1;
      s.l_trans1_dedup_total += m.size.l_trans1_dedup;
      const auto& v = profile_of(m, config.active_mode());
      s.trans1_vulns_total += v.trans1_count;
      s.distinct_vulns_total += v.distinct_count;
    }
  }
  s.releases = rows.size();

  for (const std::string& group : kGroups) {
    std::vector<double> lam, lam2, own, dir, trans1, rho, interval;
    std::size_t n = 0;
    for (const auto& row : rows) {
      if (!in_group(row, group)) {
        continue;
      }
      ++n;
      if (row.lambda_dir) lam.push_back(*row.lambda_dir);
      if (row.lambda_dir_trans1) lam2.push_back(*row.lambda_dir_trans1);
      own.push_back(static_cast<double>(row.l_own));
      dir.push_back(static_cast<double>(row.l_dir));
      trans1.push_back(static_cast<double>(row.l_trans1));
      if (row.rho) rho.push_back(*row.rho);
      if (row.interval_days) interval.push_back(*row.interval_days);
    }
    s.group_sizes[group] = n;
    if (n == 0) {
      continue;
    }
    auto& m = s.medians[group];
    add_median(m, "lambda_dir", lam);
    add_median(m, "lambda_dir_trans1", lam2);
    add_median(m, "l_own", own);
    add_median(m, "l_dir", dir);
    add_median(m, "l_trans1", trans1);
    add_median(m, "rho", rho);
    add_median(m, "interval_days", interval);
  }
  for (const auto& row : rows) {
    s.zero_own_releases += row.l_own == 0 ? 1 : 0;
  }

  std::vector<double> lam, own, small, large;
  for (const auto& row : rows) {
    if (!row.lambda_dir) {
      continue;
    }
    lam.push_back(*row.lambda_dir);
    own.push_back(static_cast<double>(row.l_own));
    (row.group == stats::SizeGroup::Large ? large : small).push_back(*row.lambda_dir);
  }
  try {
    s.spearman = stats::spearman(lam, own);
    s.spearman_status = "ok";
  } catch (const DomainError& e) {
    s.spearman_status = e.what();
  }
  if (small.size() < 2 || large.size() < 2) {
    s.cohens_d_status = "each group needs at least 2 releases";
  } else {
    try {
      s.cohens_d = stats::cohens_d(small, large);
      s.cohens_d_status = "ok";
    } catch (const DomainError& e) {
      s.cohens_d_status = e.what();
    }
  }
  return s;
}

}  // namespace

AnalysisBundle analyze(const corpus::Corpus& corpus, const vulnmatch::AdvisoryIndex& advisories,
                       const AnalysisConfig& config) {
  AnalysisBundle bundle;
  bundle.config = config;
  const std::vector<PackageTimeline> timelines = measure_corpus(corpus, advisories, config);

  for (const auto& p : timelines) {
    for (std::size_t i = 0; i < p.measurements.size(); ++i) {
      bundle.rows.push_back(make_row(i == 0 ? nullptr : &p.measurements[i - 1], p.measurements[i], config));
    }
  }

  const std::vector<metrics::Mode> modes = analysed_modes(config);
  for (const std::string& group : kGroups) {
    GroupRegression reg;
    reg.group = group;
    for (metrics::Mode mode : modes) {
      reg.fits.push_back(fit_group(timelines, bundle.rows, group, mode, config));
    }
    bundle.regressions.push_back(std::move(reg));
  }
  for (metrics::Mode mode : modes) {
    for (auto& c : contingencies(timelines, bundle.rows, mode)) {
      bundle.contingencies.push_back(std::move(c));
    }
  }
  for (const std::string& group : kGroups) {
    bundle.kdes.push_back(kde_for(bundle.rows, group));
  }
  bundle.vuln_sources = vuln_sources(timelines, bundle.rows, config.active_mode());
  bundle.summary = summarize(corpus, timelines, bundle.rows, config);
  return bundle;
}

AnalysisBundle run_pipeline(const AnalysisConfig& config) {
  config.validate();
  const corpus::Corpus corpus = corpus::load_corpus(config.corpus_path);
  if (corpus.registry.packages().empty()) {
    throw DataError(fmt::format("corpus '{}' contains no packages", config.corpus_path.string()));
  }
  vulnmatch::AdvisoryIndex advisories;
  if (!config.advisory_path.empty()) {
    advisories = vulnmatch::AdvisoryIndex(vulnmatch::load_advisories(config.advisory_path));
  }
  return analyze(corpus, advisories, config);
}

// --- emission --------------------------------------------------------------

namespace {

json number(double v) {
  return std::isfinite(v) ? json(v) : json(nullptr);
}

json number(const std::optional<double>& v) {
  return v ? number(*v) : json(nullptr);
}

std::string cell(double v) {
  return std::isfinite(v) ? fmt::format("{}", v) : std::string();
}

std::string cell(const std::optional<double>& v) {
  return v ? cell(*v) : std::string();
}

json tally_json(const stats::ExclusionTally& t) {
  return {{"missing_prev", t.missing_prev},
          {"missing_leverage", t.missing_leverage},
          {"zero_leverage", t.zero_leverage},
          {"no_change", t.no_change},
          {"non_finite", t.non_finite},
          {"total", t.total()}};
}

json regression_json(const GroupRegression& reg) {
  json fits = json::object();
  for (const auto& f : reg.fits) {
    json j = {{"status", f.status}, {"n_rows", f.n_rows}, {"excluded", tally_json(f.excluded)}};
    if (f.fit) {
      json terms = json::array();
      for (const auto& t : f.fit->terms) {
        terms.push_back({{"name", t.name},
                         {"coefficient", number(t.coefficient)},
                         {"std_error", number(t.std_error)},
                         {"t_stat", number(t.t_stat)},
                         {"p_value", number(t.p_value)}});
      }
      j["terms"] = std::move(terms);
      j["r_squared"] = number(f.fit->r_squared);
      j["adj_r_squared"] = number(f.fit->adj_r_squared);
      j["rmse"] = number(f.fit->rmse);
    }
    if (!f.collinear.empty()) {
      j["collinear"] = f.collinear;
    }
    fits[std::string(metrics::to_string(f.mode))] = std::move(j);
  }
  return {{"schema_version", kSchemaVersion}, {"group", reg.group}, {"fits", std::move(fits)}};
}

json contingency_json(const ContingencyReport& c) {
  json thresholds = json::object();
  for (const auto& [g, t] : c.thresholds) {
    thresholds[g] = number(t);
  }
  return {{"schema_version", kSchemaVersion},
          {"group", c.group},
          {"mode", metrics::to_string(c.mode)},
          {"a", c.table.a},
          {"b", c.table.b},
          {"c", c.table.c},
          {"d", c.table.d},
          {"odds_ratio", number(c.odds_ratio)},
          {"haldane_odds_ratio", number(c.haldane_odds_ratio)},
          {"p_value", number(c.fisher.p_value)},
          {"fisher_degenerate", c.fisher.degenerate},
          {"thresholds", std::move(thresholds)},
          {"status", c.status}};
}

json config_json(const AnalysisConfig& c) {
  return {{"levels", c.levels},
          {"kloc_threshold", c.kloc_threshold},
          {"policy", resolver::to_string(c.policy)},
          {"log_offset", number(c.log_offset)},
          {"published_before", c.published_before ? json(format_timestamp(*c.published_before)) : json(nullptr)},
          {"dedup", c.dedup},
          {"exclude_globs", c.exclude_globs},
          {"exclude_all_prereleases", c.exclude_all_prereleases},
          {"seed", c.seed}};
}

std::string dump(const json& j) {
  return j.dump(2) + "\n";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.close();
  if (!out) {
    throw DataError(fmt::format("cannot write '{}'", path.string()));
  }
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string scatter_csv(const std::vector<ReleaseRow>& rows) {
  std::string out = "package,version,l_own,lambda_dir,lambda_dir_trans1,group\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{},{}\n", csv::quote(r.package), csv::quote(r.version), r.l_own,
                       cell(r.lambda_dir), cell(r.lambda_dir_trans1), stats::to_string(r.group));
  }
  return out;
}

std::string kde_csv(const KdeReport& k) {
  std::string out = "grid,density\n";
  for (std::size_t i = 0; i < k.density.size(); ++i) {
    out += fmt::format("{},{}\n", cell(k.grid[i]), cell(k.density[i]));
  }
  return out;
}

}  // namespace

std::string releases_csv(const std::vector<ReleaseRow>& rows) {
  std::string out = join(release_columns(), ",") + "\n";
  for (const auto& r : rows) {
    const std::vector<std::string> fields = {csv::quote(r.package),
                                             csv::quote(r.version),
                                             format_timestamp(r.published_at),
                                             std::to_string(r.l_own),
                                             std::to_string(r.l_dir),
                                             std::to_string(r.l_trans1),
                                             cell(r.lambda_dir),
                                             cell(r.lambda_dir_trans1),
                                             cell(r.rho),
                                             cell(r.theta_deg),
                                             cell(r.interval_days),
                                             std::to_string(r.own_vulns),
                                             std::to_string(r.dir_vulns),
                                             std::to_string(r.trans1_vulns),
                                             r.is_vulnerable ? "true" : "false",
                                             csv::quote(join(r.flags, ";")),
                                             std::string(stats::to_string(r.group))};
    out += join(fields, ",") + "\n";
  }
  return out;
}

std::string summary_json(const AnalysisBundle& bundle) {
  const Summary& s = bundle.summary;
  json medians = json::object();
  for (const auto& [group, metrics_] : s.medians) {
    for (const auto& [metric, value] : metrics_) {
      medians[group][metric] = number(value);
    }
  }
  json thresholds = json::object();
  for (const auto& c : bundle.contingencies) {
    for (const auto& [g, t] : c.thresholds) {
      thresholds[std::string(metrics::to_string(c.mode))][g] = number(t);
    }
  }
  json kde = json::object();
  for (const auto& k : bundle.kdes) {
    kde[k.group] = {{"samples", k.samples}, {"bandwidth", number(k.bandwidth)}, {"status", k.status}};
  }
  json sources = json::array();
  for (const auto& v : bundle.vuln_sources) {
    json sev = json::object();
    for (std::size_t i = 0; i < v.by_severity.size(); ++i) {
      sev[std::string(vulnmatch::to_string(static_cast<vulnmatch::Severity>(i)))] = v.by_severity[i];
    }
    sources.push_back({{"group", v.group},
                       {"leverage_class", v.leverage_class},
                       {"releases", v.releases},
                       {"own", v.own},
                       {"dir", v.dir},
                       {"trans1", v.trans1},
                       {"by_severity", std::move(sev)}});
  }
  std::size_t excluded = 0;
  for (const auto& [reason, n] : s.exclusions) {
    excluded += n;
  }
  const json doc = {
      {"schema_version", kSchemaVersion},
      {"config", config_json(bundle.config)},
      {"packages", s.packages},
      {"ingested_versions", s.ingested_versions},
      {"releases", s.releases},
      {"exclusions", s.exclusions},
      {"excluded_versions", excluded},
      {"unresolved_entries", s.unresolved_entries},
      {"unresolved_by_reason", s.unresolved_by_reason},
      {"sizing_gaps", s.sizing_gaps},
      {"zero_own_releases", s.zero_own_releases},
      {"long_line_releases", s.long_line_releases},
      {"l_trans1_total", s.l_trans1_total},
      {"l_trans1_dedup_total", s.l_trans1_dedup_total},
      {"trans1_vulns_total", s.trans1_vulns_total},
      {"distinct_vulns_total", s.distinct_vulns_total},
      {"group_sizes", s.group_sizes},
      {"medians", std::move(medians)},
      {"thresholds", std::move(thresholds)},
      {"spearman",
       {{"rho", number(s.spearman ? std::optional(s.spearman->rho) : std::nullopt)},
        {"p_value", number(s.spearman ? std::optional(s.spearman->p_value) : std::nullopt)},
        {"status", s.spearman_status}}},
      {"cohens_d", {{"value", number(s.cohens_d)}, {"status", s.cohens_d_status}}},
      {"kde", std::move(kde)},
      {"vulnerability_sources", std::move(sources)},
      {"warnings", s.warnings}};
  return dump(doc);
}

std::vector<std::filesystem::path> emit_reports(const AnalysisBundle& bundle, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw DataError(fmt::format("cannot create output directory '{}'", dir.string()));
  }
  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& name, const std::string& content) {
    write_file(dir / name, content);
    written.push_back(dir / name);
  };
  emit("releases.csv", releases_csv(bundle.rows));
  for (const auto& reg : bundle.regressions) {
    emit(fmt::format("regression_{}.json", reg.group), dump(regression_json(reg)));
  }
  for (const auto& c : bundle.contingencies) {
    emit(fmt::format("contingency_{}_{}.json", c.group, metrics::to_string(c.mode)), dump(contingency_json(c)));
  }
  for (const auto& k : bundle.kdes) {
    emit(fmt::format("kde_{}.csv", k.group), kde_csv(k));
  }
  emit("scatter_leverage_vs_own.csv", scatter_csv(bundle.rows));
  emit("summary.json", summary_json(bundle));
  return written;
}

}  // namespace tlev::pipeline
