#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tlev/error.hpp"

namespace tlev::stats {

// ---------------------------------------------------------------------------
// Size groups and medians

enum class SizeGroup { SmallMedium, Large };

std::string_view to_string(SizeGroup group);

inline constexpr std::uint64_t kDefaultKlocThreshold = 10000;

/// `l_own < threshold` is small-medium, anything else large. Throws
/// DomainError for a zero threshold.
SizeGroup size_group(std::uint64_t l_own, std::uint64_t threshold = kDefaultKlocThreshold);

/// Splits `items` into (small-medium, large) by `own_size(item)`, keeping
/// input order inside each group.
template <class T, class OwnSize>
std::pair<std::vector<T>, std::vector<T>> group_by_size(std::span<const T> items, OwnSize own_size,
                                                        std::uint64_t threshold = kDefaultKlocThreshold) {
  std::pair<std::vector<T>, std::vector<T>> out;
  for (const T& item : items) {
    if (size_group(own_size(item), threshold) == SizeGroup::SmallMedium) {
      out.first.push_back(item);
    } else {
      out.second.push_back(item);
    }
  }
  return out;
}

/// Median; even counts average the two central values. Throws DomainError
/// on an empty sample.
double median(std::span<const double> values);

// ---------------------------------------------------------------------------
// Release-interval regression

/// One observation of the release-interval model, all terms base-10 logs
/// or trig values of degrees.
struct DesignRow {
  double y = 0.0;       // log10(interval_days + 1)
  double x_prev = 0.0;  // log10(prev_interval_days + 1)
  double x_lev = 0.0;   // log10(leverage)
  double x_rho = 0.0;   // log10(rho)
  double x_cos = 0.0;   // cos(theta - 45°)
  double x_sin = 0.0;   // sin(theta)
};

/// A consecutive release pair as the regression sees it. Leverage is taken
/// at the newer release; rho and theta describe the change into it.
struct PairObservation {
  double interval_days = 0.0;
  std::optional<double> leverage;  // absent when own size is zero
  double rho = 0.0;
  std::optional<double> theta_deg;  // absent for no-change pairs
};

struct ExclusionTally {
  std::size_t missing_prev = 0;
  std::size_t missing_leverage = 0;
  std::size_t zero_leverage = 0;
  std::size_t no_change = 0;
  std::size_t non_finite = 0;

  [[nodiscard]] std::size_t total() const noexcept {
    return missing_prev + missing_leverage + zero_leverage + no_change + non_finite;
  }
  ExclusionTally& operator+=(const ExclusionTally& other);
};

struct DesignOptions {
  /// When set, log terms of leverage and rho use log10(x + offset) and zero
  /// values stay in the design instead of being excluded.
  std::optional<double> log_offset{};
  /// Pairs for which this returns false yield neither a row nor a tally
  /// entry, but still supply the previous interval to their successor.
  std::function<bool(std::size_t)> include{};
};

struct DesignMatrix {
  std::vector<DesignRow> rows;
  ExclusionTally excluded;

  void append(const DesignMatrix& other);
};

/// Rows for one package's ordered pairs. The first pair only supplies the
/// previous interval for the second and is tallied as missing-prev.
DesignMatrix build_design_matrix(std::span<const PairObservation> pairs, const DesignOptions& options = {});

inline constexpr double kNoValue = std::numeric_limits<double>::quiet_NaN();

struct RegressionTerm {
  std::string name;
  double coefficient = 0.0;
  double std_error = 0.0;
  double t_stat = kNoValue;   // NaN when std_error is zero
  double p_value = kNoValue;  // two-sided, NaN when t_stat is
};

struct RegressionFit {
  std::vector<RegressionTerm> terms;  // intercept first
  double r_squared = 0.0;
  double adj_r_squared = 0.0;
  double rmse = 0.0;
  std::size_t n_rows = 0;
  std::size_t n_excluded = 0;
};

/// Raised when the design matrix has fewer rows than terms + 1.
class InsufficientRowsError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Raised for rank-deficient designs; the message names the columns that
/// are linear combinations of the others.
class CollinearityError : public DomainError {
public:
  CollinearityError(const std::string& message, std::vector<std::string> columns)
      : DomainError(message), columns_(std::move(columns)) {}
  [[nodiscard]] const std::vector<std::string>& columns() const noexcept { return columns_; }

private:
  std::vector<std::string> columns_;
};

/// Ordinary least squares with an intercept prepended to `regressors`.
/// Solved by column-pivoted QR; standard errors from sigma^2 (X'X)^-1 with
/// n - p degrees of freedom. Rows are put in a canonical order first, so any
/// permutation of the input gives a bit-identical fit.
RegressionFit fit_ols(const Eigen::MatrixXd& regressors, const Eigen::VectorXd& y,
                      std::span<const std::string> regressor_names);

/// Term names of the release-interval model, intercept excluded.
std::vector<std::string> release_model_terms();

/// Fits the release-interval model over `design.rows`.
RegressionFit fit_release_model(const DesignMatrix& design);

/// Two-sided p-value of a t statistic with `dof` degrees of freedom.
double student_t_two_sided_p(double t, double dof);

// ---------------------------------------------------------------------------
// Contingency analysis

/// a: high leverage & vulnerable, b: high & not, c: low & vulnerable,
/// d: low & not.
struct ContingencyTable {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint64_t d = 0;
};

/// Raised when b, c or d is zero. Carries the Haldane-corrected ratio.
class ZeroCellError : public DomainError {
public:
  ZeroCellError(const std::string& message, double haldane) : DomainError(message), haldane_(haldane) {}
  [[nodiscard]] double haldane() const noexcept { return haldane_; }

private:
  double haldane_;
};

/// (a/b) / (c/d). Throws ZeroCellError when b, c or d is zero.
double odds_ratio(const ContingencyTable& t);

/// Odds ratio after adding 0.5 to every cell.
double haldane_odds_ratio(const ContingencyTable& t);

struct FisherResult {
  double p_value = 1.0;
  bool degenerate = false;  // some margin was zero; p fixed at 1
};

/// Two-sided Fisher exact test: total probability of all tables with the
/// observed margins that are no more likely than the observed one.
FisherResult fisher_exact(const ContingencyTable& t);

// ---------------------------------------------------------------------------
// Correlation, effect size, density

/// 1-based ranks with ties given their average rank.
std::vector<double> fractional_ranks(std::span<const double> values);

struct SpearmanResult {
  double rho = 0.0;
  double p_value = 1.0;
};

/// Throws DomainError for mismatched lengths, fewer than 3 samples, or a
/// constant input.
SpearmanResult spearman(std::span<const double> x, std::span<const double> y);

/// (mean1 - mean2) / pooled sd, pooled over n1 + n2 - 2 degrees of freedom.
double cohens_d(std::span<const double> group1, std::span<const double> group2);

/// Gaussian kernel density estimate.
class GaussianKde {
public:
  /// Bandwidth defaults to Scott's rule, sd * n^(-1/5), which needs at
  /// least 2 samples with nonzero variance. An explicit bandwidth accepts a
  /// single sample. Throws DomainError otherwise.
  explicit GaussianKde(std::vector<double> samples, std::optional<double> bandwidth = std::nullopt);

  [[nodiscard]] double bandwidth() const noexcept { return bandwidth_; }
  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] std::vector<double> evaluate(std::span<const double> grid) const;

private:
  std::vector<double> samples_;
  double bandwidth_ = 0.0;
};

/// `count` evenly spaced points from `first` to `last` inclusive.
std::vector<double> linspace(double first, double last, std::size_t count);

}  // namespace tlev::stats
