#include "tlev/stats.hpp"

#include <Eigen/Dense>
#include <boost/math/special_functions/beta.hpp>
#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace tlev::stats {

std::string_view to_string(SizeGroup group) {
  return group == SizeGroup::SmallMedium ? "small_medium" : "large";
}

SizeGroup size_group(std::uint64_t l_own, std::uint64_t threshold) {
  if (threshold == 0) {
    throw DomainError("size threshold must be positive");
  }
  return l_own < threshold ? SizeGroup::SmallMedium : SizeGroup::Large;
}

double median(std::span<const double> values) {
  if (values.empty()) {
    throw DomainError("median of an empty sample");
  }
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n % 2 == 1) {
    return v[n / 2];
  }
  return (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

// --- design matrix ---------------------------------------------------------

ExclusionTally& ExclusionTally::operator+=(const ExclusionTally& other) {
  missing_prev += other.missing_prev;
  missing_leverage += other.missing_leverage;
  zero_leverage += other.zero_leverage;
  no_change += other.no_change;
  non_finite += other.non_finite;
  return *this;
}

void DesignMatrix::append(const DesignMatrix& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  excluded += other.excluded;
}

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

bool row_is_finite(const DesignRow& r) {
  return std::isfinite(r.y) && std::isfinite(r.x_prev) && std::isfinite(r.x_lev) && std::isfinite(r.x_rho) &&
         std::isfinite(r.x_cos) && std::isfinite(r.x_sin);
}

}  // namespace

DesignMatrix build_design_matrix(std::span<const PairObservation> pairs, const DesignOptions& options) {
  DesignMatrix out;
  const double offset = options.log_offset.value_or(0.0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const PairObservation& p = pairs[i];
    if (options.include && !options.include(i)) {
      continue;
    }
    if (i == 0) {
      ++out.excluded.missing_prev;
      continue;
    }
    if (!p.leverage) {
      ++out.excluded.missing_leverage;
      continue;
    }
    if (*p.leverage == 0.0 && !options.log_offset) {
      ++out.excluded.zero_leverage;
      continue;
    }
    if (!p.theta_deg || (p.rho == 0.0 && !options.log_offset)) {
      ++out.excluded.no_change;
      continue;
    }
    DesignRow row;
    row.y = std::log10(p.interval_days + 1.0);
    row.x_prev = std::log10(pairs[i - 1].interval_days + 1.0);
    row.x_lev = std::log10(*p.leverage + offset);
    row.x_rho = std::log10(p.rho + offset);
    row.x_cos = std::cos((*p.theta_deg - 45.0) * kDegToRad);
    row.x_sin = std::sin(*p.theta_deg * kDegToRad);
    if (!row_is_finite(row)) {
      ++out.excluded.non_finite;
      continue;
    }
    out.rows.push_back(row);
  }
  return out;
}

// --- OLS ---------------------------------------------------------------------

double student_t_two_sided_p(double t, double dof) {
  if (std::isnan(t) || !(dof > 0.0)) {
    return kNoValue;
  }
  if (std::isinf(t)) {
    return 0.0;
  }
  const double x = dof / (dof + t * t);
  return boost::math::ibeta(dof / 2.0, 0.5, x);
}

RegressionFit fit_ols(const Eigen::MatrixXd& regressors, const Eigen::VectorXd& y,
                      std::span<const std::string> regressor_names) {
  const Eigen::Index n = regressors.rows();
  const Eigen::Index p = regressors.cols() + 1;
  if (y.size() != n || static_cast<Eigen::Index>(regressor_names.size()) + 1 != p) {
    throw DomainError("regression inputs have mismatched dimensions");
  }
  if (n <= p) {
    throw InsufficientRowsError(fmt::format("regression needs more than {} rows, got {}", p, n));
  }

  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(p));
  names.emplace_back("intercept");
  names.insert(names.end(), regressor_names.begin(), regressor_names.end());

  // Canonical row order: lexicographic on (y, regressors).
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (y(a) != y(b)) return y(a) < y(b);
    for (Eigen::Index j = 0; j < regressors.cols(); ++j) {
      if (regressors(a, j) != regressors(b, j)) return regressors(a, j) < regressors(b, j);
    }
    return false;
  });
  Eigen::MatrixXd X(n, p);
  Eigen::VectorXd Y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index src = order[static_cast<std::size_t>(i)];
    X(i, 0) = 1.0;
    X.block(i, 1, 1, p - 1) = regressors.row(src);
    Y(i) = y(src);
  }

  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  if (qr.rank() < p) {
    std::vector<std::string> collinear;
    for (Eigen::Index k = qr.rank(); k < p; ++k) {
      collinear.push_back(names[static_cast<std::size_t>(qr.colsPermutation().indices()(k))]);
    }
    std::sort(collinear.begin(), collinear.end());
    std::string joined;
    for (const auto& c : collinear) {
      joined += (joined.empty() ? "" : ", ") + c;
    }
    throw CollinearityError(fmt::format("design matrix is rank deficient; collinear columns: {}", joined),
                            std::move(collinear));
  }

  const Eigen::VectorXd beta = qr.solve(Y);
  const Eigen::VectorXd residuals = Y - X * beta;
  const double rss = residuals.squaredNorm();
  const double dof = static_cast<double>(n - p);
  const double sigma2 = rss / dof;

  // (X'X)^-1 = P R^-1 R^-T P' for X P = Q R.
  const Eigen::MatrixXd r = qr.matrixR().topLeftCorner(p, p).triangularView<Eigen::Upper>();
  const Eigen::MatrixXd r_inv =
      r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(p, p));
  const Eigen::MatrixXd cov_permuted = r_inv * r_inv.transpose();
  const auto& perm = qr.colsPermutation();
  const Eigen::MatrixXd xtx_inv = perm * cov_permuted * perm.transpose();

  RegressionFit fit;
  fit.n_rows = static_cast<std::size_t>(n);
  for (Eigen::Index j = 0; j < p; ++j) {
    RegressionTerm term;
    term.name = names[static_cast<std::size_t>(j)];
    term.coefficient = beta(j);
    term.std_error = std::sqrt(std::max(0.0, sigma2 * xtx_inv(j, j)));
    if (term.std_error > 0.0) {
      term.t_stat = term.coefficient / term.std_error;
      term.p_value = student_t_two_sided_p(term.t_stat, dof);
    }
    fit.terms.push_back(std::move(term));
  }

  const double mean_y = Y.mean();
  const double tss = (Y.array() - mean_y).square().sum();
  if (tss > 0.0) {
    fit.r_squared = std::clamp(1.0 - rss / tss, 0.0, 1.0);
  } else {
    fit.r_squared = rss == 0.0 ? 1.0 : 0.0;
  }
  fit.adj_r_squared = 1.0 - (1.0 - fit.r_squared) * static_cast<double>(n - 1) / dof;
  fit.rmse = std::sqrt(rss / static_cast<double>(n));
  return fit;
}

std::vector<std::string> release_model_terms() {
  return {"log_prev_interval", "log_leverage", "log_rho", "cos_theta_minus_45", "sin_theta"};
}

RegressionFit fit_release_model(const DesignMatrix& design) {
  const auto n = static_cast<Eigen::Index>(design.rows.size());
  Eigen::MatrixXd X(n, 5);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const DesignRow& r = design.rows[static_cast<std::size_t>(i)];
    y(i) = r.y;
    X(i, 0) = r.x_prev;
    X(i, 1) = r.x_lev;
    X(i, 2) = r.x_rho;
    X(i, 3) = r.x_cos;
    X(i, 4) = r.x_sin;
  }
  const auto names = release_model_terms();
  RegressionFit fit = fit_ols(X, y, names);
  fit.n_excluded = design.excluded.total();
  return fit;
}

// --- contingency -------------------------------------------------------------

double haldane_odds_ratio(const ContingencyTable& t) {
  const double a = static_cast<double>(t.a) + 0.5;
  const double b = static_cast<double>(t.b) + 0.5;
  const double c = static_cast<double>(t.c) + 0.5;
  const double d = static_cast<double>(t.d) + 0.5;
  return (a / b) / (c / d);
}

double odds_ratio(const ContingencyTable& t) {
  if (t.b == 0 || t.c == 0 || t.d == 0) {
    throw ZeroCellError(fmt::format("odds ratio undefined with a zero cell (a={}, b={}, c={}, d={})", t.a, t.b,
                                    t.c, t.d),
                        haldane_odds_ratio(t));
  }
  const double a = static_cast<double>(t.a);
  const double b = static_cast<double>(t.b);
  const double c = static_cast<double>(t.c);
  const double d = static_cast<double>(t.d);
  return (a / b) / (c / d);
}

FisherResult fisher_exact(const ContingencyTable& t) {
  const std::uint64_t row1 = t.a + t.b;
  const std::uint64_t row2 = t.c + t.d;
  const std::uint64_t col1 = t.a + t.c;
  const std::uint64_t col2 = t.b + t.d;
  if (row1 == 0 || row2 == 0 || col1 == 0 || col2 == 0) {
    return {1.0, true};
  }
  const std::uint64_t n = row1 + row2;
  // Support of the top-left cell given the margins.
  const std::uint64_t lo = col1 > row2 ? col1 - row2 : 0;
  const std::uint64_t hi = std::min(row1, col1);
  const std::size_t count = static_cast<std::size_t>(hi - lo + 1);

  // Unnormalised hypergeometric weights, built outward from the mode with the
  // ratio P(x+1)/P(x) = (row1-x)(col1-x) / ((x+1)(row2-col1+x+1)).
  std::vector<long double> weight(count, 0.0L);
  std::uint64_t mode = static_cast<std::uint64_t>(
      (static_cast<long double>(row1 + 1) * static_cast<long double>(col1 + 1)) / static_cast<long double>(n + 2));
  mode = std::clamp(mode, lo, hi);
  auto ratio_up = [&](std::uint64_t x) {
    const auto num = static_cast<long double>(row1 - x) * static_cast<long double>(col1 - x);
    const auto den = static_cast<long double>(x + 1) * static_cast<long double>(row2 + x + 1 - col1);
    return num / den;
  };
  weight[mode - lo] = 1.0L;
  for (std::uint64_t x = mode; x < hi; ++x) {
    weight[x + 1 - lo] = weight[x - lo] * ratio_up(x);
  }
  for (std::uint64_t x = mode; x > lo; --x) {
    weight[x - 1 - lo] = weight[x - lo] / ratio_up(x - 1);
  }

  const long double observed = weight[t.a - lo];
  const long double cutoff = observed * (1.0L + 1e-12L);
  long double total = 0.0L;
  long double tail = 0.0L;
  for (const long double w : weight) {
    total += w;
    if (w <= cutoff) {
      tail += w;
    }
  }
  return {static_cast<double>(std::min(1.0L, tail / total)), false};
}

// --- correlation, effect size, density -------------------------------------

std::vector<double> fractional_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) {
      ++j;
    }
    // Positions i..j (0-based) share rank ((i+1) + (j+1)) / 2.
    const double rank = static_cast<double>(i + j + 2) / 2.0;
    for (std::size_t k = i; k <= j; ++k) {
      ranks[order[k]] = rank;
    }
    i = j + 1;
  }
  return ranks;
}

SpearmanResult spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw DomainError("spearman inputs differ in length");
  }
  const std::size_t n = x.size();
  if (n < 3) {
    throw DomainError("spearman needs at least 3 paired samples");
  }
  const auto rx = fractional_ranks(x);
  const auto ry = fractional_ranks(y);
  // Ranks average to (n + 1) / 2 exactly, so the deviations are exact.
  const double mean = static_cast<double>(n + 1) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = rx[i] - mean;
    const double dy = ry[i] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw DomainError("spearman is undefined for a constant input");
  }
  SpearmanResult out;
  out.rho = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  if (std::fabs(out.rho) == 1.0) {
    out.p_value = 0.0;
  } else {
    const double dof = static_cast<double>(n - 2);
    const double t = out.rho * std::sqrt(dof / (1.0 - out.rho * out.rho));
    out.p_value = student_t_two_sided_p(t, dof);
  }
  return out;
}

namespace {

std::pair<double, double> mean_and_ss(std::span<const double> v) {
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) {
    ss += (x - mean) * (x - mean);
  }
  return {mean, ss};
}

}  // namespace

double cohens_d(std::span<const double> group1, std::span<const double> group2) {
  if (group1.size() < 2 || group2.size() < 2) {
    throw DomainError("cohen's d needs at least 2 samples per group");
  }
  const auto [m1, ss1] = mean_and_ss(group1);
  const auto [m2, ss2] = mean_and_ss(group2);
  const double pooled_var = (ss1 + ss2) / static_cast<double>(group1.size() + group2.size() - 2);
  if (!(pooled_var > 0.0)) {
    throw DomainError("cohen's d is undefined for zero pooled standard deviation");
  }
  return (m1 - m2) / std::sqrt(pooled_var);
}

GaussianKde::GaussianKde(std::vector<double> samples, std::optional<double> bandwidth)
    : samples_(std::move(samples)) {
  if (samples_.empty()) {
    throw DomainError("kernel density estimate needs at least one sample");
  }
  if (bandwidth) {
    if (!(*bandwidth > 0.0) || !std::isfinite(*bandwidth)) {
      throw DomainError("kernel bandwidth must be positive and finite");
    }
    bandwidth_ = *bandwidth;
    return;
  }
  if (samples_.size() < 2) {
    throw DomainError("Scott's rule needs at least 2 samples; pass an explicit bandwidth");
  }
  const auto [mean, ss] = mean_and_ss(samples_);
  const double sd = std::sqrt(ss / static_cast<double>(samples_.size() - 1));
  if (!(sd > 0.0)) {
    throw DomainError("samples have zero variance; pass an explicit bandwidth");
  }
  bandwidth_ = sd * std::pow(static_cast<double>(samples_.size()), -0.2);
}

double GaussianKde::operator()(double x) const {
  const double norm = 1.0 / (static_cast<double>(samples_.size()) * bandwidth_ * std::sqrt(2.0 * std::numbers::pi));
  double sum = 0.0;
  for (double s : samples_) {
    const double z = (x - s) / bandwidth_;
    sum += std::exp(-0.5 * z * z);
  }
  return sum * norm;
}

std::vector<double> GaussianKde::evaluate(std::span<const double> grid) const {
  std::vector<double> out;
  out.reserve(grid.size());
  for (double x : grid) {
    out.push_back((*this)(x));
  }
  return out;
}

std::vector<double> linspace(double first, double last, std::size_t count) {
  std::vector<double> out;
  if (count == 0) {
    return out;
  }
  if (count == 1) {
    return {first};
  }
  out.reserve(count);
  const double step = (last - first) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(i + 1 == count ? last : first + step * static_cast<double>(i));
  }
  return out;
}

}  // namespace tlev::stats
