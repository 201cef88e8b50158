#include "tlev/metrics.hpp"

#include <cmath>
#include <numbers>

#include "tlev/error.hpp"

namespace tlev::metrics {

std::string_view to_string(Mode mode) {
  return mode == Mode::Direct ? "dir" : "dir_trans1";
}

double technical_leverage(const sizer::SizeProfile& profile) {
  if (profile.l_own == 0) {
    throw DomainError("technical leverage is undefined for zero own code size");
  }
  return static_cast<double>(profile.l_dir) / static_cast<double>(profile.l_own);
}

double leverage_with_trans1(const sizer::SizeProfile& profile) {
  if (profile.l_own == 0) {
    throw DomainError("technical leverage is undefined for zero own code size");
  }
  return static_cast<double>(profile.l_dir + profile.l_trans1) / static_cast<double>(profile.l_own);
}

double leverage(const sizer::SizeProfile& profile, Mode mode) {
  return mode == Mode::Direct ? technical_leverage(profile) : leverage_with_trans1(profile);
}

sizer::Lines dependency_size(const sizer::SizeProfile& profile, Mode mode) {
  return mode == Mode::Direct ? profile.l_dir : profile.l_dir + profile.l_trans1;
}

ChangeVector change_vector_from_deltas(std::int64_t delta_dep, std::int64_t delta_own) {
  ChangeVector v;
  v.delta_dep = delta_dep;
  v.delta_own = delta_own;
  const auto dd = static_cast<long double>(delta_dep);
  const auto dout = static_cast<long double>(delta_own);
  const long double sum = dd * dd + dout * dout;
  // Below 2^53 the sum is an exact double and the double sqrt is correctly
  // rounded; going through long double would round twice.
  v.rho = sum <= 9007199254740992.0L ? std::sqrt(static_cast<double>(sum)) : static_cast<double>(std::sqrt(sum));
  if (delta_dep == 0 && delta_own == 0) {
    return v;
  }
  // arccos(dep / rho), negated unless own code grew. atan2 gives the same
  // angle without arccos's loss of precision near the axes.
  long double theta = std::atan2(std::fabs(dout), dd) * 180.0L / std::numbers::pi_v<long double>;
  if (delta_own <= 0) {
    theta = -theta;
  }
  if (theta == 0.0L) {
    theta = 0.0L;  // drops the sign of -0
  } else if (theta <= -180.0L) {
    theta = 180.0L;
  }
  v.theta_deg = static_cast<double>(theta);
  return v;
}

ChangeVector change_vector(const sizer::SizeProfile& previous, const sizer::SizeProfile& current, Mode mode) {
  const auto own = static_cast<std::int64_t>(current.l_own) - static_cast<std::int64_t>(previous.l_own);
  const auto dep = static_cast<std::int64_t>(dependency_size(current, mode)) -
                   static_cast<std::int64_t>(dependency_size(previous, mode));
  return change_vector_from_deltas(dep, own);
}

std::string_view to_string(Direction direction) {
  switch (direction) {
    case Direction::GrowDeps:
      return "grow-deps";
    case Direction::GrowOwn:
      return "grow-own";
    case Direction::ShrinkDeps:
      return "shrink-deps";
    case Direction::ShrinkOwn:
      return "shrink-own";
    case Direction::MixedQ1:
      return "mixed-q1";
    case Direction::MixedQ2:
      return "mixed-q2";
    case Direction::MixedQ3:
      return "mixed-q3";
    case Direction::MixedQ4:
      return "mixed-q4";
    case Direction::NoChange:
      return "no-change";
  }
  return "unknown";
}

Direction classify_direction(std::optional<double> theta_deg) {
  if (!theta_deg) {
    return Direction::NoChange;
  }
  constexpr double kAxisTolerance = 1e-9;
  const double t = *theta_deg;
  auto near = [&](double axis) { return std::fabs(t - axis) <= kAxisTolerance; };
  if (near(0.0)) return Direction::GrowDeps;
  if (near(90.0)) return Direction::GrowOwn;
  if (near(180.0) || near(-180.0)) return Direction::ShrinkDeps;
  if (near(-90.0)) return Direction::ShrinkOwn;
  if (t > 0.0 && t < 90.0) return Direction::MixedQ1;
  if (t > 90.0) return Direction::MixedQ2;
  if (t < -90.0) return Direction::MixedQ3;
  return Direction::MixedQ4;
}

}  // namespace tlev::metrics
