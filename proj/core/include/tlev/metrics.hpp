#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tlev/sizer.hpp"

namespace tlev::metrics {

/// Which dependency code counts as borrowed.
enum class Mode {
  Direct,        // l_dir
  DirectTrans1,  // l_dir + l_trans1
};

std::string_view to_string(Mode mode);

/// Borrowed-to-own code ratio over direct dependencies: l_dir / l_own.
/// Throws DomainError when l_own is zero.
double technical_leverage(const sizer::SizeProfile& profile);

/// (l_dir + l_trans1) / l_own. Throws DomainError when l_own is zero.
double leverage_with_trans1(const sizer::SizeProfile& profile);

double leverage(const sizer::SizeProfile& profile, Mode mode);

/// Dependency size under `mode`.
sizer::Lines dependency_size(const sizer::SizeProfile& profile, Mode mode);

/// Size change between two consecutive releases, in polar form over the
/// (dependency, own) plane.
///
/// theta_deg is measured from the positive dependency axis, positive when
/// own code grew, in (-180, 180]. It is absent when nothing changed
/// (rho == 0) since the angle is undefined there.
struct ChangeVector {
  std::int64_t delta_own = 0;
  std::int64_t delta_dep = 0;
  double rho = 0.0;
  std::optional<double> theta_deg;
};

ChangeVector change_vector(const sizer::SizeProfile& previous, const sizer::SizeProfile& current, Mode mode);

/// Polar form of raw deltas; `change_vector` delegates here.
ChangeVector change_vector_from_deltas(std::int64_t delta_dep, std::int64_t delta_own);

enum class Direction {
  GrowDeps,    // 0°
  GrowOwn,     // 90°
  ShrinkDeps,  // 180°
  ShrinkOwn,   // -90°
  MixedQ1,     // (0°, 90°): both grow
  MixedQ2,     // (90°, 180°): own grows, deps shrink
  MixedQ3,     // (-180°, -90°): both shrink
  MixedQ4,     // (-90°, 0°): deps grow, own shrinks
  NoChange,
};

std::string_view to_string(Direction direction);

/// Maps an angle to one of the four axis directions (within 1e-9°) or the
/// open quadrant that contains it.
Direction classify_direction(std::optional<double> theta_deg);

}  // namespace tlev::metrics
