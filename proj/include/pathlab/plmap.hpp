#pragma once

#include <vector>

#include "pathlab/rational.hpp"

namespace pathlab {

struct Breakpoint {
  Rational time;
  RationalVector value;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Piecewise-linear map from a closed time interval to [0,1]^width,
/// linear between consecutive breakpoints. A single breakpoint describes a
/// one-point domain.
struct PLMap {
  std::vector<Breakpoint> points;

  int width() const { return points.empty() ? 0 : static_cast<int>(points.front().value.size()); }
  const Rational& start_time() const { return points.front().time; }
  const Rational& end_time() const { return points.back().time; }
  const RationalVector& start_value() const { return points.front().value; }
  const RationalVector& end_value() const { return points.back().value; }
  bool contains(const Rational& t) const { return start_time() <= t && t <= end_time(); }

  /// Value at `t`; throws InvalidPath outside the domain.
  RationalVector eval(const Rational& t) const;
  Rational eval(const Rational& t, int coord) const;

  friend bool operator==(const PLMap&, const PLMap&) = default;
};

/// Throws InvalidPath/SizeMismatch unless the map is nonempty, has strictly
/// increasing times, the given width, monotone coordinates and values in [0,1].
void check_plmap(const PLMap& map, int width);

/// Drops interior breakpoints at which no coordinate changes slope.
PLMap simplify(const PLMap& map);

/// Restriction to [a, b], a <= b inside the domain.
PLMap restrict_to(const PLMap& map, const Rational& a, const Rational& b);

/// Same domain and equal values everywhere.
bool same_function(const PLMap& a, const PLMap& b);

/// Removes the listed coordinates (0-based).
PLMap drop_coordinates(const PLMap& map, const std::vector<int>& coords);

/// Sorted union of the breakpoint times of the maps.
std::vector<Rational> merged_times(const std::vector<const PLMap*>& maps);

}  // namespace pathlab
