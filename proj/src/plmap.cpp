#include "pathlab/plmap.hpp"

#include <algorithm>

#include "pathlab/error.hpp"

namespace pathlab {

namespace {

// Index k with points[k].time <= t <= points[k+1].time.
std::size_t locate(const PLMap& map, const Rational& t) {
  if (map.points.empty() || !map.contains(t))
    throw Error(ErrorKind::InvalidPath, "time " + t.get_str() + " outside the map's domain");
  auto it = std::upper_bound(map.points.begin(), map.points.end(), t,
                             [](const Rational& x, const Breakpoint& b) { return x < b.time; });
  return static_cast<std::size_t>(it - map.points.begin()) - 1;
}

Rational lerp(const Rational& t0, const Rational& x0, const Rational& t1, const Rational& x1,
              const Rational& t) {
  if (t == t0) return x0;
  if (t == t1) return x1;
  return x0 + (x1 - x0) * (t - t0) / (t1 - t0);
}

}  // namespace

RationalVector PLMap::eval(const Rational& t) const {
  const std::size_t k = locate(*this, t);
  if (k + 1 >= points.size() || points[k].time == t) return points[k].value;
  const auto& p = points[k];
  const auto& q = points[k + 1];
  RationalVector out(p.value.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = lerp(p.time, p.value[j], q.time, q.value[j], t);
  return out;
}

Rational PLMap::eval(const Rational& t, int coord) const {
  const std::size_t k = locate(*this, t);
  if (k + 1 >= points.size() || points[k].time == t) return points[k].value.at(coord);
  const auto& p = points[k];
  const auto& q = points[k + 1];
  return lerp(p.time, p.value.at(coord), q.time, q.value.at(coord), t);
}

void check_plmap(const PLMap& map, int width) {
  if (map.points.empty()) throw Error(ErrorKind::InvalidPath, "empty breakpoint list");
  for (std::size_t k = 0; k < map.points.size(); ++k) {
    const auto& p = map.points[k];
    if (static_cast<int>(p.value.size()) != width)
      throw Error(ErrorKind::SizeMismatch, "breakpoint has " + std::to_string(p.value.size()) +
                                               " coordinates, expected " + std::to_string(width));
    for (const auto& x : p.value)
      if (x < 0 || x > 1)
        throw Error(ErrorKind::InvalidPath, "coordinate " + x.get_str() + " outside [0,1]");
    if (k == 0) continue;
    const auto& prev = map.points[k - 1];
    if (!(prev.time < p.time))
      throw Error(ErrorKind::InvalidPath, "breakpoint times must be strictly increasing");
    for (int j = 0; j < width; ++j)
      if (p.value[j] < prev.value[j])
        throw Error(ErrorKind::InvalidPath, "coordinate " + std::to_string(j + 1) +
                                                " decreases at time " + p.time.get_str());
  }
}

PLMap simplify(const PLMap& map) {
  if (map.points.size() <= 2) return map;
  PLMap out;
  out.points.push_back(map.points.front());
  for (std::size_t k = 1; k + 1 < map.points.size(); ++k) {
    const auto& a = out.points.back();
    const auto& b = map.points[k];
    const auto& c = map.points[k + 1];
    bool collinear = true;
    for (std::size_t j = 0; j < b.value.size() && collinear; ++j)
      collinear = (b.value[j] - a.value[j]) * (c.time - b.time) ==
                  (c.value[j] - b.value[j]) * (b.time - a.time);
    if (!collinear) out.points.push_back(b);
  }
  out.points.push_back(map.points.back());
  return out;
}

PLMap restrict_to(const PLMap& map, const Rational& a, const Rational& b) {
  if (b < a || !map.contains(a) || !map.contains(b))
    throw Error(ErrorKind::InvalidPath, "restriction interval outside the domain");
  PLMap out;
  out.points.push_back({a, map.eval(a)});
  for (const auto& p : map.points)
    if (a < p.time && p.time < b) out.points.push_back(p);
  if (a < b) out.points.push_back({b, map.eval(b)});
  return out;
}

bool same_function(const PLMap& a, const PLMap& b) {
  if (a.points.empty() || b.points.empty()) return a.points.empty() && b.points.empty();
  if (a.start_time() != b.start_time() || a.end_time() != b.end_time()) return false;
  if (a.width() != b.width()) return false;
  for (const auto& t : merged_times({&a, &b}))
    if (a.eval(t) != b.eval(t)) return false;
  return true;
}

PLMap drop_coordinates(const PLMap& map, const std::vector<int>& coords) {
  std::vector<bool> drop(map.width(), false);
  for (int j : coords) drop.at(j) = true;
  PLMap out;
  out.points.reserve(map.points.size());
  for (const auto& p : map.points) {
    Breakpoint q{p.time, {}};
    for (std::size_t j = 0; j < p.value.size(); ++j)
      if (!drop[j]) q.value.push_back(p.value[j]);
    out.points.push_back(std::move(q));
  }
  return out;
}

std::vector<Rational> merged_times(const std::vector<const PLMap*>& maps) {
  std::vector<Rational> out;
  for (const auto* m : maps)
    for (const auto& p : m->points) out.push_back(p.time);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pathlab
