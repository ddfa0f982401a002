#include <algorithm>

#include "pathlab/dpath.hpp"
#include "pathlab/error.hpp"

namespace pathlab {

void check_presentation(const PrecubicalSet& set, const PathPresentation& pres) {
  set.require_valid();
  if (pres.segments.empty()) throw Error(ErrorKind::InvalidPath, "path has no segments");
  for (std::size_t i = 0; i < pres.segments.size(); ++i) {
    const auto& seg = pres.segments[i];
    if (seg.cube.value >= set.size())
      throw Error(ErrorKind::InvalidPath, "segment refers to an unknown cube");
    check_plmap(seg.map, set.dim(seg.cube));
    if (i == 0) continue;
    const auto& prev = pres.segments[i - 1];
    if (prev.map.end_time() != seg.map.start_time())
      throw Error(ErrorKind::InvalidPath, "segment " + std::to_string(i + 1) +
                                              " does not start where segment " +
                                              std::to_string(i) + " ends");
    const Point left = canonical_point(set, {prev.cube, prev.map.end_value()});
    const Point right = canonical_point(set, {seg.cube, seg.map.start_value()});
    if (!(left == right))
      throw Error(ErrorKind::InvalidPath, "segments " + std::to_string(i) + " and " +
                                              std::to_string(i + 1) +
                                              " do not meet at the same point");
  }
}

Point point_at(const PrecubicalSet& set, const PathPresentation& pres, const Rational& t) {
  for (const auto& seg : pres.segments)
    if (seg.map.contains(t)) return canonical_point(set, {seg.cube, seg.map.eval(t)});
  throw Error(ErrorKind::InvalidPath, "time " + t.get_str() + " outside the path's domain");
}

Point start_point(const PrecubicalSet& set, const PathPresentation& pres) {
  const auto& s = pres.segments.front();
  return canonical_point(set, {s.cube, s.map.start_value()});
}

Point end_point(const PrecubicalSet& set, const PathPresentation& pres) {
  const auto& s = pres.segments.back();
  return canonical_point(set, {s.cube, s.map.end_value()});
}

bool is_bipointed(const PrecubicalSet& set, const PathPresentation& pres) {
  return start_point(set, pres) == Point{set.start(), {}} &&
         end_point(set, pres) == Point{set.end(), {}};
}

Rational path_length(const PrecubicalSet&, const PathPresentation& pres) {
  Rational len = 0;
  for (const auto& seg : pres.segments)
    len += coordinate_sum(seg.map.end_value()) - coordinate_sum(seg.map.start_value());
  return len;
}

PathPresentation naturalize(const PrecubicalSet&, const PathPresentation& pres) {
  PathPresentation out;
  Rational offset = 0;
  for (const auto& seg : pres.segments) {
    const Rational base = coordinate_sum(seg.map.start_value());
    Segment ns{seg.cube, {}};
    for (const auto& bp : seg.map.points) {
      Rational tau = offset + coordinate_sum(bp.value) - base;
      if (!ns.map.points.empty() && ns.map.points.back().time == tau) continue;
      ns.map.points.push_back({std::move(tau), bp.value});
    }
    offset = ns.map.points.back().time;
    if (ns.map.points.size() >= 2) out.segments.push_back(std::move(ns));
  }
  if (out.segments.empty()) {
    const auto& first = pres.segments.front();
    out.segments.push_back({first.cube, PLMap{{{Rational(0), first.map.start_value()}}}});
  }
  return out;
}

bool is_natural(const PrecubicalSet&, const PathPresentation& pres) {
  Rational offset = 0;
  if (pres.start_time() != 0) return false;
  for (const auto& seg : pres.segments) {
    if (seg.map.start_time() != offset) return false;
    const Rational base = coordinate_sum(seg.map.start_value());
    for (const auto& bp : seg.map.points)
      if (bp.time != offset + coordinate_sum(bp.value) - base) return false;
    offset = seg.map.end_time();
  }
  return true;
}

std::vector<Rational> vertices_of_path(const PrecubicalSet& set, const PathPresentation& pres) {
  std::vector<Rational> out;
  for (const auto& seg : pres.segments)
    for (const auto& bp : seg.map.points)
      if (set.dim(canonical_point(set, {seg.cube, bp.value}).cube) == 0) out.push_back(bp.time);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool same_path(const PrecubicalSet& set, const PathPresentation& a, const PathPresentation& b) {
  if (a.start_time() != b.start_time() || a.end_time() != b.end_time()) return false;
  std::vector<const PLMap*> maps;
  for (const auto& s : a.segments) maps.push_back(&s.map);
  for (const auto& s : b.segments) maps.push_back(&s.map);
  const auto times = merged_times(maps);
  // Between consecutive breakpoints both paths are affine in a fixed carrier,
  // so two interior samples plus the endpoints decide equality.
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (!(point_at(set, a, times[k]) == point_at(set, b, times[k]))) return false;
    if (k + 1 == times.size()) break;
    const Rational step = (times[k + 1] - times[k]) / 3;
    for (int m = 1; m <= 2; ++m) {
      const Rational t = times[k] + step * m;
      if (!(point_at(set, a, t) == point_at(set, b, t))) return false;
    }
  }
  return true;
}

std::vector<ChartPiece> chart_pieces(const PrecubicalSet& set, const PathPresentation& pres) {
  std::vector<ChartPiece> out;
  for (const auto& seg : pres.segments) {
    const int d = set.dim(seg.cube);
    for (std::size_t k = 0; k + 1 < seg.map.points.size(); ++k) {
      const auto& p = seg.map.points[k];
      const auto& q = seg.map.points[k + 1];
      ChartPiece piece{p.time, q.time, seg.cube, FaceWord(d, '*'), seg.cube, {}, {}};
      for (int j = 0; j < d; ++j) {
        if (p.value[j] == q.value[j] && (p.value[j] == 0 || p.value[j] == 1)) {
          piece.word[j] = p.value[j] == 0 ? '0' : '1';
        } else {
          piece.from.push_back(p.value[j]);
          piece.to.push_back(q.value[j]);
        }
      }
      piece.carrier = face_at(set, seg.cube, piece.word);
      out.push_back(std::move(piece));
    }
  }
  return out;
}

}  // namespace pathlab
