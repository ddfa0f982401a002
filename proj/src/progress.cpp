#include "pathlab/progress.hpp"

#include <algorithm>

#include "pathlab/error.hpp"

namespace pathlab {

Rational ProgressFunction::support_start(int p) const {
  Rational out = a;
  for (const auto& bp : f.at(p).points)
    if (bp.value[0] == 0) out = bp.time;
  return out;
}

Rational ProgressFunction::support_end(int p) const {
  for (const auto& bp : f.at(p).points)
    if (bp.value[0] == 1) return bp.time;
  return b;
}

void check_progress(const PrecubicalSet& set, const ProgressFunction& f) {
  if (!(f.a < f.b)) throw Error(ErrorKind::InfeasibleProgressFunction, "empty time interval");
  if (f.f.size() != f.actions.actions.size())
    throw Error(ErrorKind::SizeMismatch, "one map per action is required");
  (void)set;
  for (const auto& m : f.f) {
    check_plmap(m, 1);
    if (m.start_time() != f.a || m.end_time() != f.b)
      throw Error(ErrorKind::InfeasibleProgressFunction, "map domain differs from [a,b]");
    if (m.start_value()[0] != 0 || m.end_value()[0] != 1)
      throw Error(ErrorKind::InfeasibleProgressFunction, "map must run from 0 to 1");
  }
}

std::vector<Rational> feasible_times(const ProgressFunction& f) {
  const int l = static_cast<int>(f.track.entries.size());
  const int n = static_cast<int>(f.actions.actions.size());
  std::vector<Rational> lo(n), hi(n);
  for (int p = 0; p < n; ++p) {
    lo[p] = f.support_start(p);
    hi[p] = f.support_end(p);
  }
  // Stages are 0-based: action p needs t_{beg} <= a^p and t_{end+1} >= b^p.
  std::vector<Rational> t(l + 1);
  t[0] = f.a;
  t[l] = f.b;
  for (int i = 1; i < l; ++i) {
    t[i] = f.a;
    for (int p = 0; p < n; ++p)
      if (f.actions.actions[p].end + 1 <= i) t[i] = std::max(t[i], hi[p]);
  }
  for (int i = 0; i <= l; ++i)
    for (int p = 0; p < n; ++p) {
      const auto& act = f.actions.actions[p];
      if (act.beg >= i && t[i] > lo[p]) return {};
      if (act.end + 1 <= i && t[i] < hi[p]) return {};
    }
  for (int i = 0; i < l; ++i)
    if (t[i] > t[i + 1]) return {};
  return t;
}

ProgressFunction progress_from_path(const PrecubicalSet& set, const PathPresentation& pres,
                                    const Track& track) {
  check_presentation(set, pres);
  if (auto v = validate_track(set, track); !v.empty())
    throw Error(ErrorKind::NotATrackPresentation, "invalid track: " + v.front().message);
  const int l = static_cast<int>(track.entries.size());
  if (static_cast<int>(pres.segments.size()) != l)
    throw Error(ErrorKind::NotATrackPresentation, "segment count differs from track length");
  for (int i = 0; i < l; ++i)
    if (pres.segments[i].cube != track.entries[i].cube)
      throw Error(ErrorKind::NotATrackPresentation,
                  "segment " + std::to_string(i + 1) + " is not in the track's cube");

  auto all = [](const RationalVector& v, int value) {
    return std::all_of(v.begin(), v.end(), [&](const Rational& x) { return x == value; });
  };
  if (!all(pres.segments.front().map.start_value(), 0) ||
      !all(pres.segments.back().map.end_value(), 1))
    throw Error(ErrorKind::NotATrackPresentation, "path must start at 0 and end at 1");
  for (int i = 0; i + 1 < l; ++i) {
    const auto& x = pres.segments[i].map.end_value();
    const auto& y = pres.segments[i + 1].map.start_value();
    const auto& e = track.entries[i];
    const auto& g = track.entries[i + 1];
    for (int j : e.B)
      if (x[j] != 1)
        throw Error(ErrorKind::NotATrackPresentation,
                    "junction " + std::to_string(i + 1) + ": B-coordinate is not 1");
    for (int j : g.A)
      if (y[j] != 0)
        throw Error(ErrorKind::NotATrackPresentation,
                    "junction " + std::to_string(i + 1) + ": A-coordinate is not 0");
    const IndexSet bbar = complement(e.B, static_cast<int>(x.size()));
    const IndexSet abar = complement(g.A, static_cast<int>(y.size()));
    if (bbar.size() != abar.size())
      throw Error(ErrorKind::NotATrackPresentation, "junction dimensions differ");
    for (std::size_t j = 0; j < bbar.size(); ++j)
      if (x[bbar[j]] != y[abar[j]])
        throw Error(ErrorKind::NotATrackPresentation,
                    "junction " + std::to_string(i + 1) + ": shared coordinates differ");
  }

  ProgressFunction out;
  out.track = track;
  out.actions = action_table(set, track);
  out.a = pres.start_time();
  out.b = pres.end_time();
  for (const auto& act : out.actions.actions) {
    PLMap m;
    auto push = [&](const Rational& t, const Rational& v) {
      if (!m.points.empty() && m.points.back().time == t) {
        if (m.points.back().value[0] != v)
          throw Error(ErrorKind::NotATrackPresentation, "progress pieces do not glue");
        return;
      }
      m.points.push_back({t, {v}});
    };
    push(out.a, 0);
    for (int i = act.beg; i <= act.end; ++i)
      for (const auto& bp : pres.segments[i].map.points) push(bp.time, bp.value[act.slot(i)]);
    push(out.b, 1);
    out.f.push_back(simplify(m));
  }
  return out;
}

PathPresentation path_from_progress(const PrecubicalSet& set, const ProgressFunction& f) {
  check_progress(set, f);
  if (feasible_times(f).empty())
    throw Error(ErrorKind::InfeasibleProgressFunction, "no admissible stage times exist");
  const int l = static_cast<int>(f.track.entries.size());
  const int n = static_cast<int>(f.actions.actions.size());

  std::vector<Rational> a_i(l), b_i(l);
  for (int i = 0; i < l; ++i) {
    a_i[i] = f.a;
    b_i[i] = f.b;
    for (int p = 0; p < n; ++p) {
      const auto& act = f.actions.actions[p];
      if (act.end < i) a_i[i] = std::max(a_i[i], f.support_end(p));
      if (i < act.beg) b_i[i] = std::min(b_i[i], f.support_start(p));
    }
  }
  for (int i = 0; i + 1 < l; ++i)
    if (a_i[i + 1] > b_i[i])
      throw Error(ErrorKind::InfeasibleProgressFunction, "stage intervals do not cover [a,b]");

  std::vector<const PLMap*> maps;
  for (const auto& m : f.f) maps.push_back(&m);
  const auto times = merged_times(maps);

  PathPresentation out;
  for (int i = 0; i < l; ++i) {
    const Rational s0 = a_i[i];
    const Rational s1 = i + 1 < l ? a_i[i + 1] : f.b;
    const auto& slots = f.actions.at_stage[i];
    auto value = [&](const Rational& t) {
      RationalVector v(slots.size());
      for (std::size_t r = 0; r < slots.size(); ++r) v[r] = f.f[slots[r]].eval(t, 0);
      return v;
    };
    PLMap m;
    m.points.push_back({s0, value(s0)});
    for (const auto& t : times)
      if (s0 < t && t < s1) m.points.push_back({t, value(t)});
    if (s0 < s1) m.points.push_back({s1, value(s1)});
    out.segments.push_back({f.track.entries[i].cube, std::move(m)});
  }
  return out;
}

}  // namespace pathlab
