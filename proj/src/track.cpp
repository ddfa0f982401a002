#include <algorithm>
#include <numeric>

#include "pathlab/error.hpp"
#include "pathlab/track.hpp"

namespace pathlab {

namespace {

std::string set_text(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k] + 1);
  return out + "}";
}

bool well_formed(const IndexSet& s, int dim) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < 0 || s[k] >= dim) return false;
    if (k && s[k - 1] >= s[k]) return false;
  }
  return true;
}

}  // namespace

std::vector<TrackViolation> validate_track(const PrecubicalSet& set, const Track& track) {
  using K = TrackViolation::Kind;
  std::vector<TrackViolation> out;
  if (track.entries.empty()) {
    out.push_back({K::Empty, 0, "track has no entries"});
    return out;
  }
  const int l = static_cast<int>(track.entries.size());
  bool indices_ok = true;
  for (int i = 0; i < l; ++i) {
    const auto& e = track.entries[i];
    const int d = set.dim(e.cube);
    if (!well_formed(e.A, d) || !well_formed(e.B, d)) {
      indices_ok = false;
      out.push_back({K::IndexRange, i + 1,
                     "stage " + std::to_string(i + 1) + ": A=" + set_text(e.A) + ", B=" +
                         set_text(e.B) + " are not sorted subsets of {1.." + std::to_string(d) +
                         "}"});
    }
  }
  if (!indices_ok) return out;

  const auto& first = track.entries.front();
  const auto& last = track.entries.back();
  const CubeId s = iterated_face(set, first.cube, first.A, Side::Lower);
  if (s != set.start())
    out.push_back({K::Start, 1, "(a): d0_A1(" + set.id(first.cube) + ") = '" + set.id(s) +
                                    "' is not the start vertex"});
  const CubeId t = iterated_face(set, last.cube, last.B, Side::Upper);
  if (t != set.end())
    out.push_back({K::End, l, "(b): d1_Bl(" + set.id(last.cube) + ") = '" + set.id(t) +
                                  "' is not the end vertex"});
  for (int i = 0; i + 1 < l; ++i) {
    const auto& e = track.entries[i];
    const auto& f = track.entries[i + 1];
    const CubeId x = iterated_face(set, e.cube, e.B, Side::Upper);
    const CubeId y = iterated_face(set, f.cube, f.A, Side::Lower);
    if (x != y)
      out.push_back({K::Junction, i + 1,
                     "(c): stage " + std::to_string(i + 1) + " ends in '" + set.id(x) +
                         "' but stage " + std::to_string(i + 2) + " starts in '" + set.id(y) + "'"});
    if (e.B.empty() && f.A.empty())
      out.push_back({K::Empty, i + 1,
                     "(d): B_" + std::to_string(i + 1) + " and A_" + std::to_string(i + 2) +
                         " are both empty"});
  }
  if (first.A.empty()) out.push_back({K::Empty, 1, "(d): A_1 is empty"});
  if (last.B.empty()) out.push_back({K::Empty, l, "(d): B_l is empty"});
  return out;
}

int track_length(const Track& track) {
  std::size_t a = 0, b = 0;
  for (const auto& e : track.entries) {
    a += e.A.size();
    b += e.B.size();
  }
  if (a != b)
    throw Error(ErrorKind::NotATrackPresentation, "sum of |A_i| differs from sum of |B_i|");
  return static_cast<int>(a);
}

TrackExtraction extract_track(const PrecubicalSet& set, const PathPresentation& pres) {
  check_presentation(set, pres);
  if (!is_bipointed(set, pres))
    throw Error(ErrorKind::NotBiPointed, "path does not run from the start to the end vertex");
  if (path_length(set, pres) == 0) throw Error(ErrorKind::ConstantPath, "path is constant");

  std::vector<Segment> segs;
  for (const auto& s : pres.segments)
    if (s.map.points.size() >= 2) segs.push_back(s);

  auto frozen = [](const RationalVector& v, int value) {
    IndexSet out;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] == value) out.push_back(static_cast<int>(j));
    return out;
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (auto& s : segs) {
      if (auto zeros = frozen(s.map.end_value(), 0); !zeros.empty()) {
        s.cube = iterated_face(set, s.cube, zeros, Side::Lower);
        s.map = drop_coordinates(s.map, zeros);
        changed = true;
      }
      if (auto ones = frozen(s.map.start_value(), 1); !ones.empty()) {
        s.cube = iterated_face(set, s.cube, ones, Side::Upper);
        s.map = drop_coordinates(s.map, ones);
        changed = true;
      }
    }
    if (changed) continue;

    for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
      auto& a = segs[i];
      auto& b = segs[i + 1];
      if (set.dim(a.cube) == 0 || set.dim(b.cube) == 0) continue;
      if (!frozen(a.map.end_value(), 1).empty() || !frozen(b.map.start_value(), 0).empty())
        continue;
      // Both junction presentations are canonical, hence identical.
      if (a.cube != b.cube || a.map.end_value() != b.map.start_value())
        throw Error(ErrorKind::InvalidPath, "inconsistent junction");
      a.map.points.insert(a.map.points.end(), b.map.points.begin() + 1, b.map.points.end());
      segs.erase(segs.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      changed = true;
      break;
    }
    if (changed) continue;

    if (segs.size() > 1) {
      for (std::size_t i = 0; i < segs.size(); ++i) {
        if (set.dim(segs[i].cube) != 0) continue;
        if (i == 0) {
          auto& next = segs[1];
          next.map.points.insert(next.map.points.begin(),
                                 Breakpoint{segs[0].map.start_time(), next.map.start_value()});
        } else {
          auto& prev = segs[i - 1];
          prev.map.points.push_back({segs[i].map.end_time(), prev.map.end_value()});
        }
        segs.erase(segs.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }

  TrackExtraction out;
  for (const auto& s : segs) {
    out.track.entries.push_back(
        {s.cube, frozen(s.map.start_value(), 0), frozen(s.map.end_value(), 1)});
    out.presentation.segments.push_back(s);
  }
  return out;
}

// --- actions -------------------------------------------------------------------

std::vector<int> ActionTable::finished(int stage) const {
  std::vector<int> out;
  for (std::size_t p = 0; p < actions.size(); ++p)
    if (actions[p].end < stage) out.push_back(static_cast<int>(p));
  return out;
}

std::vector<int> ActionTable::active(int stage) const {
  std::vector<int> out;
  for (std::size_t p = 0; p < actions.size(); ++p)
    if (actions[p].active(stage)) out.push_back(static_cast<int>(p));
  return out;
}

std::vector<int> ActionTable::unstarted(int stage) const {
  std::vector<int> out;
  for (std::size_t p = 0; p < actions.size(); ++p)
    if (stage < actions[p].beg) out.push_back(static_cast<int>(p));
  return out;
}

ActionTable action_table(const PrecubicalSet& set, const Track& track) {
  if (auto v = validate_track(set, track); !v.empty())
    throw Error(ErrorKind::NotATrackPresentation, "invalid track: " + v.front().message);
  const int l = static_cast<int>(track.entries.size());

  std::vector<int> offset(l + 1, 0);
  for (int i = 0; i < l; ++i) offset[i + 1] = offset[i] + set.dim(track.entries[i].cube);
  std::vector<int> parent(offset[l]);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (int i = 0; i + 1 < l; ++i) {
    const auto& e = track.entries[i];
    const auto& f = track.entries[i + 1];
    const IndexSet bbar = complement(e.B, set.dim(e.cube));
    const IndexSet abar = complement(f.A, set.dim(f.cube));
    if (bbar.size() != abar.size())
      throw Error(ErrorKind::NotATrackPresentation, "stage sizes do not match");
    for (std::size_t j = 0; j < bbar.size(); ++j) {
      const int x = find(offset[i] + bbar[j]);
      const int y = find(offset[i + 1] + abar[j]);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }

  // Roots are the earliest local action of each class.
  std::vector<int> root_to_action(offset[l], -1);
  ActionTable table;
  table.at_stage.resize(l);
  for (int i = 0; i < l; ++i) {
    const int d = set.dim(track.entries[i].cube);
    table.at_stage[i].assign(d, -1);
    for (int r = 0; r < d; ++r) {
      const int root = find(offset[i] + r);
      if (root_to_action[root] < 0) {
        root_to_action[root] = static_cast<int>(table.actions.size());
        table.actions.push_back({i, i, {r}});
      } else {
        auto& a = table.actions[root_to_action[root]];
        if (a.end != i - 1)
          throw Error(ErrorKind::NotATrackPresentation, "action is not active on an interval");
        a.end = i;
        a.slots.push_back(r);
      }
    }
  }

  // Creation order is (beg, slot at beg) already; fill the stage lookup.
  for (std::size_t p = 0; p < table.actions.size(); ++p) {
    const auto& a = table.actions[p];
    for (int i = a.beg; i <= a.end; ++i) table.at_stage[i][a.slot(i)] = static_cast<int>(p);
  }
  return table;
}

}  // namespace pathlab
