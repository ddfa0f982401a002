#pragma once

#include <string>
#include <vector>

#include "pathlab/dpath.hpp"

namespace pathlab {

/// (c_i, A_i, B_i) with 0-based index sets.
struct TrackEntry {
  CubeId cube;
  IndexSet A, B;
  friend bool operator==(const TrackEntry&, const TrackEntry&) = default;
};

struct Track {
  std::vector<TrackEntry> entries;
  friend bool operator==(const Track&, const Track&) = default;
};

struct TrackViolation {
  enum class Kind { IndexRange, Start, End, Junction, Empty };
  Kind kind;
  int stage;  // 1-based; for Junction the stage i of the pair (i, i+1)
  std::string message;
};

std::vector<TrackViolation> validate_track(const PrecubicalSet& set, const Track& track);

/// Sum of |A_i|; throws NotATrackPresentation when it differs from sum of |B_i|.
int track_length(const Track& track);

struct TrackExtraction {
  Track track;
  PathPresentation presentation;  // a presentation of the same path in this track
};

/// Normalizes the presentation (drop coordinates frozen at 0, then at 1,
/// merge segments meeting at a common interior point, absorb 0-dimensional
/// segments) to a fixed point and reads off the track.
/// Throws NotBiPointed, ConstantPath.
TrackExtraction extract_track(const PrecubicalSet& set, const PathPresentation& pres);

/// Class of local actions (i, r): active on stages beg..end (0-based) with
/// coordinate slots[i - beg] at stage i.
struct Action {
  int beg = 0, end = 0;
  std::vector<int> slots;
  int slot(int stage) const { return slots.at(stage - beg); }
  bool active(int stage) const { return beg <= stage && stage <= end; }
};

struct ActionTable {
  std::vector<Action> actions;                // ordered by (beg, slot at beg)
  std::vector<std::vector<int>> at_stage;     // at_stage[i][r] = action id

  std::vector<int> finished(int stage) const;   // end < stage
  std::vector<int> active(int stage) const;     // beg <= stage <= end
  std::vector<int> unstarted(int stage) const;  // stage < beg
};

/// Throws NotATrackPresentation for invalid tracks.
ActionTable action_table(const PrecubicalSet& set, const Track& track);

}  // namespace pathlab
