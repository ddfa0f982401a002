#pragma once

#include <vector>

#include "pathlab/plmap.hpp"
#include "pathlab/precubical.hpp"

namespace pathlab {

struct Segment {
  CubeId cube;
  PLMap map;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// A d-path as consecutive segments [c_i; beta_i]. Segment i runs over
/// [t_{i-1}, t_i]; consecutive segments share the junction time.
struct PathPresentation {
  std::vector<Segment> segments;

  const Rational& start_time() const { return segments.front().map.start_time(); }
  const Rational& end_time() const { return segments.back().map.end_time(); }
  friend bool operator==(const PathPresentation&, const PathPresentation&) = default;
};

/// Structural and junction checks. Throws InvalidPath, SizeMismatch or
/// InvalidModel (when the set itself is invalid).
void check_presentation(const PrecubicalSet& set, const PathPresentation& pres);

/// Canonical point at time t.
Point point_at(const PrecubicalSet& set, const PathPresentation& pres, const Rational& t);
Point start_point(const PrecubicalSet& set, const PathPresentation& pres);
Point end_point(const PrecubicalSet& set, const PathPresentation& pres);

/// Runs from the start vertex of K to its end vertex.
bool is_bipointed(const PrecubicalSet& set, const PathPresentation& pres);

Rational path_length(const PrecubicalSet& set, const PathPresentation& pres);

/// Reparametrization by L1 arc length on [0, len]. Constancy intervals are
/// collapsed; a constant path becomes a single breakpoint at time 0.
PathPresentation naturalize(const PrecubicalSet& set, const PathPresentation& pres);

/// Starts at 0 and the length of every restriction equals its duration.
bool is_natural(const PrecubicalSet& set, const PathPresentation& pres);

/// Sorted times at which the path sits at a vertex. A plateau at a vertex
/// is reported by its two endpoints.
std::vector<Rational> vertices_of_path(const PrecubicalSet& set, const PathPresentation& pres);

/// Pointwise equality on a common domain.
bool same_path(const PrecubicalSet& set, const PathPresentation& a, const PathPresentation& b);

/// One linear piece seen through its open-interval carrier: on (t0, t1) the
/// path is [carrier; x(t)] with x affine from `from` to `to` (limits) and
/// every coordinate of x strictly inside (0,1).
struct ChartPiece {
  Rational t0, t1;
  CubeId cube;      // the segment's cube
  FaceWord word;    // carrier = face_at(cube, word)
  CubeId carrier;
  RationalVector from, to;
};

/// Chart pieces of all segments in time order. Single-breakpoint segments
/// contribute nothing.
std::vector<ChartPiece> chart_pieces(const PrecubicalSet& set, const PathPresentation& pres);

// --- tameness ------------------------------------------------------------------

/// Decides whether the path admits a presentation with all junctions at
/// vertices. Throws NotBiPointed unless the path runs 0_K -> 1_K.
bool is_tame(const PrecubicalSet& set, const PathPresentation& pres);

/// Tame presentation split at every vertex time: each segment runs from the
/// all-zero to the all-one vector of its cube. Throws NotTame.
PathPresentation to_tame_presentation(const PrecubicalSet& set, const PathPresentation& pres);

/// Every segment starts at 0 and ends at 1 of its cube.
bool is_tame_presentation(const PrecubicalSet& set, const PathPresentation& pres);

}  // namespace pathlab
