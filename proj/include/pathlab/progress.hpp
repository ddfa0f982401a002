#pragma once

#include <vector>

#include "pathlab/track.hpp"

namespace pathlab {

/// One non-decreasing map [a,b] -> [0,1] per action of the track.
struct ProgressFunction {
  Track track;
  ActionTable actions;
  Rational a, b;
  std::vector<PLMap> f;  // width 1, indexed by action id

  /// Last time f^p is 0 and first time f^p is 1.
  Rational support_start(int p) const;
  Rational support_end(int p) const;
};

/// Times t_0 <= ... <= t_l witnessing feasibility, or empty if none exist.
std::vector<Rational> feasible_times(const ProgressFunction& f);

/// Progress function of a presentation in the given track.
/// Throws NotATrackPresentation.
ProgressFunction progress_from_path(const PrecubicalSet& set, const PathPresentation& pres,
                                    const Track& track);

/// The path assembled from the per-stage pieces. Stage i covers
/// [a_i, a_{i+1}] (empty stages are kept as one-point segments), so the
/// result is a presentation in the same track.
/// Throws InfeasibleProgressFunction.
PathPresentation path_from_progress(const PrecubicalSet& set, const ProgressFunction& f);

/// Structural checks: widths, domains, endpoint values, monotonicity.
void check_progress(const PrecubicalSet& set, const ProgressFunction& f);

}  // namespace pathlab
