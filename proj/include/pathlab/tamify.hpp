#pragma once

#include <vector>

#include "pathlab/dpath.hpp"

namespace pathlab {

/// R(t,h) = min(1, max(0, 4nt + 12n^2 h - 8n^2)).
Rational eval_R(int n, const Rational& t, const Rational& h);

/// R_s(t,h) = s R(t,h) + (1-s) h.
Rational eval_R_s(const Rational& s, int n, const Rational& t, const Rational& h);

/// t -> R_s(t, f(t)) applied to every coordinate of a PL map; exact, with
/// the extra breakpoints where the clamp switches.
PLMap apply_R(const PLMap& map, int n, const Rational& s = Rational(1));

/// The path t -> R_s(t, alpha(t)) with the same segments and cubes.
PathPresentation apply_R(const PathPresentation& pres, int n, const Rational& s = Rational(1));

/// nat, then R coordinatewise, then nat. Requires a path 0_K -> 1_K of
/// integer length n >= 1 (WrongLength); a constant path with 0_K = 1_K is
/// returned unchanged.
PathPresentation tamify(const PrecubicalSet& set, const PathPresentation& pres);

struct Regularization {
  PathPresentation path;                        // tame presentation split at vertices
  std::vector<std::vector<Rational>> vertices;  // Vert of each iterate, starting with the input
  int iterations = 0;                           // tamify applications kept
};

/// Iterates tamify until the vertex set stops growing (at most n steps).
/// Requires a natural tame path (NotNaturalTame).
Regularization regularize(const PrecubicalSet& set, const PathPresentation& pres);

}  // namespace pathlab
