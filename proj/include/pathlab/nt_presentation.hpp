#pragma once

#include "pathlab/chains.hpp"

namespace pathlab {

/// Natural parametrization and every segment running from 0 to 1 of its cube.
bool is_natural_tame(const PrecubicalSet& set, const PathPresentation& pres);

struct MinimalPresentation {
  CubeChain chain;
  PathPresentation presentation;
};

/// Splits every segment at the vertex times strictly inside it, so that the
/// vertices of the chain type are exactly the vertex times of the path.
/// 0-dimensional segments are dropped unless the path is constant.
/// Throws NotNaturalTame.
MinimalPresentation minimal_presentation(const PrecubicalSet& set, const PathPresentation& pres);

/// Every segment meets the interior of its cube. Throws NotNaturalTame.
bool is_regular(const PrecubicalSet& set, const PathPresentation& pres);

enum class Equivalence { Equivalent, NotEquivalent, Undecided };

const char* to_string(Equivalence e);

/// Compares minimal presentations. Unequal minimals decide non-equivalence
/// only for regular paths or when the caller asserts that K is a subcomplex
/// of a standard cube. Throws DifferentPaths, NotNaturalTame.
Equivalence presentations_equivalent(const PrecubicalSet& set, const PathPresentation& p1,
                                     const PathPresentation& p2, bool cube_subcomplex = false);

}  // namespace pathlab
