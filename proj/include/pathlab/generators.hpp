#pragma once

#include <vector>

#include "pathlab/precubical.hpp"

namespace pathlab {

/// The standard n-cube. Cube identifiers are {0,1,*} words; the single
/// vertex of the 0-cube is "()".
PrecubicalSet standard_cube(int n);

/// The (n-1)-skeleton of the standard n-cube, n >= 1.
PrecubicalSet boundary_cube(int n);

/// Wedge of standard cubes of the given positive dimensions, glued final
/// vertex to initial vertex. Identifiers are "k:word" with k 1-based; a
/// glued vertex keeps the identifier from the earlier summand.
PrecubicalSet wedge(const std::vector<int>& dims);

/// Closed integer box [lo_1,hi_1] x ... x [lo_d,hi_d].
struct Box {
  std::vector<int> lo, hi;
};

/// Unit-cube grid on [0,N_1] x ... x [0,N_d] minus every cube whose closed
/// carrier meets the interior of a forbidden box. Identifiers list one
/// token per axis, "x" or "x-(x+1)", joined by commas.
PrecubicalSet grid_complex(const std::vector<int>& extents, const std::vector<Box>& forbidden);

/// Two 3-cubes "c" and "c'" sharing the boundary of the standard 3-cube.
PrecubicalSet double_cube();

/// The 5x5 grid with a forbidden cross [1,4]x[2,3] and [2,3]x[1,4].
PrecubicalSet swiss_flag();

}  // namespace pathlab
