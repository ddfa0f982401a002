#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pathlab/chains.hpp"

namespace pathlab {

/// Integer matrix stored by columns; rows within a column are sorted.
struct SparseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;

  std::size_t nonzeros() const;
};

/// Normalized chain complex of the nerve of a finite category in which no
/// non-identity morphism is an endomorphism.
struct NerveComplex {
  /// simplices[0][i] = {object i}; for k >= 1 a k-simplex lists the
  /// morphism indices f_1..f_k of a composable string, and simplices of
  /// each dimension are sorted lexicographically.
  std::vector<std::vector<std::vector<int>>> simplices;
  /// boundary[k] : C_k -> C_{k-1}; boundary[0] is the empty 0 x dim C_0 map.
  std::vector<SparseMatrix> boundary;

  std::vector<std::size_t> counts() const;
  std::int64_t euler() const;
};

/// Throws EndomorphismDetected for a non-identity arrow from an object to
/// itself, and BoundaryCheckFailed if the boundary does not square to zero.
NerveComplex build_nerve(const Category& cat);

/// True when boundary[k-1] * boundary[k] vanishes for every k.
bool boundary_squares_to_zero(const NerveComplex& complex);

/// Each boundary matrix as "% d_k" followed by a "rows cols nnz" header and
/// 1-based "row col value" lines.
std::string boundary_triplets(const NerveComplex& complex);

}  // namespace pathlab
