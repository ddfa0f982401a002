#pragma once

#include <cstdint>
#include <vector>

#include "pathlab/nerve.hpp"
#include "pathlab/rational.hpp"

namespace pathlab {

using DenseMatrix = std::vector<std::vector<Integer>>;

struct SmithForm {
  std::vector<Integer> factors;  // positive invariant factors, d_1 | d_2 | ...
  std::size_t rank() const { return factors.size(); }
};

/// Dense elimination over arbitrary-precision integers. The pivot is the
/// entry of smallest absolute value, first in row-major order.
SmithForm smith_normal_form(DenseMatrix m);

/// Unit-pivot sparse elimination (64-bit, redone in GMP on overflow)
/// followed by the dense algorithm on whatever is left.
SmithForm smith_normal_form(const SparseMatrix& m);

DenseMatrix to_dense(const SparseMatrix& m);

struct HomologyReport {
  std::vector<std::int64_t> betti;
  std::vector<std::vector<Integer>> torsion;
  std::int64_t euler = 0;
};

/// H_k = ker d_k / im d_{k+1}. `threads` > 1 reduces dimensions concurrently.
/// Throws BoundaryCheckFailed when the boundary does not square to zero.
HomologyReport homology(const NerveComplex& complex, int threads = 0);

}  // namespace pathlab
