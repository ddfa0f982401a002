#pragma once

#include <string>
#include <vector>

#include "pathlab/dpath.hpp"

namespace pathlab {

/// Sequence of positive integers n = (n_1, ..., n_l).
struct ChainType {
  std::vector<int> parts;

  int length() const;                 // sum of parts
  int count() const { return static_cast<int>(parts.size()); }
  std::vector<int> vertices() const;  // partial sums 0 = t_0 < ... < t_l = n
  std::vector<int> free() const;      // {1..n-1} minus the vertices
};

/// Cubes c_1..c_l with d0(c_1) = 0_K, d1(c_l) = 1_K and d1(c_i) = d0(c_{i+1}).
struct CubeChain {
  std::vector<CubeId> cubes;

  ChainType type(const PrecubicalSet& set) const;
  friend auto operator<=>(const CubeChain&, const CubeChain&) = default;
};

std::string chain_label(const PrecubicalSet& set, const CubeChain& chain);

bool is_cube_chain(const PrecubicalSet& set, const CubeChain& chain);

/// All chains of total dimension n, in lexicographic order of identifiers.
/// For n = 0 the empty chain is returned iff 0_K = 1_K.
std::vector<CubeChain> enumerate_chains(const PrecubicalSet& set, int n);

/// Number of chains of total dimension n, without listing them.
Integer count_chains(const PrecubicalSet& set, int n);

/// Replaces c_i by (d0_B(c_i), d1_A(c_i)). 0-based stage and coordinates.
/// Throws InvalidPartition unless A and B are nonempty and partition the
/// coordinates of c_i.
CubeChain chain_face(const PrecubicalSet& set, const CubeChain& chain, int i, const IndexSet& A,
                     const IndexSet& B);

/// Blocks of 0-based coordinates covering {0..m-1}.
using OrderedPartition = std::vector<IndexSet>;

/// A map of chains over K: one ordered partition per target cube; the
/// concatenated block sizes are the source's parts.
struct ChainMorphism {
  CubeChain source, target;
  std::vector<OrderedPartition> partitions;
  friend auto operator<=>(const ChainMorphism&, const ChainMorphism&) = default;
};

ChainMorphism identity_morphism(const PrecubicalSet& set, const CubeChain& chain);
bool is_identity(const ChainMorphism& f);

/// The over-K condition for every block.
bool is_chain_morphism(const PrecubicalSet& set, const ChainMorphism& f);

/// All morphisms a -> b in the fixed order of their partitions.
std::vector<ChainMorphism> morphisms_between(const PrecubicalSet& set, const CubeChain& a,
                                             const CubeChain& b);

/// g o f. Throws SourceTargetMismatch.
ChainMorphism compose(const ChainMorphism& g, const ChainMorphism& f);

/// Partition composition alone: refines each block of `outer` by the
/// matching partition of `inner`, transported along the increasing
/// bijection onto the block.
OrderedPartition refine(const OrderedPartition& outer, const std::vector<OrderedPartition>& inner);

/// Ch(K;n) with every morphism, identities included.
struct Category {
  int n = 0;
  std::vector<CubeChain> objects;
  struct Arrow {
    int src, dst;
    std::vector<OrderedPartition> partitions;
    friend auto operator<=>(const Arrow&, const Arrow&) = default;
  };
  std::vector<Arrow> morphisms;  // sorted by (src, dst, partitions)

  bool is_identity(int m) const;
  /// Index of g o f; throws SourceTargetMismatch.
  int compose(int g, int f) const;
  int find(const Arrow& a) const;  // -1 when absent
  ChainMorphism morphism(int m) const;
  std::size_t non_identity_count() const;
};

/// Builds Ch(K;n). `threads` > 1 searches source objects concurrently; the
/// result does not depend on it.
Category category(const PrecubicalSet& set, int n, int threads = 0);

/// The tame path [c_i; beta_i]. Stage i must have width n_i, run from
/// t_{i-1} to t_i (partial sums of the type) naturally from 0 to 1.
/// Throws StageMismatch.
PathPresentation assemble_path(const PrecubicalSet& set, const CubeChain& chain,
                               const std::vector<PLMap>& beta);

std::string partition_signature(const std::vector<OrderedPartition>& partitions);

/// Graphviz rendering of the non-identity morphisms.
std::string category_dot(const PrecubicalSet& set, const Category& cat);

}  // namespace pathlab
