#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "pathlab/rational.hpp"

namespace pathlab {

/// Position of a cube in its PrecubicalSet. Two cubes are equal iff their
/// identifiers are equal, and identifiers are unique within a set, so index
/// equality is identifier equality.
struct CubeId {
  std::uint32_t value = 0;
  friend auto operator<=>(const CubeId&, const CubeId&) = default;
};

/// Lower (0) or upper (1) face.
enum class Side : std::uint8_t { Lower = 0, Upper = 1 };

inline int side_value(Side s) { return static_cast<int>(s); }

/// Sorted set of 0-based coordinate indices.
using IndexSet = std::vector<int>;

/// A word over {'0','1','*'} of length dim(c). Applying it to a cube sets
/// the coordinates marked '0'/'1' and keeps the '*' coordinates, in order.
/// This is the {0,1,*} description of the faces of a standard cube.
using FaceWord = std::string;

struct CubeRecord {
  std::string id;
  int dim = 0;
  std::vector<CubeId> lower;  // lower[i] = d^0_{i+1}
  std::vector<CubeId> upper;  // upper[i] = d^1_{i+1}
};

/// Finite bi-pointed pre-cubical set. Immutable once built.
///
/// A set may be structurally sound (unique ids, resolvable faces, face lists
/// of the right length) while still violating the cubical identities or the
/// dimension rule; such sets can be built so that `validate` can report the
/// violations, but every analysis calls `require_valid` first.
class PrecubicalSet {
 public:
  class Builder;

  const std::string& name() const { return name_; }
  std::size_t size() const { return cubes_.size(); }
  const CubeRecord& cube(CubeId c) const { return cubes_[c.value]; }
  const std::string& id(CubeId c) const { return cubes_[c.value].id; }
  int dim(CubeId c) const { return cubes_[c.value].dim; }
  int max_dim() const { return max_dim_; }

  CubeId start() const { return start_; }
  CubeId end() const { return end_; }

  std::optional<CubeId> find(std::string_view id) const;
  /// Throws Error(MalformedInput) for unknown identifiers.
  CubeId at(std::string_view id) const;

  /// d^side_{i+1}; `i` is 0-based. Throws IndexOutOfRange.
  CubeId face(CubeId c, int i, Side side) const;

  /// All cubes, ordered by identifier.
  const std::vector<CubeId>& sorted() const { return sorted_; }

  bool is_valid() const { return valid_; }
  /// Throws Error(InvalidModel) when `validate` reports violations.
  void require_valid() const;

  /// Positive-dimensional cubes whose initial vertex is `v`, by identifier.
  /// Empty unless the set is valid.
  const std::vector<CubeId>& cubes_starting_at(CubeId v) const;

  /// Cubes of dimension `dim` with the given extreme vertices, by identifier.
  /// Empty unless the set is valid.
  const std::vector<CubeId>& cubes_spanning(CubeId initial, CubeId final, int dim) const;

 private:
  friend class Builder;

  void index();

  std::string name_;
  std::vector<CubeRecord> cubes_;
  std::unordered_map<std::string, CubeId> by_id_;
  std::vector<CubeId> sorted_;
  CubeId start_{}, end_{};
  int max_dim_ = 0;
  bool valid_ = false;
  std::vector<std::vector<CubeId>> starting_at_;
  std::map<std::tuple<std::uint32_t, std::uint32_t, int>, std::vector<CubeId>> spanning_;
};

class PrecubicalSet::Builder {
 public:
  Builder& name(std::string n);
  /// Face lists hold identifiers; they may refer to cubes added later.
  Builder& add(std::string id, int dim, std::vector<std::string> lower,
               std::vector<std::string> upper);
  Builder& start(std::string id);
  Builder& end(std::string id);

  /// Throws Error(MalformedInput) on duplicate ids, dangling references,
  /// face lists of the wrong length, negative dimensions or missing base
  /// points. Other violations are left for `validate`.
  PrecubicalSet build() const;

 private:
  struct Pending {
    std::string id;
    int dim;
    std::vector<std::string> lower, upper;
  };
  std::string name_;
  std::vector<Pending> pending_;
  std::string start_, end_;
};

struct Violation {
  enum class Kind { FaceDimension, CubicalIdentity, BasePointDimension };
  Kind kind;
  std::string cube;
  // Face-identity violations: d^eps_i d^eta_j(c) = lhs, d^eta_{j-1} d^eps_i(c) = rhs,
  // 1-based i < j. Dimension violations use i (1-based) and eps only.
  int i = 0, j = 0;
  int eps = 0, eta = 0;
  std::string lhs, rhs;
  std::string message;
};

std::vector<Violation> validate(const PrecubicalSet& set);

/// d^side_A(c) = d_{a_1} ∘ ... ∘ d_{a_k}(c) for A = {a_1 < ... < a_k} (0-based).
CubeId iterated_face(const PrecubicalSet& set, CubeId c, const IndexSet& indices, Side side);

/// Face selected by a {0,1,*} word: faces are taken at the fixed positions
/// from the highest index down, so the result does not depend on renumbering.
CubeId face_at(const PrecubicalSet& set, CubeId c, std::string_view word);

/// d^side of all coordinates: the initial (Lower) or final (Upper) vertex.
CubeId extreme_vertex(const PrecubicalSet& set, CubeId c, Side side);

/// All faces of `c` by word, as a map from face to the words that reach it.
/// 3^dim entries; meant for the small cubes that occur in practice.
std::unordered_map<std::uint32_t, std::vector<FaceWord>> faces_by_word(const PrecubicalSet& set,
                                                                       CubeId c);

/// A point [c; x] of the geometric realization.
struct Point {
  CubeId cube;
  RationalVector coords;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Strips coordinates equal to 0 or 1 until the presentation is canonical.
Point canonical_point(const PrecubicalSet& set, const Point& p);

/// Inserts `side` at the positions in `indices` (0-based, in the result of
/// dimension `dim`): [d^side_A(c); x] = [c; coface(x, A, side)].
RationalVector coface(const RationalVector& x, const IndexSet& indices, Side side, int dim);

/// Inserts the fixed values of `word` around the free coordinates `x`.
RationalVector coface_word(const RationalVector& x, std::string_view word);

/// The set {0, ..., n-1} minus `indices`, sorted.
IndexSet complement(const IndexSet& indices, int n);

}  // namespace pathlab

template <>
struct std::hash<pathlab::CubeId> {
  std::size_t operator()(const pathlab::CubeId& c) const noexcept { return c.value; }
};
