#include "pathlab/precubical.hpp"

#include <algorithm>
#include <unordered_set>

#include "pathlab/error.hpp"

namespace pathlab {

namespace {

const std::vector<CubeId> kNoCubes;

std::string side_name(int eps) { return eps == 0 ? "0" : "1"; }

}  // namespace

// --- Builder -----------------------------------------------------------------

PrecubicalSet::Builder& PrecubicalSet::Builder::name(std::string n) {
  name_ = std::move(n);
  return *this;
}

PrecubicalSet::Builder& PrecubicalSet::Builder::add(std::string id, int dim,
                                                    std::vector<std::string> lower,
                                                    std::vector<std::string> upper) {
  pending_.push_back({std::move(id), dim, std::move(lower), std::move(upper)});
  return *this;
}

PrecubicalSet::Builder& PrecubicalSet::Builder::start(std::string id) {
  start_ = std::move(id);
  return *this;
}

PrecubicalSet::Builder& PrecubicalSet::Builder::end(std::string id) {
  end_ = std::move(id);
  return *this;
}

PrecubicalSet PrecubicalSet::Builder::build() const {
  PrecubicalSet set;
  set.name_ = name_;
  set.cubes_.reserve(pending_.size());
  for (const auto& p : pending_) {
    if (p.dim < 0)
      throw Error(ErrorKind::MalformedInput, "cube '" + p.id + "' has negative dimension");
    if (p.lower.size() != static_cast<std::size_t>(p.dim) ||
        p.upper.size() != static_cast<std::size_t>(p.dim))
      throw Error(ErrorKind::MalformedInput,
                  "cube '" + p.id + "': face lists must have length " + std::to_string(p.dim));
    const CubeId c{static_cast<std::uint32_t>(set.cubes_.size())};
    if (!set.by_id_.emplace(p.id, c).second)
      throw Error(ErrorKind::MalformedInput, "duplicate cube id '" + p.id + "'");
    set.cubes_.push_back({p.id, p.dim, {}, {}});
  }
  auto resolve = [&](const std::string& owner, const std::string& ref) {
    auto it = set.by_id_.find(ref);
    if (it == set.by_id_.end())
      throw Error(ErrorKind::MalformedInput,
                  "cube '" + owner + "' refers to unknown face '" + ref + "'");
    return it->second;
  };
  for (std::size_t k = 0; k < pending_.size(); ++k) {
    const auto& p = pending_[k];
    auto& rec = set.cubes_[k];
    for (const auto& f : p.lower) rec.lower.push_back(resolve(p.id, f));
    for (const auto& f : p.upper) rec.upper.push_back(resolve(p.id, f));
    set.max_dim_ = std::max(set.max_dim_, p.dim);
  }
  if (start_.empty() || end_.empty())
    throw Error(ErrorKind::MalformedInput, "start and end vertices are required");
  set.start_ = resolve("start", start_);
  set.end_ = resolve("end", end_);

  set.sorted_.resize(set.cubes_.size());
  for (std::uint32_t k = 0; k < set.cubes_.size(); ++k) set.sorted_[k] = CubeId{k};
  std::sort(set.sorted_.begin(), set.sorted_.end(),
            [&](CubeId a, CubeId b) { return set.id(a) < set.id(b); });

  set.valid_ = validate(set).empty();
  if (set.valid_) set.index();
  return set;
}

// --- PrecubicalSet -------------------------------------------------------------

std::optional<CubeId> PrecubicalSet::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

CubeId PrecubicalSet::at(std::string_view id) const {
  if (auto c = find(id)) return *c;
  throw Error(ErrorKind::MalformedInput, "unknown cube id '" + std::string(id) + "'");
}

CubeId PrecubicalSet::face(CubeId c, int i, Side side) const {
  const auto& rec = cubes_[c.value];
  if (i < 0 || i >= rec.dim)
    throw Error(ErrorKind::IndexOutOfRange, "face index " + std::to_string(i + 1) +
                                                " out of range for cube '" + rec.id +
                                                "' of dimension " + std::to_string(rec.dim));
  return side == Side::Lower ? rec.lower[i] : rec.upper[i];
}

void PrecubicalSet::require_valid() const {
  if (!valid_) {
    const auto v = validate(*this);
    throw Error(ErrorKind::InvalidModel,
                "pre-cubical set is invalid: " + (v.empty() ? std::string("?") : v.front().message));
  }
}

void PrecubicalSet::index() {
  starting_at_.assign(cubes_.size(), {});
  for (CubeId c : sorted_) {
    const int d = dim(c);
    if (d == 0) continue;
    const CubeId first = extreme_vertex(*this, c, Side::Lower);
    const CubeId last = extreme_vertex(*this, c, Side::Upper);
    starting_at_[first.value].push_back(c);
    spanning_[{first.value, last.value, d}].push_back(c);
  }
}

const std::vector<CubeId>& PrecubicalSet::cubes_starting_at(CubeId v) const {
  if (v.value >= starting_at_.size()) return kNoCubes;
  return starting_at_[v.value];
}

const std::vector<CubeId>& PrecubicalSet::cubes_spanning(CubeId initial, CubeId final,
                                                         int dim) const {
  if (dim == 0) {
    // The 0-cube spanning (v, v) is v itself; handled by callers.
    return kNoCubes;
  }
  auto it = spanning_.find({initial.value, final.value, dim});
  return it == spanning_.end() ? kNoCubes : it->second;
}

// --- validation ----------------------------------------------------------------

std::vector<Violation> validate(const PrecubicalSet& set) {
  std::vector<Violation> out;
  std::vector<bool> faces_ok(set.size(), true);

  for (CubeId c : set.sorted()) {
    const auto& rec = set.cube(c);
    for (int i = 0; i < rec.dim; ++i) {
      for (int eps = 0; eps < 2; ++eps) {
        const CubeId f = eps == 0 ? rec.lower[i] : rec.upper[i];
        if (set.dim(f) != rec.dim - 1) {
          faces_ok[c.value] = false;
          Violation v{Violation::Kind::FaceDimension, rec.id, i + 1, 0, eps, 0, set.id(f), "", ""};
          v.message = "d" + side_name(eps) + "_" + std::to_string(i + 1) + "('" + rec.id +
                      "') = '" + set.id(f) + "' has dimension " + std::to_string(set.dim(f)) +
                      ", expected " + std::to_string(rec.dim - 1);
          out.push_back(std::move(v));
        }
      }
    }
  }

  auto all_faces_ok = [&](CubeId c) {
    if (!faces_ok[c.value]) return false;
    const auto& rec = set.cube(c);
    for (int i = 0; i < rec.dim; ++i)
      if (!faces_ok[rec.lower[i].value] || !faces_ok[rec.upper[i].value]) return false;
    return true;
  };

  for (CubeId c : set.sorted()) {
    const auto& rec = set.cube(c);
    if (rec.dim < 2 || !all_faces_ok(c)) continue;
    // d_i^eps d_j^eta = d_{j-1}^eta d_i^eps for 1 <= i < j <= dim (1-based).
    for (int i = 1; i <= rec.dim; ++i) {
      for (int j = i + 1; j <= rec.dim; ++j) {
        for (int eps = 0; eps < 2; ++eps) {
          for (int eta = 0; eta < 2; ++eta) {
            const Side se = eps ? Side::Upper : Side::Lower;
            const Side sh = eta ? Side::Upper : Side::Lower;
            const CubeId lhs = set.face(set.face(c, j - 1, sh), i - 1, se);
            const CubeId rhs = set.face(set.face(c, i - 1, se), j - 2, sh);
            if (lhs == rhs) continue;
            Violation v{Violation::Kind::CubicalIdentity, rec.id, i, j, eps, eta,
                        set.id(lhs), set.id(rhs), ""};
            v.message = "cube '" + rec.id + "': d" + side_name(eps) + "_" + std::to_string(i) +
                        " d" + side_name(eta) + "_" + std::to_string(j) + " = '" + v.lhs +
                        "' but d" + side_name(eta) + "_" + std::to_string(j - 1) + " d" +
                        side_name(eps) + "_" + std::to_string(i) + " = '" + v.rhs + "'";
            out.push_back(std::move(v));
          }
        }
      }
    }
  }

  for (auto [label, c] : {std::pair{"start", set.start()}, std::pair{"end", set.end()}}) {
    if (set.dim(c) != 0) {
      Violation v{Violation::Kind::BasePointDimension, set.id(c), 0, 0, 0, 0, "", "", ""};
      v.message = std::string(label) + " cube '" + set.id(c) + "' is not a vertex";
      out.push_back(std::move(v));
    }
  }
  return out;
}

// --- face algebra ----------------------------------------------------------------

CubeId iterated_face(const PrecubicalSet& set, CubeId c, const IndexSet& indices, Side side) {
  IndexSet sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::IndexOutOfRange, "repeated face index");
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    if (*it < 0 || *it >= set.dim(c))
      throw Error(ErrorKind::IndexOutOfRange, "face index " + std::to_string(*it + 1) +
                                                  " out of range for cube '" + set.id(c) + "'");
  }
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) c = set.face(c, *it, side);
  return c;
}

CubeId face_at(const PrecubicalSet& set, CubeId c, std::string_view word) {
  if (static_cast<int>(word.size()) != set.dim(c))
    throw Error(ErrorKind::SizeMismatch, "face word '" + std::string(word) +
                                             "' does not match dimension of '" + set.id(c) + "'");
  for (int pos = static_cast<int>(word.size()) - 1; pos >= 0; --pos) {
    switch (word[pos]) {
      case '*': break;
      case '0': c = set.face(c, pos, Side::Lower); break;
      case '1': c = set.face(c, pos, Side::Upper); break;
      default:
        throw Error(ErrorKind::MalformedInput, "bad face word '" + std::string(word) + "'");
    }
  }
  return c;
}

CubeId extreme_vertex(const PrecubicalSet& set, CubeId c, Side side) {
  while (set.dim(c) > 0) c = set.face(c, set.dim(c) - 1, side);
  return c;
}

std::unordered_map<std::uint32_t, std::vector<FaceWord>> faces_by_word(const PrecubicalSet& set,
                                                                       CubeId c) {
  std::unordered_map<std::uint32_t, std::vector<FaceWord>> out;
  const int d = set.dim(c);
  FaceWord word(d, '*');
  // Faces are applied from the highest position down, matching face_at.
  auto rec = [&](auto&& self, int pos, CubeId current) -> void {
    if (pos < 0) {
      out[current.value].push_back(word);
      return;
    }
    word[pos] = '*';
    self(self, pos - 1, current);
    word[pos] = '0';
    self(self, pos - 1, set.face(current, pos, Side::Lower));
    word[pos] = '1';
    self(self, pos - 1, set.face(current, pos, Side::Upper));
    word[pos] = '*';
  };
  rec(rec, d - 1, c);
  for (auto& [_, words] : out) std::sort(words.begin(), words.end());
  return out;
}

Point canonical_point(const PrecubicalSet& set, const Point& p) {
  const int d = set.dim(p.cube);
  if (static_cast<int>(p.coords.size()) != d)
    throw Error(ErrorKind::SizeMismatch, "point has " + std::to_string(p.coords.size()) +
                                             " coordinates, cube '" + set.id(p.cube) +
                                             "' has dimension " + std::to_string(d));
  FaceWord word(d, '*');
  Point out{p.cube, {}};
  for (int j = 0; j < d; ++j) {
    const auto& x = p.coords[j];
    if (x < 0 || x > 1)
      throw Error(ErrorKind::InvalidPath, "coordinate " + x.get_str() + " outside [0,1]");
    if (x == 0)
      word[j] = '0';
    else if (x == 1)
      word[j] = '1';
    else
      out.coords.push_back(x);
  }
  out.cube = face_at(set, p.cube, word);
  return out;
}

RationalVector coface(const RationalVector& x, const IndexSet& indices, Side side, int dim) {
  if (indices.size() + x.size() != static_cast<std::size_t>(dim))
    throw Error(ErrorKind::SizeMismatch, "coface: |A| + dim(x) must equal " + std::to_string(dim));
  RationalVector out(dim);
  std::vector<bool> fixed(dim, false);
  for (int a : indices) {
    if (a < 0 || a >= dim || fixed[a])
      throw Error(ErrorKind::IndexOutOfRange, "coface index " + std::to_string(a + 1));
    fixed[a] = true;
  }
  std::size_t k = 0;
  for (int i = 0; i < dim; ++i) out[i] = fixed[i] ? Rational(side_value(side)) : x[k++];
  return out;
}

RationalVector coface_word(const RationalVector& x, std::string_view word) {
  RationalVector out;
  out.reserve(word.size());
  std::size_t k = 0;
  for (char ch : word) {
    if (ch == '*') {
      if (k >= x.size()) throw Error(ErrorKind::SizeMismatch, "coface_word: too few coordinates");
      out.push_back(x[k++]);
    } else {
      out.emplace_back(ch == '1' ? 1 : 0);
    }
  }
  if (k != x.size()) throw Error(ErrorKind::SizeMismatch, "coface_word: too many coordinates");
  return out;
}

IndexSet complement(const IndexSet& indices, int n) {
  std::vector<bool> in(n, false);
  for (int a : indices)
    if (a >= 0 && a < n) in[a] = true;
  IndexSet out;
  for (int i = 0; i < n; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

}  // namespace pathlab
