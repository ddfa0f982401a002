#pragma once

// Shared helpers for the test binaries: seeded random paths and
// independent oracles that do not go through the library's own algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "pathlab/chains.hpp"
#include "pathlab/dpath.hpp"
#include "pathlab/error.hpp"
#include "pathlab/generators.hpp"

namespace testing_support {

using namespace pathlab;
using Rng = std::mt19937_64;

/// p/q in lowest terms; the two-argument mpq constructor does not reduce.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Rational strictly between lo and hi.
inline Rational between(Rng& rng, const Rational& lo, const Rational& hi) {
  const int q = uniform(rng, 2, 12);
  const int k = uniform(rng, 1, q - 1);
  return lo + (hi - lo) * frac(k, q);
}

inline PLMap make_natural(std::vector<RationalVector> pts, const Rational& t0) {
  PLMap m;
  Rational base = coordinate_sum(pts.front());
  for (auto& v : pts) {
    Rational t = t0 + coordinate_sum(v) - base;
    if (!m.points.empty() && m.points.back().time == t) continue;
    m.points.push_back({t, std::move(v)});
  }
  return m;
}

/// Random natural monotone map from 0 to 1 in dimension d starting at t0.
inline PLMap random_natural_map(Rng& rng, int d, const Rational& t0, int inner = 2) {
  std::vector<std::vector<Rational>> coords(d);
  for (auto& c : coords) {
    for (int k = 0; k < inner; ++k)  // now and then touch a face
      c.push_back(uniform(rng, 0, 3) == 0 ? Rational(uniform(rng, 0, 1)) : between(rng, 0, 1));
    std::sort(c.begin(), c.end());
  }
  const int steps = static_cast<int>(coords.empty() ? 0 : coords[0].size());
  std::vector<RationalVector> pts{RationalVector(d, 0)};
  for (int k = 0; k < steps; ++k) {
    RationalVector v(d);
    for (int x = 0; x < d; ++x) v[x] = coords[x][k];
    pts.push_back(v);
  }
  pts.push_back(RationalVector(d, 1));
  return make_natural(pts, t0);
}

/// Random natural tame path along the given chain.
inline PathPresentation random_tame_path(const PrecubicalSet& set, const CubeChain& chain, Rng& rng) {
  PathPresentation p;
  Rational t = 0;
  for (CubeId c : chain.cubes) {
    p.segments.push_back({c, random_natural_map(rng, set.dim(c), t)});
    t += set.dim(c);
  }
  return p;
}

/// Index: face -> (cube, A) with d0_A(cube) = face, dim(cube) >= 1.
class LowerFaceIndex {
 public:
  explicit LowerFaceIndex(const PrecubicalSet& set) {
    for (CubeId c : set.sorted()) {
      const int d = set.dim(c);
      if (d == 0) continue;
      for (int mask = 0; mask < (1 << d); ++mask) {
        IndexSet A;
        for (int x = 0; x < d; ++x)
          if (mask >> x & 1) A.push_back(x);
        by_face_[iterated_face(set, c, A, Side::Lower).value].push_back({c, A});
      }
    }
  }
  const std::vector<std::pair<CubeId, IndexSet>>& at(CubeId f) const {
    static const std::vector<std::pair<CubeId, IndexSet>> none;
    auto it = by_face_.find(f.value);
    return it == by_face_.end() ? none : it->second;
  }

 private:
  std::map<std::uint32_t, std::vector<std::pair<CubeId, IndexSet>>> by_face_;
};

/// Random d-path 0_K -> 1_K following a random track; junctions are
/// generally interior points of shared faces, so the result need not be
/// tame. The presentation is parametrized at random speeds.
inline std::optional<PathPresentation> random_track_path(const PrecubicalSet& set,
                                                         const LowerFaceIndex& index, Rng& rng,
                                                         int max_stages = 40) {
  // First stage: a cube whose initial vertex is 0_K, entered with A = all.
  std::vector<std::pair<CubeId, IndexSet>> first;
  for (const auto& [c, A] : index.at(set.start()))
    if (static_cast<int>(A.size()) == set.dim(c)) first.push_back({c, A});
  if (first.empty()) return std::nullopt;
  auto [cube, A] = first[uniform(rng, 0, static_cast<int>(first.size()) - 1)];
  RationalVector y;  // coordinates of the entry point in the entry face
  PathPresentation pres;
  Rational t = 0;
  for (int stage = 0; stage < max_stages; ++stage) {
    const int d = set.dim(cube);
    const RationalVector start = coface(y, A, Side::Lower, d);
    // Choose B: all coordinates when finishing at 1_K.
    const bool can_finish = extreme_vertex(set, cube, Side::Upper) == set.end();
    IndexSet B;
    bool finish = can_finish && uniform(rng, 0, 2) == 0;
    std::vector<std::pair<CubeId, IndexSet>> next;
    if (!finish) {
      for (int attempt = 0; attempt < 8 && next.empty(); ++attempt) {
        B.clear();
        for (int x = 0; x < d; ++x)
          if (uniform(rng, 0, 1)) B.push_back(x);
        const CubeId face = iterated_face(set, cube, B, Side::Upper);
        for (const auto& cand : index.at(face))
          if (!(B.empty() && cand.second.empty())) next.push_back(cand);
      }
      if (next.empty()) {
        if (!can_finish) return std::nullopt;
        finish = true;
      }
    }
    if (finish) {
      B.resize(d);
      for (int x = 0; x < d; ++x) B[x] = x;
    }
    RationalVector end(d);
    for (int x = 0; x < d; ++x)
      end[x] = std::binary_search(B.begin(), B.end(), x) ? Rational(1) : between(rng, start[x], 1);
    RationalVector mid(d);
    for (int x = 0; x < d; ++x) mid[x] = uniform(rng, 0, 1) ? between(rng, start[x], end[x]) : start[x];
    PLMap m;
    const Rational speed = frac(uniform(rng, 1, 3), uniform(rng, 1, 3));
    m.points.push_back({t, start});
    for (const auto* v : {&mid, &end}) {
      const Rational dt = (coordinate_sum(*v) - coordinate_sum(m.points.back().value)) / speed;
      if (dt == 0) continue;
      t += dt;
      m.points.push_back({t, *v});
    }
    pres.segments.push_back({cube, std::move(m)});
    if (finish) return pres;
    // Exit point in the face, then move into the next cube.
    y.clear();
    for (int x = 0; x < d; ++x)
      if (!std::binary_search(B.begin(), B.end(), x)) y.push_back(end[x]);
    std::tie(cube, A) = next[uniform(rng, 0, static_cast<int>(next.size()) - 1)];
  }
  return std::nullopt;
}

/// Retries until a path is produced.
inline PathPresentation some_track_path(const PrecubicalSet& set, const LowerFaceIndex& index,
                                        Rng& rng) {
  for (int i = 0; i < 10000; ++i)
    if (auto p = random_track_path(set, index, rng)) return *p;
  throw std::runtime_error("no random path found");
}

// --- combinatorial oracles ------------------------------------------------------

/// Ordered set partitions of {0..n-1}, by brute force over block labels.
inline std::vector<std::vector<std::vector<int>>> ordered_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> label(n, 0);
  for (int k = 1; k <= n; ++k) {
    std::fill(label.begin(), label.end(), 0);
    while (true) {
      std::vector<std::vector<int>> blocks(k);
      for (int x = 0; x < n; ++x) blocks[label[x]].push_back(x);
      if (std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return !b.empty(); }))
        out.push_back(blocks);
      int x = 0;
      while (x < n && ++label[x] == k) label[x++] = 0;
      if (x == n) break;
    }
  }
  return out;
}

/// a <= b when the blocks of b are unions of consecutive blocks of a.
inline bool refines(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  std::size_t i = 0;
  for (const auto& block : b) {
    std::set<int> want(block.begin(), block.end()), got;
    while (i < a.size() && got.size() < want.size()) {
      got.insert(a[i].begin(), a[i].end());
      ++i;
    }
    if (got != want) return false;
  }
  return i == a.size();
}

/// Betti numbers over F_p of the order complex of a finite poset given by
/// its strict order relation.
inline std::vector<std::int64_t> order_complex_betti(int size,
                                                     const std::function<bool(int, int)>& less) {
  constexpr std::int64_t P = 1000000007;
  std::vector<std::vector<std::vector<int>>> chains{{}};
  for (int x = 0; x < size; ++x) chains[0].push_back({x});
  while (true) {
    std::vector<std::vector<int>> next;
    for (const auto& c : chains.back())
      for (int y = 0; y < size; ++y)
        if (less(c.back(), y)) {
          auto d = c;
          d.push_back(y);
          next.push_back(d);
        }
    if (next.empty()) break;
    chains.push_back(next);
  }
  auto mod_rank = [&](std::size_t k) -> std::int64_t {  // rank of d_k
    if (k == 0 || k >= chains.size()) return 0;
    std::map<std::vector<int>, std::size_t> row_of;
    for (std::size_t r = 0; r < chains[k - 1].size(); ++r) row_of[chains[k - 1][r]] = r;
    std::vector<std::vector<std::int64_t>> m(chains[k - 1].size(),
                                             std::vector<std::int64_t>(chains[k].size(), 0));
    for (std::size_t j = 0; j < chains[k].size(); ++j)
      for (std::size_t i = 0; i <= k; ++i) {
        auto f = chains[k][j];
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        m[row_of.at(f)][j] = (m[row_of.at(f)][j] + (i % 2 ? P - 1 : 1)) % P;
      }
    auto inv = [&](std::int64_t a) {
      std::int64_t r = 1, e = P - 2;
      while (e) {
        if (e & 1) r = r * a % P;
        a = a * a % P;
        e >>= 1;
      }
      return r;
    };
    std::int64_t rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0, r = 0; c < cols && r < rows; ++c) {
      std::size_t p = r;
      while (p < rows && m[p][c] == 0) ++p;
      if (p == rows) continue;
      std::swap(m[p], m[r]);
      const auto iv = inv(m[r][c]);
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        const auto f = m[i][c] * iv % P;
        for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % P + P) % P;
      }
      ++r;
      ++rank;
    }
    return rank;
  };
  std::vector<std::int64_t> betti;
  for (std::size_t k = 0; k < chains.size(); ++k)
    betti.push_back(static_cast<std::int64_t>(chains[k].size()) - mod_rank(k) - mod_rank(k + 1));
  return betti;
}

/// Random sub-pre-cubical set of a valid set: removes random cubes together
/// with every cube having one of them as an iterated face. The base points
/// are kept.
inline PrecubicalSet random_subcomplex(const PrecubicalSet& set, Rng& rng, int removals) {
  std::set<std::uint32_t> removed;
  std::vector<CubeId> pos;
  for (CubeId c : set.sorted())
    if (set.dim(c) >= 1) pos.push_back(c);
  for (int k = 0; k < removals && !pos.empty(); ++k)
    removed.insert(pos[uniform(rng, 0, static_cast<int>(pos.size()) - 1)].value);
  bool changed = true;
  while (changed) {
    changed = false;
    for (CubeId c : set.sorted()) {
      if (removed.count(c.value)) continue;
      for (int i = 0; i < set.dim(c) && !changed; ++i)
        for (Side s : {Side::Lower, Side::Upper})
          if (removed.count(set.face(c, i, s).value)) {
            removed.insert(c.value);
            changed = true;
            break;
          }
    }
  }
  PrecubicalSet::Builder b;
  b.name(set.name() + "-sub");
  for (CubeId c : set.sorted()) {
    if (removed.count(c.value)) continue;
    std::vector<std::string> lo, up;
    for (CubeId f : set.cube(c).lower) lo.push_back(set.id(f));
    for (CubeId f : set.cube(c).upper) up.push_back(set.id(f));
    b.add(set.id(c), set.dim(c), lo, up);
  }
  b.start(set.id(set.start())).end(set.id(set.end()));
  return b.build();
}

/// Copy of a set with every identifier replaced by a scrambled one.
inline PrecubicalSet relabeled(const PrecubicalSet& set, Rng& rng) {
  std::vector<CubeId> ids = set.sorted();
  std::shuffle(ids.begin(), ids.end(), rng);
  std::map<std::uint32_t, std::string> name;
  for (std::size_t k = 0; k < ids.size(); ++k) name[ids[k].value] = "q" + std::to_string(k);
  PrecubicalSet::Builder b;
  for (CubeId c : set.sorted()) {
    std::vector<std::string> lo, up;
    for (CubeId f : set.cube(c).lower) lo.push_back(name[f.value]);
    for (CubeId f : set.cube(c).upper) up.push_back(name[f.value]);
    b.add(name[c.value], set.dim(c), lo, up);
  }
  b.start(name[set.start().value]).end(name[set.end().value]);
  return b.build();
}

/// Image of a tame presentation in chain `a` under a morphism a -> b: the
/// same path presented in the coarser chain b.
inline PathPresentation push_forward(const PrecubicalSet& set, const ChainMorphism& f,
                                     const PathPresentation& pres) {
  PathPresentation out;
  std::size_t src = 0;
  for (std::size_t j = 0; j < f.target.cubes.size(); ++j) {
    const int m = set.dim(f.target.cubes[j]);
    PLMap map;
    const auto& blocks = f.partitions[j];
    for (std::size_t s = 0; s < blocks.size(); ++s, ++src) {
      const auto& seg = pres.segments[src];
      for (std::size_t k = 0; k < seg.map.points.size(); ++k) {
        if (s > 0 && k == 0) continue;  // shared junction
        RationalVector v(m);
        for (std::size_t e = 0; e < blocks.size(); ++e)
          for (std::size_t q = 0; q < blocks[e].size(); ++q)
            v[blocks[e][q]] = e < s ? Rational(1) : e > s ? Rational(0) : seg.map.points[k].value[q];
        map.points.push_back({seg.map.points[k].time, v});
      }
    }
    out.segments.push_back({f.target.cubes[j], std::move(map)});
  }
  return out;
}

}  // namespace testing_support
