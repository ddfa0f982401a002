#include <set>

#include "pathlab/dpath.hpp"
#include "pathlab/error.hpp"

namespace pathlab {

namespace {

bool all_equal(const RationalVector& x, int v) {
  for (const auto& c : x)
    if (c != v) return false;
  return true;
}

// Lifts the pieces [first, last) into cube `c` so that they run from the
// all-zero to the all-one vector, choosing for each piece a word that
// carries it into c.
class Lifter {
 public:
  Lifter(const PrecubicalSet& set, const std::vector<ChartPiece>& pieces, std::size_t first,
         std::size_t last, CubeId c)
      : pieces_(pieces), first_(first), last_(last), dim_(set.dim(c)),
        words_(faces_by_word(set, c)) {}

  bool run(PLMap& out) {
    values_.assign(last_ - first_, {});
    if (!step(0, RationalVector(dim_, Rational(0)))) return false;
    out.points.clear();
    out.points.push_back({pieces_[first_].t0, RationalVector(dim_, Rational(0))});
    for (std::size_t k = 0; k < values_.size(); ++k)
      out.points.push_back({pieces_[first_ + k].t1, values_[k]});
    return true;
  }

 private:
  bool step(std::size_t k, const RationalVector& prev) {
    if (k == values_.size()) return all_equal(prev, 1);
    if (failed_.count({k, prev})) return false;
    const auto& piece = pieces_[first_ + k];
    auto it = words_.find(piece.carrier.value);
    if (it != words_.end()) {
      for (const auto& w : it->second) {
        if (coface_word(piece.from, w) != prev) continue;
        values_[k] = coface_word(piece.to, w);
        if (step(k + 1, values_[k])) return true;
      }
    }
    failed_.insert({k, prev});
    return false;
  }

  const std::vector<ChartPiece>& pieces_;
  std::size_t first_, last_;
  int dim_;
  std::unordered_map<std::uint32_t, std::vector<FaceWord>> words_;
  std::vector<RationalVector> values_;
  std::set<std::pair<std::size_t, RationalVector>> failed_;
};

}  // namespace

PathPresentation to_tame_presentation(const PrecubicalSet& set, const PathPresentation& pres) {
  if (!is_bipointed(set, pres))
    throw Error(ErrorKind::NotBiPointed, "path does not run from the start to the end vertex");
  const auto pieces = chart_pieces(set, pres);
  PathPresentation out;
  if (pieces.empty()) {
    out.segments.push_back({set.start(), PLMap{{{pres.start_time(), {}}}}});
    return out;
  }

  std::size_t first = 0;
  Point v = start_point(set, pres);
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const auto& piece = pieces[k];
    const Point w = canonical_point(set, {piece.cube, coface_word(piece.to, piece.word)});
    if (set.dim(w.cube) != 0 && k + 1 < pieces.size()) continue;

    Rational d = 0;
    for (std::size_t m = first; m <= k; ++m)
      d += coordinate_sum(pieces[m].to) - coordinate_sum(pieces[m].from);
    const Rational& t0 = pieces[first].t0;
    const Rational& t1 = piece.t1;
    if (d == 0) {
      out.segments.push_back({v.cube, PLMap{{{t0, {}}, {t1, {}}}}});
    } else {
      bool lifted = false;
      if (is_integer(d)) {
        for (CubeId c : set.cubes_spanning(v.cube, w.cube, static_cast<int>(d.get_num().get_si()))) {
          PLMap map;
          if (Lifter(set, pieces, first, k + 1, c).run(map)) {
            out.segments.push_back({c, std::move(map)});
            lifted = true;
            break;
          }
        }
      }
      if (!lifted)
        throw Error(ErrorKind::NotTame, "no cube carries the path between vertex times " +
                                            t0.get_str() + " and " + t1.get_str());
    }
    v = w;
    first = k + 1;
  }
  return out;
}

bool is_tame(const PrecubicalSet& set, const PathPresentation& pres) {
  try {
    to_tame_presentation(set, pres);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotTame) return false;
    throw;
  }
}

bool is_tame_presentation(const PrecubicalSet&, const PathPresentation& pres) {
  for (const auto& seg : pres.segments)
    if (!all_equal(seg.map.start_value(), 0) || !all_equal(seg.map.end_value(), 1)) return false;
  return true;
}

}  // namespace pathlab
