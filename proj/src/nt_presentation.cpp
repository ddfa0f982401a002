#include "pathlab/nt_presentation.hpp"

#include "pathlab/error.hpp"

namespace pathlab {

namespace {

void require_natural_tame(const PrecubicalSet& set, const PathPresentation& pres) {
  check_presentation(set, pres);
  if (!is_natural_tame(set, pres))
    throw Error(ErrorKind::NotNaturalTame, "expected a natural tame presentation");
}

bool at_vertex(const RationalVector& x) {
  for (const auto& v : x)
    if (v != 0 && v != 1) return false;
  return true;
}

bool in_interior(const RationalVector& x) {
  for (const auto& v : x)
    if (v <= 0 || v >= 1) return false;
  return true;
}

}  // namespace

bool is_natural_tame(const PrecubicalSet& set, const PathPresentation& pres) {
  return is_natural(set, pres) && is_tame_presentation(set, pres) && is_bipointed(set, pres);
}

MinimalPresentation minimal_presentation(const PrecubicalSet& set, const PathPresentation& pres) {
  require_natural_tame(set, pres);
  MinimalPresentation out;
  for (const auto& seg : pres.segments) {
    const int d = set.dim(seg.cube);
    if (d == 0) continue;
    const auto& m = seg.map;
    // Natural maps reach vertices only at integer times.
    std::vector<Rational> cuts{m.start_time()};
    for (Integer k = m.start_time().get_num() + 1; k < m.end_time(); ++k)
      if (at_vertex(m.eval(Rational(k)))) cuts.emplace_back(k);
    cuts.push_back(m.end_time());

    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
      const auto from = m.eval(cuts[j]);
      const auto to = m.eval(cuts[j + 1]);
      FaceWord word(d, '*');
      std::vector<int> fixed;
      for (int x = 0; x < d; ++x) {
        if (from[x] == 1) word[x] = '1';
        else if (to[x] == 0) word[x] = '0';
        else continue;
        fixed.push_back(x);
      }
      const CubeId piece = face_at(set, seg.cube, word);
      out.chain.cubes.push_back(piece);
      out.presentation.segments.push_back(
          {piece, simplify(drop_coordinates(restrict_to(m, cuts[j], cuts[j + 1]), fixed))});
    }
  }
  if (out.presentation.segments.empty()) {
    // Constant path at 0_K = 1_K.
    const auto& first = pres.segments.front();
    const CubeId v = extreme_vertex(set, first.cube, Side::Lower);
    out.presentation.segments.push_back({v, PLMap{{{first.map.start_time(), {}}}}});
  }
  return out;
}

bool is_regular(const PrecubicalSet& set, const PathPresentation& pres) {
  require_natural_tame(set, pres);
  for (const auto& seg : pres.segments) {
    const auto& pts = seg.map.points;
    bool found = in_interior(pts.front().value);
    for (std::size_t j = 0; !found && j + 1 < pts.size(); ++j) {
      const Rational mid = (pts[j].time + pts[j + 1].time) / 2;
      found = in_interior(seg.map.eval(mid)) || in_interior(pts[j + 1].value);
    }
    if (!found) return false;
  }
  return true;
}

const char* to_string(Equivalence e) {
  switch (e) {
    case Equivalence::Equivalent: return "equivalent";
    case Equivalence::NotEquivalent: return "not-equivalent";
    case Equivalence::Undecided: return "undecided";
  }
  return "undecided";
}

Equivalence presentations_equivalent(const PrecubicalSet& set, const PathPresentation& p1,
                                     const PathPresentation& p2, bool cube_subcomplex) {
  require_natural_tame(set, p1);
  require_natural_tame(set, p2);
  if (!same_path(set, p1, p2))
    throw Error(ErrorKind::DifferentPaths, "the presentations describe different paths");
  const auto m1 = minimal_presentation(set, p1);
  const auto m2 = minimal_presentation(set, p2);
  bool equal = m1.chain == m2.chain &&
               m1.presentation.segments.size() == m2.presentation.segments.size();
  for (std::size_t i = 0; equal && i < m1.presentation.segments.size(); ++i)
    equal = same_function(m1.presentation.segments[i].map, m2.presentation.segments[i].map);
  if (equal) return Equivalence::Equivalent;
  if (cube_subcomplex || is_regular(set, m1.presentation) || is_regular(set, m2.presentation))
    return Equivalence::NotEquivalent;
  return Equivalence::Undecided;
}

}  // namespace pathlab
