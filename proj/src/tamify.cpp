#include "pathlab/tamify.hpp"

#include <algorithm>

#include "pathlab/error.hpp"

namespace pathlab {

Rational eval_R(int n, const Rational& t, const Rational& h) {
  const Rational nn(n);
  Rational g = 4 * nn * t + 12 * nn * nn * h - 8 * nn * nn;
  if (g < 0) return 0;
  if (g > 1) return 1;
  return g;
}

Rational eval_R_s(const Rational& s, int n, const Rational& t, const Rational& h) {
  return s * eval_R(n, t, h) + (1 - s) * h;
}

PLMap apply_R(const PLMap& map, int n, const Rational& s) {
  const Rational nn(n);
  auto inner = [&](const Rational& t, const Rational& h) -> Rational {
    return 4 * nn * t + 12 * nn * nn * h - 8 * nn * nn;
  };
  std::vector<Rational> times;
  for (const auto& bp : map.points) times.push_back(bp.time);
  for (std::size_t k = 0; k + 1 < map.points.size(); ++k) {
    const auto& p = map.points[k];
    const auto& q = map.points[k + 1];
    for (std::size_t j = 0; j < p.value.size(); ++j) {
      const Rational g0 = inner(p.time, p.value[j]);
      const Rational g1 = inner(q.time, q.value[j]);
      if (g0 == g1) continue;
      for (int level = 0; level <= 1; ++level) {
        const Rational lv(level);
        if ((g0 < lv && lv < g1) || (g1 < lv && lv < g0))
          times.push_back(p.time + (lv - g0) * (q.time - p.time) / (g1 - g0));
      }
    }
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  PLMap out;
  for (const auto& t : times) {
    RationalVector h = map.eval(t);
    for (auto& x : h) x = eval_R_s(s, n, t, x);
    out.points.push_back({t, std::move(h)});
  }
  return simplify(out);
}

PathPresentation apply_R(const PathPresentation& pres, int n, const Rational& s) {
  PathPresentation out = pres;
  for (auto& seg : out.segments) seg.map = apply_R(seg.map, n, s);
  return out;
}

PathPresentation tamify(const PrecubicalSet& set, const PathPresentation& pres) {
  check_presentation(set, pres);
  if (!is_bipointed(set, pres))
    throw Error(ErrorKind::NotBiPointed, "path does not run from the start to the end vertex");
  const Rational len = path_length(set, pres);
  if (len == 0) return pres;
  if (!is_integer(len) || !len.get_num().fits_sint_p())
    throw Error(ErrorKind::WrongLength, "path length " + len.get_str() + " is not an integer");
  const int n = static_cast<int>(len.get_num().get_si());
  PathPresentation out = naturalize(set, apply_R(naturalize(set, pres), n));
  for (auto& seg : out.segments) seg.map = simplify(seg.map);
  return out;
}

Regularization regularize(const PrecubicalSet& set, const PathPresentation& pres) {
  check_presentation(set, pres);
  if (!is_natural(set, pres) || !is_tame(set, pres))
    throw Error(ErrorKind::NotNaturalTame, "input is not a natural tame path");
  const Rational len = path_length(set, pres);
  const int n = static_cast<int>(len.get_num().get_si());

  Regularization out;
  PathPresentation current = pres;
  out.vertices.push_back(vertices_of_path(set, current));
  for (int r = 0; r <= n; ++r) {
    PathPresentation next = tamify(set, current);
    auto vert = vertices_of_path(set, next);
    if (vert == out.vertices.back()) break;
    if (r == n) throw std::logic_error("vertex set failed to stabilize");
    current = std::move(next);
    out.vertices.push_back(std::move(vert));
    ++out.iterations;
  }
  out.path = to_tame_presentation(set, current);
  return out;
}

}  // namespace pathlab
