#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathlab/progress.hpp"
#include "pathlab/track.hpp"
#include "support.hpp"

using namespace pathlab;
using namespace testing_support;

namespace {

Rational R(long p, long q = 1) { return frac(p, q); }

Segment seg(const PrecubicalSet& k, const char* cube, std::vector<std::pair<Rational, RationalVector>> pts) {
  Segment s{k.at(cube), {}};
  for (auto& [t, v] : pts) s.map.points.push_back({t, v});
  return s;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::MalformedInput;
}

// A vertex v, a loop edge x at v and a square e all of whose faces are x.
PrecubicalSet loop_square() {
  PrecubicalSet::Builder b;
  b.add("v", 0, {}, {}).add("x", 1, {"v"}, {"v"}).add("e", 2, {"x", "x"}, {"x", "x"});
  b.start("v").end("v");
  return b.build();
}

const PrecubicalSet& sq() {
  static const PrecubicalSet k = standard_cube(2);
  return k;
}

PathPresentation diagonal() { return {{seg(sq(), "**", {{0, {0, 0}}, {1, {1, 1}}})}}; }

PathPresentation boundary_two_edges() {
  return {{seg(sq(), "*0", {{0, {0}}, {1, {1}}}), seg(sq(), "1*", {{1, {0}}, {2, {1}}})}};
}

PathPresentation boundary_in_square() {
  return {{seg(sq(), "**", {{0, {0, 0}}, {1, {1, 0}}, {2, {1, 1}}})}};
}

// (0,0,0) -> (1,1/2,0) -> (1,1,1) across two squares of the cube boundary.
PathPresentation boundary3_nontame(const PrecubicalSet& k) {
  return {{seg(k, "**0", {{0, {0, 0}}, {R(3, 2), {1, R(1, 2)}}}),
           seg(k, "1**", {{R(3, 2), {R(1, 2), 0}}, {3, {1, 1}}})}};
}

}  // namespace

// --- PL maps --------------------------------------------------------------------

TEST_CASE("PL map evaluation and checks") {
  PLMap m{{{0, {0, 0}}, {2, {1, R(1, 2)}}, {3, {1, 1}}}};
  CHECK(m.eval(1) == RationalVector{R(1, 2), R(1, 4)});
  CHECK(m.eval(R(5, 2)) == RationalVector{1, R(3, 4)});
  CHECK(m.eval(3, 1) == 1);
  CHECK(kind_of([&] { m.eval(4); }) == ErrorKind::InvalidPath);
  check_plmap(m, 2);
  CHECK(kind_of([&] { check_plmap(m, 3); }) == ErrorKind::SizeMismatch);
  CHECK(kind_of([] { check_plmap(PLMap{{{0, {R(1, 2)}}, {1, {R(1, 4)}}}}, 1); }) ==
        ErrorKind::InvalidPath);
  CHECK(kind_of([] { check_plmap(PLMap{{{1, {0}}, {1, {1}}}}, 1); }) == ErrorKind::InvalidPath);
  CHECK(kind_of([] { check_plmap(PLMap{{{0, {0}}, {1, {2}}}}, 1); }) == ErrorKind::InvalidPath);
  CHECK(kind_of([] { check_plmap(PLMap{}, 0); }) == ErrorKind::InvalidPath);
}

TEST_CASE("simplify, restrict and compare PL maps") {
  PLMap m{{{0, {0}}, {1, {R(1, 2)}}, {2, {1}}}};
  const auto s = simplify(m);
  CHECK(s.points.size() == 2);
  CHECK(same_function(m, s));
  const auto r = restrict_to(m, R(1, 2), R(3, 2));
  CHECK(r.start_value() == RationalVector{R(1, 4)});
  CHECK(r.end_value() == RationalVector{R(3, 4)});
  CHECK(r.points.size() == 3);
  CHECK(!same_function(m, PLMap{{{0, {0}}, {2, {R(1, 2)}}}}));
  CHECK(drop_coordinates(PLMap{{{0, {0, 1}}, {1, {1, 1}}}}, {1}) == PLMap{{{0, {0}}, {1, {1}}}});
  CHECK(merged_times({&m, &r}) == std::vector<Rational>{0, R(1, 2), 1, R(3, 2), 2});
}

// --- presentations --------------------------------------------------------------

TEST_CASE("presentation checks") {
  check_presentation(sq(), diagonal());
  check_presentation(sq(), boundary_two_edges());
  // Junction points must agree after canonicalization.
  PathPresentation bad{{seg(sq(), "*0", {{0, {0}}, {1, {1}}}), seg(sq(), "0*", {{1, {0}}, {2, {1}}})}};
  CHECK(kind_of([&] { check_presentation(sq(), bad); }) == ErrorKind::InvalidPath);
  PathPresentation gap{{seg(sq(), "*0", {{0, {0}}, {1, {1}}}), seg(sq(), "1*", {{2, {0}}, {3, {1}}})}};
  CHECK(kind_of([&] { check_presentation(sq(), gap); }) == ErrorKind::InvalidPath);
  PathPresentation width{{seg(sq(), "*0", {{0, {0, 0}}, {1, {1, 0}}})}};
  CHECK(kind_of([&] { check_presentation(sq(), width); }) == ErrorKind::SizeMismatch);
  CHECK(kind_of([&] { check_presentation(sq(), PathPresentation{}); }) == ErrorKind::InvalidPath);
  // Presentations may cross faces: a junction inside a face of both cubes.
  const auto k3 = standard_cube(3);
  check_presentation(k3, boundary3_nontame(k3));
}

TEST_CASE("points and bi-pointedness") {
  CHECK(start_point(sq(), diagonal()).cube == sq().start());
  CHECK(end_point(sq(), diagonal()).cube == sq().end());
  CHECK(point_at(sq(), diagonal(), R(1, 2)).coords == RationalVector{R(1, 2), R(1, 2)});
  CHECK(is_bipointed(sq(), diagonal()));
  PathPresentation half{{seg(sq(), "**", {{0, {0, 0}}, {1, {R(1, 2), R(1, 2)}}})}};
  CHECK(!is_bipointed(sq(), half));
}

TEST_CASE("path length") {
  CHECK(path_length(sq(), diagonal()) == 2);
  CHECK(path_length(sq(), boundary_two_edges()) == 2);
  PathPresentation constant{{seg(sq(), "01", {{0, {}}, {5, {}}})}};
  CHECK(path_length(sq(), constant) == 0);
  PathPresentation partial{{seg(sq(), "**", {{0, {R(1, 3), 0}}, {7, {R(1, 2), R(2, 3)}}})}};
  CHECK(path_length(sq(), partial) == R(1, 6) + R(2, 3));
}

TEST_CASE("naturalization") {
  const auto k1 = standard_cube(1);
  PathPresentation slow{{seg(k1, "*", {{0, {0}}, {3, {R(1, 4)}}, {4, {1}}})}};
  const auto n1 = naturalize(k1, slow);
  CHECK(n1.segments.size() == 1);
  CHECK(same_function(n1.segments[0].map, PLMap{{{0, {0}}, {1, {1}}}}));

  PathPresentation diag2{{seg(sq(), "**", {{0, {0, 0}}, {4, {1, 1}}})}};
  CHECK(!is_natural(sq(), diag2));
  const auto nd = naturalize(sq(), diag2);
  CHECK(nd.segments[0].map == PLMap{{{0, {0, 0}}, {2, {1, 1}}}});
  CHECK(is_natural(sq(), nd));

  PathPresentation table{{seg(sq(), "**", {{0, {0, 0}}, {1, {1, 0}}, {3, {1, 1}}})}};
  CHECK(naturalize(sq(), table).segments[0].map == PLMap{{{0, {0, 0}}, {1, {1, 0}}, {2, {1, 1}}}});

  // Plateaus collapse.
  PathPresentation pause{{seg(sq(), "**", {{0, {0, 0}}, {1, {R(1, 2), 0}}, {5, {R(1, 2), 0}}, {6, {1, 1}}})}};
  const auto np = naturalize(sq(), pause);
  CHECK(np.end_time() == 2);
  CHECK(same_path(sq(), np, naturalize(sq(), np)));

  PathPresentation constant{{seg(sq(), "01", {{0, {}}, {5, {}}})}};
  const auto nc = naturalize(sq(), constant);
  CHECK(nc.segments.size() == 1);
  CHECK(nc.segments[0].map.points.size() == 1);
  CHECK(nc.start_time() == 0);
}

TEST_CASE("vertices of a path") {
  CHECK(vertices_of_path(sq(), diagonal()) == std::vector<Rational>{0, 1});
  CHECK(vertices_of_path(sq(), naturalize(sq(), diagonal())) == std::vector<Rational>{0, 2});
  CHECK(vertices_of_path(sq(), boundary_two_edges()) == std::vector<Rational>{0, 1, 2});
  CHECK(vertices_of_path(sq(), boundary_in_square()) == std::vector<Rational>{0, 1, 2});
  const auto k = boundary_cube(3);
  CHECK(vertices_of_path(k, boundary3_nontame(k)) == std::vector<Rational>{0, 3});
}

TEST_CASE("same path across presentations") {
  CHECK(same_path(sq(), boundary_two_edges(), boundary_in_square()));
  CHECK(!same_path(sq(), diagonal(), naturalize(sq(), diagonal())));
  CHECK(!same_path(sq(), naturalize(sq(), diagonal()), boundary_in_square()));
}

TEST_CASE("tameness") {
  CHECK(is_tame(sq(), diagonal()));
  CHECK(to_tame_presentation(sq(), diagonal()).segments.size() == 1);
  const auto two = to_tame_presentation(sq(), boundary_in_square());
  REQUIRE(two.segments.size() == 2);
  CHECK(sq().id(two.segments[0].cube) == "*0");
  CHECK(sq().id(two.segments[1].cube) == "1*");
  CHECK(is_tame_presentation(sq(), two));
  CHECK(is_tame_presentation(sq(), boundary_in_square()));
  PathPresentation split{{seg(sq(), "**", {{0, {0, 0}}, {1, {R(1, 2), R(1, 2)}}}),
                          seg(sq(), "**", {{1, {R(1, 2), R(1, 2)}}, {2, {1, 1}}})}};
  CHECK(!is_tame_presentation(sq(), split));
  CHECK(is_tame(sq(), split));
  CHECK(same_path(sq(), two, boundary_in_square()));

  const auto k = boundary_cube(3);
  CHECK(!is_tame(k, boundary3_nontame(k)));
  CHECK(kind_of([&] { to_tame_presentation(k, boundary3_nontame(k)); }) == ErrorKind::NotTame);

  // The same path in the full cube is tame: it runs inside the top cube.
  const auto k3 = standard_cube(3);
  CHECK(is_tame(k3, boundary3_nontame(k3)));
  const auto t3 = to_tame_presentation(k3, boundary3_nontame(k3));
  CHECK(t3.segments.size() == 1);
  CHECK(k3.id(t3.segments[0].cube) == "***");

  PathPresentation half{{seg(sq(), "**", {{0, {0, 0}}, {1, {R(1, 2), R(1, 2)}}})}};
  CHECK(kind_of([&] { is_tame(sq(), half); }) == ErrorKind::NotBiPointed);
}

TEST_CASE("chart pieces follow the carrier") {
  const auto pieces = chart_pieces(sq(), boundary_in_square());
  REQUIRE(pieces.size() == 2);
  CHECK(sq().id(pieces[0].carrier) == "*0");
  CHECK(sq().id(pieces[1].carrier) == "1*");
  CHECK(pieces[0].t1 == 1);
}

// --- tracks -----------------------------------------------------------------------

TEST_CASE("track validation") {
  const auto u2 = sq().at("**");
  Track diag{{{u2, {0, 1}, {0, 1}}}};
  CHECK(validate_track(sq(), diag).empty());
  CHECK(track_length(diag) == 2);

  Track bad{{{u2, {0}, {0, 1}}}};
  const auto v = validate_track(sq(), bad);
  REQUIRE(!v.empty());
  CHECK(v[0].kind == TrackViolation::Kind::Start);
  CHECK_THROWS_AS(track_length(bad), Error);

  Track edges{{{sq().at("*0"), {0}, {0}}, {sq().at("1*"), {0}, {0}}}};
  CHECK(validate_track(sq(), edges).empty());
  CHECK(track_length(edges) == 2);

  Track broken{{{sq().at("*0"), {0}, {0}}, {sq().at("*1"), {0}, {0}}}};
  bool junction = false;
  for (const auto& x : validate_track(sq(), broken)) junction |= x.kind == TrackViolation::Kind::Junction;
  CHECK(junction);

  Track range{{{u2, {0, 2}, {0, 1}}}};
  CHECK(validate_track(sq(), range)[0].kind == TrackViolation::Kind::IndexRange);
  CHECK(validate_track(sq(), Track{})[0].kind == TrackViolation::Kind::Empty);
}

TEST_CASE("track extraction") {
  const auto d = extract_track(sq(), diagonal());
  CHECK(d.track == Track{{{sq().at("**"), {0, 1}, {0, 1}}}});

  // The boundary path given inside the square, split at the corner: frozen
  // coordinates are dropped and the pieces land in the two edges.
  PathPresentation wasteful{{seg(sq(), "**", {{0, {0, 0}}, {1, {1, 0}}}),
                             seg(sq(), "**", {{1, {1, 0}}, {2, {1, 1}}})}};
  const auto w = extract_track(sq(), wasteful);
  CHECK(w.track == Track{{{sq().at("*0"), {0}, {0}}, {sq().at("1*"), {0}, {0}}}});
  CHECK(validate_track(sq(), w.track).empty());
  CHECK(same_path(sq(), w.presentation, wasteful));

  // Minimality of the normalized presentation.
  for (std::size_t i = 0; i < w.presentation.segments.size(); ++i) {
    const auto& m = w.presentation.segments[i].map;
    for (const auto& x : m.end_value()) CHECK(x != 0);
    for (const auto& x : m.start_value()) CHECK(x != 1);
  }

  const auto k = boundary_cube(3);
  const auto e = extract_track(k, boundary3_nontame(k));
  CHECK(e.track == Track{{{k.at("**0"), {0, 1}, {0}}, {k.at("1**"), {1}, {0, 1}}}});
  CHECK(track_length(e.track) == 3);

  PathPresentation constant{{seg(sq(), "00", {{0, {}}, {1, {}}})}};
  const auto k0 = standard_cube(0);
  PathPresentation point{{seg(k0, "()", {{0, {}}})}};
  CHECK(kind_of([&] { extract_track(k0, point); }) == ErrorKind::ConstantPath);
  CHECK(kind_of([&] { extract_track(sq(), constant); }) == ErrorKind::NotBiPointed);
}

TEST_CASE("action tables") {
  const auto u2 = sq().at("**");
  const auto one = action_table(sq(), Track{{{u2, {0, 1}, {0, 1}}}});
  REQUIRE(one.actions.size() == 2);
  for (const auto& a : one.actions) {
    CHECK(a.beg == 0);
    CHECK(a.end == 0);
  }

  const auto two = action_table(sq(), Track{{{sq().at("*0"), {0}, {0}}, {sq().at("1*"), {0}, {0}}}});
  REQUIRE(two.actions.size() == 2);
  CHECK(two.actions[0].beg == 0);
  CHECK(two.actions[0].end == 0);
  CHECK(two.actions[1].beg == 1);
  CHECK(two.actions[1].end == 1);
  CHECK(two.finished(1) == std::vector<int>{0});
  CHECK(two.unstarted(0) == std::vector<int>{1});

  const auto k = boundary_cube(3);
  const auto t = extract_track(k, boundary3_nontame(k)).track;
  const auto table = action_table(k, t);
  REQUIRE(table.actions.size() == 3);
  // The action in slot 2 of the first square continues as slot 1 of the second.
  const int p = table.at_stage[0][1];
  CHECK(table.actions[p].beg == 0);
  CHECK(table.actions[p].end == 1);
  CHECK(table.actions[p].slot(1) == 0);
  CHECK(table.active(1).size() == 2);

  CHECK(kind_of([&] { action_table(sq(), Track{{{u2, {0}, {0, 1}}}}); }) ==
        ErrorKind::NotATrackPresentation);
}

TEST_CASE("action table invariants on random tracks") {
  Rng rng(11);
  for (const auto& set : {standard_cube(3), boundary_cube(3), double_cube(), swiss_flag()}) {
    const LowerFaceIndex index(set);
    for (int trial = 0; trial < 20; ++trial) {
      const auto p = some_track_path(set, index, rng);
      const auto ex = extract_track(set, p);
      REQUIRE(validate_track(set, ex.track).empty());
      const auto table = action_table(set, ex.track);
      CHECK(static_cast<int>(table.actions.size()) == track_length(ex.track));
      CHECK(track_length(ex.track) == path_length(set, p));
      for (std::size_t i = 0; i < ex.track.entries.size(); ++i) {
        const auto& e = ex.track.entries[i];
        const int d = set.dim(e.cube);
        std::vector<int> seen(d, 0);
        for (int slot = 0; slot < d; ++slot) {
          const auto& a = table.actions[table.at_stage[i][slot]];
          CHECK(a.slot(static_cast<int>(i)) == slot);
          ++seen[slot];
          const bool in_a = std::binary_search(e.A.begin(), e.A.end(), slot);
          const bool in_b = std::binary_search(e.B.begin(), e.B.end(), slot);
          CHECK((a.beg == static_cast<int>(i)) == in_a);
          CHECK((a.end == static_cast<int>(i)) == in_b);
        }
        CHECK(table.finished(static_cast<int>(i)).size() + table.active(static_cast<int>(i)).size() +
                  table.unstarted(static_cast<int>(i)).size() ==
              table.actions.size());
      }
    }
  }
}

// --- progress functions -------------------------------------------------------------

TEST_CASE("progress function of the diagonal") {
  const auto track = extract_track(sq(), naturalize(sq(), diagonal())).track;
  const auto f = progress_from_path(sq(), naturalize(sq(), diagonal()), track);
  REQUIRE(f.f.size() == 2);
  for (const auto& g : f.f) CHECK(same_function(g, PLMap{{{0, {0}}, {2, {1}}}}));
  CHECK(same_path(sq(), path_from_progress(sq(), f), naturalize(sq(), diagonal())));
}

TEST_CASE("progress functions of one path in two presentations swap") {
  const auto k = loop_square();
  PathPresentation a{{seg(k, "e", {{0, {0, 0}}, {1, {1, 0}}, {2, {1, 1}}})}};
  PathPresentation b{{seg(k, "e", {{0, {0, 0}}, {1, {0, 1}}, {2, {1, 1}}})}};
  CHECK(same_path(k, a, b));
  const auto e = k.at("e");
  const Track track{{{e, {0, 1}, {0, 1}}}};
  const auto fa = progress_from_path(k, a, track);
  const auto fb = progress_from_path(k, b, track);
  const PLMap first{{{0, {0}}, {1, {1}}, {2, {1}}}};
  const PLMap second{{{0, {0}}, {1, {0}}, {2, {1}}}};
  CHECK(same_function(fa.f[0], first));
  CHECK(same_function(fa.f[1], second));
  CHECK(same_function(fb.f[0], second));
  CHECK(same_function(fb.f[1], first));
  CHECK(fa.support_start(1) == 1);
  CHECK(fa.support_end(0) == 1);
  const auto back = path_from_progress(k, fa);
  CHECK(same_path(k, back, a));
  CHECK(same_path(k, path_from_progress(k, fb), a));
}

TEST_CASE("progress functions reject foreign presentations") {
  const auto u2 = sq().at("**");
  CHECK(kind_of([&] { progress_from_path(sq(), boundary_two_edges(), Track{{{u2, {0, 1}, {0, 1}}}}); }) ==
        ErrorKind::NotATrackPresentation);
}

TEST_CASE("infeasible progress functions are rejected") {
  const Track track{{{sq().at("*0"), {0}, {0}}, {sq().at("1*"), {0}, {0}}}};
  auto f = progress_from_path(sq(), boundary_two_edges(), track);
  CHECK(!feasible_times(f).empty());
  // Let the second action start before the first one finishes.
  std::swap(f.f[0], f.f[1]);
  CHECK(feasible_times(f).empty());
  CHECK(kind_of([&] { path_from_progress(sq(), f); }) == ErrorKind::InfeasibleProgressFunction);
}

TEST_CASE("progress roundtrip on random track paths") {
  Rng rng(5);
  for (const auto& set : {standard_cube(3), boundary_cube(3), double_cube()}) {
    const LowerFaceIndex index(set);
    for (int trial = 0; trial < 15; ++trial) {
      const auto p = some_track_path(set, index, rng);
      const auto ex = extract_track(set, p);
      const auto f = progress_from_path(set, ex.presentation, ex.track);
      check_progress(set, f);
      const auto times = feasible_times(f);
      REQUIRE(times.size() == ex.track.entries.size() + 1);
      CHECK(same_path(set, ex.presentation, p));
      const auto back = path_from_progress(set, f);
      CHECK(back.start_time() == p.start_time());
      CHECK(back.end_time() == p.end_time());
      CHECK(same_path(set, back, p));
    }
  }
}

// --- invariants on a random corpus --------------------------------------------------

TEST_CASE("length invariance and idempotent naturalization") {
  Rng rng(3);
  for (const auto& set : {standard_cube(3), boundary_cube(3), double_cube(), swiss_flag()}) {
    const LowerFaceIndex index(set);
    for (int trial = 0; trial < 15; ++trial) {
      const auto p = some_track_path(set, index, rng);
      const auto n = naturalize(set, p);
      CHECK(is_natural(set, n));
      CHECK(naturalize(set, n) == n);
      CHECK(path_length(set, n) == path_length(set, p));
      CHECK(path_length(set, extract_track(set, p).presentation) == path_length(set, p));
      const auto v = vertices_of_path(set, n);
      for (const auto& t : v) CHECK(is_integer(t));
      CHECK(is_tame(set, n) == is_tame(set, p));
    }
  }
}
