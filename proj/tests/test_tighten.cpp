#include "doctest.h"

#include "fixtures.hpp"
#include "taut/tighten.hpp"

#include <cmath>

using namespace taut;

namespace {

PathPoly path(std::vector<Point> v, const PolygonalDomain& d, bool closure = false) {
  return make_path(std::move(v), d, closure);
}

std::vector<Point> pts(std::initializer_list<std::pair<long, long>> xy) {
  std::vector<Point> out;
  for (auto [x, y] : xy) out.emplace_back(x, y);
  return out;
}

// Chord through x, lifted at the copy reached by walking straight from the
// path's start to x.
LiftedChord chord_at(Cover& cover, const PolygonalDomain& d, const PathPoly& p, const Point& x, const LineSpec& line) {
  const int node = p.p() == x ? cover.root() : lift_end(make_path({p.p(), x}, d), cover);
  return chord_through(cover, node, x, line, false);
}

}  // namespace

TEST_CASE("replace_move on small cases") {
  auto sq = fixtures::square();
  auto t = triangulate(sq);
  auto v = path(pts({{0, 0}, {1, 1}, {2, 0}}), sq);
  Cover cover(t, start_triangle(t, v.p()));
  auto chord = chord_at(cover, sq, v, Point(0, 0), LineSpec{Point(0, 0), Point(1, 0)});
  auto moved = replace_move(v, chord, cover);
  REQUIRE(moved);
  CHECK(moved->vertices == pts({{0, 0}, {2, 0}}));

  auto once = path(pts({{0, 0}, {1, 1}}), sq);
  Cover c2(t, start_triangle(t, once.p()));
  auto ch2 = chord_at(c2, sq, once, Point(0, 0), LineSpec{Point(0, 0), Point(1, 0)});
  CHECK(!replace_move(once, ch2, c2));

  Cover other(t, start_triangle(t, once.p()));
  CHECK_THROWS_AS(replace_move(once, ch2, other), ChordMismatch);
}

TEST_CASE("replace_move flattens the D1 top path onto y = 1") {
  auto d = fixtures::d1();
  auto t = triangulate(d);
  auto top = path(pts({{-3, 0}, {0, 3}, {3, 0}}), d);
  Cover cover(t, start_triangle(t, top.p()));
  auto chord = chord_at(cover, d, top, Point(-2, 1), LineSpec{Point(0, 1), Point(1, 0)});
  auto moved = replace_move(top, chord, cover);
  REQUIRE(moved);
  CHECK(moved->vertices == pts({{-3, 0}, {-2, 1}, {2, 1}, {3, 0}}));
  CHECK(moved->length() < top.length());
  CHECK(homotopic(top, *moved, t));
}

TEST_CASE("tighten in a convex domain gives the segment") {
  auto sq = fixtures::square();
  auto zig = path(pts({{-4, -4}, {3, -2}, {-2, 1}, {4, 2}, {1, 4}}), sq);
  auto r = tighten(zig, sq);
  CHECK(r.result.vertices == pts({{-4, -4}, {1, 4}}));
  CHECK(r.funnel_agrees);
}

TEST_CASE("tighten on D1 golden cases") {
  auto d = fixtures::d1();
  auto top = path(pts({{-3, 0}, {0, 3}, {3, 0}}), d);
  auto r = tighten(top, d);
  CHECK(r.result.vertices == pts({{-3, 0}, {-1, 1}, {1, 1}, {3, 0}}));
  CHECK(std::fabs(r.result.length() - fixtures::golden_top()) < 1e-9);
  CHECK(r.funnel_agrees);
  for (std::size_t i = 1; i < r.length_trace.size(); ++i) CHECK(r.length_trace[i] < r.length_trace[i - 1]);

  auto loop = path(pts({{-3, 0}, {0, 3}, {3, 0}, {0, -3}, {-3, 0}}), d);
  auto rl = tighten(loop, d);
  CHECK(rl.result.vertices == pts({{-3, 0}, {-1, 1}, {1, 1}, {1, -1}, {-1, -1}, {-3, 0}}));
  CHECK(std::fabs(rl.result.length() - fixtures::golden_loop()) < 1e-9);
  CHECK(rl.funnel_agrees);

  auto twice = path(pts({{-3, 0}, {0, 3}, {3, 0}, {0, -3}, {-3, 1}, {0, 4}, {4, 0}, {0, -4}, {-3, 0}}), d);
  auto rt = tighten(twice, d);
  CHECK(std::fabs(rt.result.length() - (14 + 2 * std::sqrt(5.0))) < 1e-9);
  CHECK(rt.funnel_agrees);
}

TEST_CASE("trivial class returns the constant path") {
  auto d = fixtures::d1();
  auto there_and_back = path(pts({{-3, 0}, {-3, 3}, {-4, 1}, {-3, 0}}), d);
  auto r = tighten(there_and_back, d);
  CHECK(r.result.vertices == pts({{-3, 0}}));
  CHECK(r.result.length() == 0.0);
}

TEST_CASE("moves preserve the class and replay exactly") {
  auto d = fixtures::d1();
  auto t = triangulate(d);
  auto wiggly = path(pts({{-3, 0}, {-4, 3}, {-2, 2}, {0, 4}, {2, 2}, {4, 3}, {2, -2}, {3, 0}}), d);
  auto r = tighten(wiggly, d);
  auto snaps = replay_moves(wiggly, r.moves);
  REQUIRE(snaps.size() == r.moves.size() + 1);
  CHECK(snaps.back().vertices == r.result.vertices);
  Cover cover(t, start_triangle(t, wiggly.p()));
  const int target = lift_end(wiggly, cover);
  for (const auto& s : snaps) CHECK(lift_end(s, cover) == target);
  for (std::size_t i = 1; i < r.length_trace.size(); ++i) CHECK(r.length_trace[i] < r.length_trace[i - 1]);
  CHECK(chord_persistence_violations(snaps, t, vertex_pair_lines(d, wiggly.p(), wiggly.q())) == 0);
}

TEST_CASE("funnel in a single triangle") {
  auto tri_dom = PolygonalDomain::oriented(pts({{0, 0}, {10, 0}, {0, 10}}));
  auto t = triangulate(tri_dom);
  auto s = build_sleeve({}, t, 0);
  auto f = funnel_shortest(s, Point(1, 1), Point(5, 2));
  CHECK(f.vertices == pts({{1, 1}, {5, 2}}));
}

TEST_CASE("certificate") {
  auto sq = fixtures::square();
  auto seg = path(pts({{-3, -1}, {4, 2}}), sq);
  auto c = certify_efficient(seg, sq, 1000, 1);
  CHECK(c.violations == 0);
  CHECK(c.taut_vertices_ok);
  CHECK(c.lines_sampled >= 1000);

  auto v = path(pts({{0, 0}, {1, 1}, {2, 0}}), sq);
  auto cv = certify_efficient(v, sq, 200, 1);
  CHECK(cv.violations >= 1);
  CHECK(!cv.taut_vertices_ok);

  auto d = fixtures::d1();
  auto r = tighten(path(pts({{-3, 0}, {0, 3}, {3, 0}}), d), d);
  auto cd = certify_efficient(r.result, d, 1000, 42);
  CHECK(cd.violations == 0);
  CHECK(cd.taut_vertices_ok);
}

TEST_CASE("locally shortest check") {
  auto d = fixtures::d1();
  auto top = path(pts({{-3, 0}, {0, 3}, {3, 0}}), d);
  auto r = tighten(top, d);
  CHECK(locally_shortest_check(r.result, d, 10));
  CHECK(!locally_shortest_check(top, d, 10));
  auto sq = fixtures::square();
  CHECK(locally_shortest_check(path(pts({{-3, -1}, {4, 2}}), sq), sq, 7));
}
