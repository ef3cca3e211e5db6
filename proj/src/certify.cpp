#include "internal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace taut {

namespace detail {

bool vertex_taut(const PathPoly& path, const LiftedPath& lifted, Cover& cover, std::size_t i) {
  const Point& a = path.vertices[i - 1];
  const Point& w = path.vertices[i];
  const Point& b = path.vertices[i + 1];
  const int turn = orient(w, a, b);
  if (turn == 0 && dot(w, a, b) < 0) return true;
  const Triangulation& t = cover.triangulation();
  const int wid = t.vertex_at(w);
  if (wid < 0) return false;
  const int n_in = node_arriving(lifted, i - 1, Rational(1));
  const int n_out = node_leaving(lifted, i, Rational(0));
  if (n_in == n_out) return false;
  // Sweep direction from the incoming to the outgoing triangle around w.
  for (int dir : {1, -1}) {
    int m = n_in;
    while (m >= 0) {
      const int li = t.local_index(cover.tri(m), wid);
      m = cover.neighbor(m, dir > 0 ? (li + 2) % 3 : li);
      if (m == n_out) return dir > 0 ? turn < 0 || (turn == 0 && dot(w, a, b) < 0)
                                     : turn > 0 || (turn == 0 && dot(w, a, b) < 0);
    }
  }
  throw std::logic_error("path lift is not continuous at a vertex");
}

}  // namespace detail

namespace {

// Angular position of v measured counter-clockwise from ref: half-plane
// index, then a cross-product comparison inside the half-plane.
bool ccw_before(const Point& ref, const Point& v1, const Point& v2) {
  const Point o(0, 0);
  auto half = [&](const Point& v) {
    const int c = orient(o, ref, v);
    return c > 0 || (c == 0 && dot(o, ref, v) > 0) ? 0 : 1;
  };
  const int h1 = half(v1), h2 = half(v2);
  if (h1 != h2) return h1 < h2;
  return orient(o, v1, v2) > 0;
}

Point minus(const Point& a, const Point& b) { return Point(a.x() - b.x(), a.y() - b.y()); }

// A closure path can run through the domain vertex where an open chord ends.
// Its push-off into the domain crosses the chord there when the chord's
// direction lies strictly inside the free angle swept by the path at that
// vertex. Returns those path parameters.
std::vector<PathParam> pushoff_crossings(const PathPoly& path, const LiftedPath& lifted, const LiftedChord& chord,
                                         Cover& cover) {
  std::vector<PathParam> out;
  const Triangulation& tri = cover.triangulation();
  const std::size_t segs = path.vertices.size() - 1;
  for (int end = 0; end < 2; ++end) {
    const Rational& te = end == 0 ? chord.t0 : chord.t1;
    const Point x = chord.at(te);
    const int vid = tri.vertex_at(x);
    if (vid < 0) continue;
    const Point& dir = chord.line.direction;
    const Point into = end == 0 ? dir : Point(-dir.x(), -dir.y());
    // Free sector at x: from the first fan triangle's leading edge,
    // counter-clockwise to the last one's trailing edge.
    const auto fan = tri.fan(vid);
    const Point start = minus(tri.corner(fan.front(), tri.local_index(fan.front(), vid) + 1), x);
    const int cn = chord.node_at(te);
    for (std::size_t i = 0; i < segs; ++i) {
      const Point& u = path.vertices[i];
      const Point& v = path.vertices[i + 1];
      Rational s;
      Point r_in(0, 0), r_out(0, 0);
      if (u == x) {
        if (i == 0) continue;
        s = 0;
        r_in = minus(path.vertices[i - 1], x);
        r_out = minus(v, x);
      } else if (v != x && on_segment(u, v, x)) {
        s = *line_param(u, v, x, Point(x.x() + dir.y(), x.y() - dir.x()));
        r_in = minus(u, x);
        r_out = minus(v, x);
      } else {
        continue;
      }
      if (cn < 0 || cover.canonical(detail::node_leaving(lifted, i, s), x) != cover.canonical(cn, x)) continue;
      // Order the two rays inside the free sector; the push-off sweeps
      // between them.
      const Point& lo = ccw_before(start, r_in, r_out) ? r_in : r_out;
      const Point& hi = ccw_before(start, r_in, r_out) ? r_out : r_in;
      if (ccw_before(start, lo, into) && ccw_before(start, into, hi)) out.push_back({i, s});
    }
  }
  return out;
}

}  // namespace

bool taut_vertices(const PathPoly& path, const Triangulation& tri) {
  Cover cover(tri, start_triangle(tri, path.p()));
  LiftedPath lifted = lift(path, cover);
  for (std::size_t i = 1; i + 1 < path.vertices.size(); ++i) {
    if (!detail::vertex_taut(path, lifted, cover, i)) return false;
  }
  return true;
}

CertificateSummary certify_efficient(const PathPoly& path, const PolygonalDomain& d, std::size_t n_lines,
                                     std::uint64_t seed) {
  const Triangulation tri = triangulate(d);
  Cover cover(tri, start_triangle(tri, path.p()));
  LiftedPath lifted = lift(path, cover);

  std::vector<LineSpec> lines;
  std::mt19937_64 rng(seed);
  auto box = d.bounding_box();
  const double cx = (box[0].get_d() + box[2].get_d()) / 2, cy = (box[1].get_d() + box[3].get_d()) / 2;
  const double half = std::hypot(box[2].get_d() - box[0].get_d(), box[3].get_d() - box[1].get_d()) / 2;
  std::uniform_real_distribution<double> angle(0.0, M_PI), offset(-half, half);
  for (std::size_t k = 0; k < n_lines; ++k) {
    const double th = angle(rng), off = offset(rng);
    Point anchor(from_double(cx - off * std::sin(th)), from_double(cy + off * std::cos(th)));
    lines.push_back(LineSpec::from_angle(anchor, th));
  }
  auto pairs = vertex_pair_lines(d, path.p(), path.q());
  lines.insert(lines.end(), pairs.begin(), pairs.end());

  CertificateSummary out;
  out.lines_sampled = lines.size();
  for (const auto& line : lines) {
    for (const auto& chord : detail::chords_met(path, lifted, cover, line, false, true)) {
      auto ms = meeting_set(path, lifted, chord, cover);
      if (ms.size() > 1 || (ms.size() == 1 && ms[0].forward && ms[0].backward)) ++out.violations;
    }
  }
  for (std::size_t i = 1; i + 1 < path.vertices.size(); ++i) {
    if (!detail::vertex_taut(path, lifted, cover, i)) out.taut_vertices_ok = false;
  }
  return out;
}

bool locally_shortest_check(const PathPoly& path, const PolygonalDomain& d, std::size_t grid) {
  if (path.vertices.size() < 2 || grid < 2) return true;
  const Triangulation tri = triangulate(d);
  auto cover = std::make_shared<Cover>(tri, start_triangle(tri, path.p()));
  LiftedPath lifted = lift(path, *cover);
  const std::size_t segs = path.vertices.size() - 1;

  struct Mark {
    PathParam at;
    Point x;
    int leave, arrive;
    double offset;  // arc length from p
  };
  std::vector<double> prefix{0.0};
  for (std::size_t i = 0; i < segs; ++i) prefix.push_back(prefix.back() + distance(path.vertices[i], path.vertices[i + 1]));
  std::vector<Mark> marks;
  for (std::size_t k = 1; k < grid; ++k) {
    const Rational u = ratio(static_cast<long>(k * segs), static_cast<long>(grid));
    mpz_class whole = u.get_num() / u.get_den();
    const std::size_t seg = whole.get_ui();
    const Rational s = u - Rational(whole);
    Mark m{{seg, s}, detail::point_at(path, {seg, s}), 0, 0, 0.0};
    m.leave = detail::node_leaving(lifted, seg, s);
    m.arrive = s == 0 ? detail::node_arriving(lifted, seg - 1, Rational(1)) : detail::node_arriving(lifted, seg, s);
    m.offset = prefix[seg] + distance(path.vertices[seg], m.x);
    marks.push_back(m);
  }
  for (std::size_t i = 0; i < marks.size(); ++i) {
    for (std::size_t j = i + 1; j < marks.size(); ++j) {
      const double sub = marks[j].offset - marks[i].offset;
      Sleeve sleeve = build_sleeve(cover, marks[i].leave, marks[j].arrive);
      const double best = funnel_shortest(sleeve, marks[i].x, marks[j].x).length();
      if (std::fabs(sub - best) > 1e-9 * std::max(1.0, sub)) return false;
    }
  }
  return true;
}

std::size_t chord_persistence_violations(const std::vector<PathPoly>& snapshots, const Triangulation& tri,
                                         const std::vector<LineSpec>& lines) {
  if (snapshots.empty()) return 0;
  Cover cover(tri, start_triangle(tri, snapshots.front().p()));
  // Chord identity: line index, parameter range, canonical node at the middle.
  using Key = std::tuple<std::size_t, std::string, std::string, int>;
  std::map<Key, bool> connected_before;
  std::size_t violations = 0;
  std::vector<std::vector<LiftedChord>> cache(lines.size());
  for (const auto& snap : snapshots) {
    if (snap.vertices.size() < 2) continue;
    LiftedPath lifted = lift(snap, cover);
    for (std::size_t li = 0; li < lines.size(); ++li) {
      for (const auto& chord : detail::chords_met(snap, lifted, cover, lines[li], true, false, &cache[li])) {
        const Rational mid = (chord.t0 + chord.t1) / 2;
        const Key key{li, chord.t0.get_str(), chord.t1.get_str(), cover.canonical(chord.node_at(mid), chord.at(mid))};
        const auto ms = meeting_set(snap, lifted, chord, cover);
        std::size_t components = ms.size();
        for (const PathParam& x : pushoff_crossings(snap, lifted, chord, cover)) {
          const bool joins = std::any_of(ms.begin(), ms.end(), [&](const MeetInterval& m) {
            return m.lo == x || m.hi == x;
          });
          if (!joins) ++components;
        }
        const bool connected = components <= 1;
        auto it = connected_before.find(key);
        if (it != connected_before.end() && it->second && !connected) ++violations;
        if (connected && !ms.empty()) connected_before[key] = true;
      }
    }
  }
  return violations;
}

}  // namespace taut
