#include "taut/homotopy.hpp"

#include <algorithm>

namespace taut {

PathPoly make_path(std::vector<Point> vertices, const PolygonalDomain& d, bool closure) {
  PathPoly path;
  path.vertices = std::move(vertices);
  path.closure = closure;
  if (!path.vertices.empty()) {
    path.start_on_boundary = locate(d, path.p()).boundary();
    path.end_on_boundary = locate(d, path.q()).boundary();
  }
  return path;
}

namespace {

// Parameters in (0, 1) where segment ab meets the boundary.
std::vector<Rational> boundary_contacts(const Point& a, const Point& b, const PolygonalDomain& d,
                                        bool& crosses) {
  std::vector<Rational> ts;
  Segment s{a, b};
  auto param = [&](const Point& x) -> Rational {
    const Rational dx = b.x() - a.x(), dy = b.y() - a.y();
    return dx != 0 ? (x.x() - a.x()) / dx : (x.y() - a.y()) / dy;
  };
  for (std::size_t r = 0; r < d.ring_count(); ++r) {
    const auto& ring = d.ring(r);
    for (std::size_t i = 0; i < ring.size(); ++i) {
      auto hit = segments_intersect(s, Segment{ring[i], ring[(i + 1) % ring.size()]});
      switch (hit.kind) {
        case IntersectionKind::Disjoint:
          break;
        case IntersectionKind::ProperCross:
          crosses = true;
          break;
        case IntersectionKind::Touch:
          ts.push_back(param(hit.point));
          break;
        case IntersectionKind::Overlap:
          ts.push_back(param(hit.overlap.a));
          ts.push_back(param(hit.overlap.b));
          break;
      }
    }
  }
  return ts;
}

}  // namespace

std::vector<std::string> validate_path(const PathPoly& path, const PolygonalDomain& d) {
  std::vector<std::string> out;
  const auto& v = path.vertices;
  if (v.size() < 2) {
    out.push_back("path needs at least two vertices");
    return out;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto loc = locate(d, v[i]);
    const bool endpoint = i == 0 || i + 1 == v.size();
    if (loc.exterior() || (!path.closure && !endpoint && !loc.interior())) {
      out.push_back("vertex " + std::to_string(i) + " not in the domain");
    }
    if (i > 0 && v[i] == v[i - 1]) out.push_back("vertex " + std::to_string(i) + " repeats its predecessor");
  }
  if (!out.empty()) return out;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    bool crosses = false;
    auto ts = boundary_contacts(v[i], v[i + 1], d, crosses);
    const std::string name = "segment " + std::to_string(i);
    if (crosses) {
      out.push_back(name + " crosses the boundary");
      continue;
    }
    ts.push_back(0);
    ts.push_back(1);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    if (!path.closure) {
      bool bad = false;
      for (const auto& t : ts) {
        if (t == 0 && i == 0) continue;
        if (t == 1 && i + 2 == v.size()) continue;
        if (t > 0 && t < 1) bad = true;
      }
      if (bad) {
        out.push_back(name + " touches the boundary");
        continue;
      }
    }
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
      Point mid = lerp(v[i], v[i + 1], (ts[k] + ts[k + 1]) / 2);
      auto loc = locate(d, mid);
      if (loc.exterior() || (!path.closure && !loc.interior())) {
        out.push_back(name + " leaves the domain");
        break;
      }
    }
  }
  return out;
}

CrossingWord reduce(const CrossingWord& w) {
  CrossingWord out;
  for (const auto& c : w) {
    if (!out.empty() && out.back().edge == c.edge && out.back().dir == -c.dir) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

namespace {

struct StrictWalker {
  const Triangulation& t;
  CrossingWord word;

  int cross_slot(int tri, int slot) {
    const int e = t.edge_ids[tri][slot];
    const auto& edge = t.edges[e];
    word.push_back({e, (edge.tri0 == tri && edge.slot0 == slot) ? 1 : -1});
    return t.neighbors[tri][slot];
  }

  // Fails unless x is inside tri or on a boundary edge of it (when allowed).
  void require_clear(int tri, const Point& x, bool boundary_ok) {
    for (int k = 0; k < 3; ++k) {
      const Point u = t.corner(tri, k), v = t.corner(tri, k + 1);
      if (orient(u, v, x) != 0) continue;
      if (t.boundary_slot(tri, k)) {
        if (!boundary_ok) throw InvalidPath("path vertex on the boundary");
      } else {
        throw NotGeneralPosition("path vertex on a triangulation edge");
      }
    }
  }

  // Rotates around vertex v from the fan start to the triangle containing
  // the direction towards b.
  int leave_vertex(int v, const Point& p, const Point& b) {
    int tri = t.fan(v).front();
    for (;;) {
      const int i = t.local_index(tri, v);
      const Point c1 = t.corner(tri, i + 1), c2 = t.corner(tri, i + 2);
      const int o1 = orient(p, c1, b), o2 = orient(p, c2, b);
      if ((o1 == 0 && dot(p, c1, b) > 0) || (o2 == 0 && dot(p, c2, b) > 0)) {
        const int slot = o1 == 0 ? i : (i + 2) % 3;
        if (t.boundary_slot(tri, slot)) throw InvalidPath("segment runs along the boundary");
        throw NotGeneralPosition("segment runs along a triangulation edge");
      }
      if (o1 > 0 && o2 < 0) return tri;
      const int slot = (i + 2) % 3;
      if (t.boundary_slot(tri, slot)) throw InvalidPath("segment leaves the domain");
      tri = cross_slot(tri, slot);
    }
  }

  void return_to_fan_start(int tri, int v) {
    const int start = t.fan(v).front();
    while (tri != start) tri = cross_slot(tri, t.local_index(tri, v));
  }

  // Walks segment ab starting in tri (a in tri); returns the triangle holding b.
  int walk(int tri, const Point& a, const Point& b) {
    const Point d(b.x() - a.x(), b.y() - a.y());
    for (;;) {
      std::optional<Rational> exit;
      int exit_slot = -1;
      bool tie = false;
      for (int k = 0; k < 3; ++k) {
        const Point u = t.corner(tri, k), v = t.corner(tri, k + 1);
        Rational c1 = (v.x() - u.x()) * d.y() - (v.y() - u.y()) * d.x();
        if (c1 >= 0) continue;
        Rational tk = -cross(u, v, a) / c1;
        if (!exit || tk < *exit) {
          exit = tk;
          exit_slot = k;
          tie = false;
        } else if (tk == *exit) {
          tie = true;
        }
      }
      if (!exit || *exit >= 1) return tri;
      if (tie) throw InvalidPath("segment passes through a domain vertex");
      if (t.boundary_slot(tri, exit_slot)) throw InvalidPath("segment leaves the domain");
      tri = cross_slot(tri, exit_slot);
    }
  }
};

}  // namespace

CrossingWord crossing_word(const PathPoly& path, const Triangulation& tri) {
  if (path.vertices.size() < 2) throw InvalidPath("path needs at least two vertices");
  StrictWalker w{tri, {}};
  const auto& v = path.vertices;
  int cur;
  if (int pv = tri.vertex_at(v[0]); pv >= 0) {
    cur = w.leave_vertex(pv, v[0], v[1]);
  } else {
    auto cands = tri.containing(v[0]);
    if (cands.empty()) throw InvalidPath("start outside the domain");
    cur = cands.front();
    w.require_clear(cur, v[0], true);
  }
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (i > 0) {
      if (tri.vertex_at(v[i]) >= 0) throw InvalidPath("path vertex on the boundary");
      w.require_clear(cur, v[i], false);
    }
    cur = w.walk(cur, v[i], v[i + 1]);
  }
  if (int qv = tri.vertex_at(v.back()); qv >= 0) {
    w.return_to_fan_start(cur, qv);
  } else {
    w.require_clear(cur, v.back(), true);
  }
  return w.word;
}

bool homotopic(const PathPoly& a, const PathPoly& b, const PolygonalDomain& d) {
  if (a.p() != b.p() || a.q() != b.q()) throw EndpointMismatch("paths do not share endpoints");
  if (!a.closure && !b.closure) {
    for (unsigned seed = 0; seed < 3; ++seed) {
      Triangulation t = triangulate(d, seed);
      try {
        return reduce(crossing_word(a, t)) == reduce(crossing_word(b, t));
      } catch (const NotGeneralPosition&) {
      }
    }
  }
  // Lifting into the cover needs no general position.
  return homotopic(a, b, triangulate(d));
}

Sleeve build_sleeve(const CrossingWord& reduced, const Triangulation& tri, int start_tri) {
  auto cover = std::make_shared<Cover>(tri, start_tri);
  int node = cover->root();
  for (const auto& c : reduced) {
    const auto& e = tri.edges.at(c.edge);
    const int cur = cover->tri(node);
    int slot;
    if (c.dir > 0 && e.tri0 == cur) {
      slot = e.slot0;
    } else if (c.dir < 0 && e.tri1 == cur) {
      slot = e.slot1;
    } else {
      throw std::invalid_argument("crossing word does not follow the triangulation");
    }
    node = cover->neighbor(node, slot);
  }
  return build_sleeve(cover, cover->root(), node);
}

Sleeve build_sleeve(std::shared_ptr<Cover> cover, int from_node, int to_node) {
  Sleeve s;
  s.cover = std::move(cover);
  const Triangulation& t = s.cover->triangulation();
  auto nodes = s.cover->tree_path(from_node, to_node);
  std::vector<int> seen(t.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const int tri = s.cover->tri(nodes[i]);
    SleeveCell cell{tri, seen[tri]++, nodes[i], -1, -1};
    if (i > 0) cell.entry_slot = t.slot_towards(tri, s.cover->tri(nodes[i - 1]));
    if (i + 1 < nodes.size()) cell.exit_slot = t.slot_towards(tri, s.cover->tri(nodes[i + 1]));
    s.cells.push_back(cell);
  }
  return s;
}

std::vector<LiftedChord> line_lifts(const LineSpec& line, const Sleeve& sleeve) {
  const Triangulation& t = sleeve.cover->triangulation();
  const Point& a = line.anchor;
  const Point& d = line.direction;
  std::vector<LiftedChord> out;
  bool chaining = false;
  for (const auto& cell : sleeve.cells) {
    // Clip the line to the closed triangle.
    std::optional<Rational> lo, hi;
    bool empty = false;
    for (int k = 0; k < 3 && !empty; ++k) {
      const Point u = t.corner(cell.tri, k), v = t.corner(cell.tri, k + 1);
      Rational c0 = cross(u, v, a);
      Rational c1 = (v.x() - u.x()) * d.y() - (v.y() - u.y()) * d.x();
      if (c1 == 0) {
        empty = c0 < 0;
      } else if (c1 > 0) {
        Rational tk = -c0 / c1;
        if (!lo || tk > *lo) lo = tk;
      } else {
        Rational tk = -c0 / c1;
        if (!hi || tk < *hi) hi = tk;
      }
    }
    if (empty || !lo || !hi || *lo > *hi) {
      chaining = false;
      continue;
    }
    if (chaining) {
      LiftedChord& ch = out.back();
      if (*lo <= ch.t1 && ch.t0 <= *hi) {
        ch.t0 = std::min(ch.t0, *lo);
        ch.t1 = std::max(ch.t1, *hi);
        ch.pieces.push_back({cell.node, *lo, *hi});
        continue;
      }
    }
    LiftedChord ch;
    ch.line = line;
    ch.t0 = *lo;
    ch.t1 = *hi;
    ch.pieces.push_back({cell.node, *lo, *hi});
    ch.cover_id = sleeve.cover->id();
    out.push_back(std::move(ch));
    chaining = true;
  }
  for (auto& ch : out) {
    std::sort(ch.pieces.begin(), ch.pieces.end(),
              [](const Piece& x, const Piece& y) { return x.t0 < y.t0 || (x.t0 == y.t0 && x.t1 < y.t1); });
  }
  return out;
}

}  // namespace taut
