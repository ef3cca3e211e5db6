#include "taut/homotopy.hpp"

#include <algorithm>
#include <atomic>

namespace taut {

namespace {

std::atomic<int> next_cover_id{1};

Point along(const Point& p, const Point& d, const Rational& t) {
  return Point(p.x() + t * d.x(), p.y() + t * d.y());
}

// Sign of (v - u) x d.
int turn(const Point& u, const Point& v, const Point& d) {
  return sgn((v.x() - u.x()) * d.y() - (v.y() - u.y()) * d.x());
}

bool contains_closed(const Triangulation& t, int tri, const Point& x) {
  for (int k = 0; k < 3; ++k) {
    if (orient(t.corner(tri, k), t.corner(tri, k + 1), x) < 0) return false;
  }
  return true;
}

// Nodes over the cover point (node, x): reached across edges containing x.
std::vector<int> neighborhood(Cover& c, int node, const Point& x) {
  const Triangulation& t = c.triangulation();
  std::vector<int> out{node};
  for (std::size_t i = 0; i < out.size(); ++i) {
    int n = out[i];
    for (int k = 0; k < 3; ++k) {
      if (!on_segment(t.corner(c.tri(n), k), t.corner(c.tri(n), k + 1), x)) continue;
      int m = c.neighbor(n, k);
      if (m >= 0 && std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
  }
  return out;
}

// Does x + eps * d stay in the closed triangle?
bool heads_into(const Triangulation& t, int tri, const Point& x, const Point& d) {
  for (int k = 0; k < 3; ++k) {
    const Point u = t.corner(tri, k), v = t.corner(tri, k + 1);
    if (orient(u, v, x) == 0 && turn(u, v, d) < 0) return false;
  }
  return true;
}

bool on_boundary_at(const Triangulation& t, int tri, const Point& x) {
  for (int k = 0; k < 3; ++k) {
    if (t.corner(tri, k) == x) return true;
    if (t.boundary_slot(tri, k) && on_segment(t.corner(tri, k), t.corner(tri, k + 1), x)) return true;
  }
  return false;
}

struct WalkOut {
  std::vector<Piece> pieces;
  Rational t_end;
  int end_node;
  bool blocked;
};

// Straight walk p + t d from t in the cover. Closed walks may pass through
// vertices and along boundary edges; open walks stop on reaching the boundary.
WalkOut walk(Cover& c, int node, const Point& p, const Point& d, Rational t,
             const Rational* limit, bool open) {
  const Triangulation& tr = c.triangulation();
  WalkOut out{{}, t, node, false};
  const Point ahead(p.x() + d.x(), p.y() + d.y());
  for (;;) {
    const Point x = along(p, d, t);
    int next = -1;
    for (int n : neighborhood(c, node, x)) {
      if (heads_into(tr, c.tri(n), x, d)) {
        next = n;
        break;
      }
    }
    if (next < 0) {
      out.blocked = true;
      out.t_end = t;
      out.end_node = node;
      return out;
    }
    // The exit edge runs from the right of the line to its left; only its
    // crossing parameter needs exact division.
    std::optional<Rational> exit;
    int side[3];
    for (int k = 0; k < 3; ++k) side[k] = orient(p, ahead, tr.corner(c.tri(next), k));
    for (int k = 0; k < 3; ++k) {
      if (side[k] > 0 || side[(k + 1) % 3] < 0 || (side[k] == 0 && side[(k + 1) % 3] == 0)) continue;
      const Point u = tr.corner(c.tri(next), k), v = tr.corner(c.tri(next), k + 1);
      Rational c1 = (v.x() - u.x()) * d.y() - (v.y() - u.y()) * d.x();
      if (c1 >= 0) continue;
      Rational tk = -cross(u, v, p) / c1;
      if (!exit || tk < *exit) exit = tk;
    }
    if (limit && (!exit || *limit <= *exit)) {
      out.pieces.push_back({next, t, *limit});
      out.t_end = *limit;
      out.end_node = next;
      return out;
    }
    if (!exit) throw std::logic_error("walk: unbounded triangle exit");
    out.pieces.push_back({next, t, *exit});
    t = *exit;
    node = next;
    if (open && on_boundary_at(tr, c.tri(next), along(p, d, t))) {
      out.blocked = true;
      out.t_end = t;
      out.end_node = next;
      return out;
    }
  }
}

}  // namespace

Cover::Cover(const Triangulation& tri, int root_tri) : tri_(&tri), id_(next_cover_id++) {
  nodes_.push_back(Node{root_tri, -1, -1, 0});
}

int Cover::neighbor(int node, int slot) {
  if (slot == nodes_[node].parent_slot) return nodes_[node].parent;
  if (nodes_[node].child[slot] >= 0) return nodes_[node].child[slot];
  const int t = nodes_[node].tri;
  const int other = tri_->neighbors[t][slot];
  if (other < 0) return -1;
  const int back = tri_->slot_towards(other, t);
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{other, node, back, nodes_[node].depth + 1});
  nodes_[node].child[slot] = id;
  return id;
}

CrossingWord Cover::word(int node) const {
  CrossingWord w;
  for (int n = node; nodes_[n].parent >= 0; n = nodes_[n].parent) {
    const int slot = nodes_[n].parent_slot;
    const int e = tri_->edge_ids[nodes_[n].tri][slot];
    const auto& edge = tri_->edges[e];
    const int up = (edge.tri0 == nodes_[n].tri && edge.slot0 == slot) ? 1 : -1;
    w.push_back({e, -up});
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<int> Cover::tree_path(int a, int b) const {
  std::vector<int> up, down;
  while (a != b) {
    if (nodes_[a].depth >= nodes_[b].depth) {
      up.push_back(a);
      a = nodes_[a].parent;
    } else {
      down.push_back(b);
      b = nodes_[b].parent;
    }
  }
  up.push_back(a);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

int Cover::canonical(int node, const Point& x) const {
  while (nodes_[node].parent >= 0) {
    const int slot = nodes_[node].parent_slot;
    const int t = nodes_[node].tri;
    if (!on_segment(tri_->corner(t, slot), tri_->corner(t, slot + 1), x)) break;
    node = nodes_[node].parent;
  }
  return node;
}

int start_triangle(const Triangulation& tri, const Point& p) {
  if (int v = tri.vertex_at(p); v >= 0) return tri.fan(v).front();
  auto cands = tri.containing(p);
  if (cands.empty()) throw InvalidPath("endpoint outside the domain");
  return cands.front();
}

LiftedPath lift(const PathPoly& path, Cover& cover) {
  LiftedPath out;
  int node = cover.root();
  if (!contains_closed(cover.triangulation(), cover.tri(node), path.p())) {
    throw InvalidPath("path does not start in the cover root");
  }
  const Rational one(1);
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    const Point& a = path.vertices[i];
    const Point& b = path.vertices[i + 1];
    Point d(b.x() - a.x(), b.y() - a.y());
    WalkOut w = walk(cover, node, a, d, Rational(0), &one, false);
    if (w.blocked) throw InvalidPath("segment " + std::to_string(i) + " leaves the domain");
    node = w.end_node;
    out.segments.push_back(std::move(w.pieces));
  }
  out.end_node = cover.canonical(node, path.q());
  return out;
}

int lift_end(const PathPoly& path, Cover& cover) { return lift(path, cover).end_node; }

bool homotopic(const PathPoly& a, const PathPoly& b, const Triangulation& tri) {
  if (a.p() != b.p() || a.q() != b.q()) throw EndpointMismatch("paths do not share endpoints");
  Cover cover(tri, start_triangle(tri, a.p()));
  return lift_end(a, cover) == lift_end(b, cover);
}

Point LiftedChord::at(const Rational& t) const { return along(line.anchor, line.direction, t); }

int LiftedChord::node_at(const Rational& t) const {
  for (const auto& pc : pieces) {
    if (pc.t0 <= t && t <= pc.t1) return pc.node;
  }
  return -1;
}

LiftedChord chord_through(Cover& cover, int node, const Point& x, const LineSpec& line, bool open,
                          const std::optional<std::pair<Rational, Rational>>& clip) {
  const Point& a = line.anchor;
  const Point& d = line.direction;
  if (orient(a, line.second_point(), x) != 0) throw std::invalid_argument("point not on line");
  const Rational tx = ((x.x() - a.x()) * d.x() + (x.y() - a.y()) * d.y()) /
                      (d.x() * d.x() + d.y() * d.y());
  LiftedChord ch;
  ch.line = line;
  ch.t0 = ch.t1 = tx;
  ch.cover_id = cover.id();
  ch.open = open;
  if (open && on_boundary_at(cover.triangulation(), cover.tri(node), x)) return ch;

  std::optional<Rational> hi, neg_lo;
  if (clip) {
    hi = std::max(clip->second, tx);
    neg_lo = -std::min(clip->first, tx);
  }
  WalkOut fwd = walk(cover, node, a, d, tx, hi ? &*hi : nullptr, open);
  Point nd(-d.x(), -d.y());
  WalkOut bwd = walk(cover, node, a, nd, -tx, neg_lo ? &*neg_lo : nullptr, open);
  for (auto it = bwd.pieces.rbegin(); it != bwd.pieces.rend(); ++it) {
    ch.pieces.push_back({it->node, -it->t1, -it->t0});
  }
  ch.pieces.insert(ch.pieces.end(), fwd.pieces.begin(), fwd.pieces.end());
  if (ch.pieces.empty()) ch.pieces.push_back({cover.canonical(node, x), tx, tx});
  ch.t0 = ch.pieces.front().t0;
  ch.t1 = ch.pieces.back().t1;
  return ch;
}

}  // namespace taut
