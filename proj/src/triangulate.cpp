#include "taut/domain.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace taut {

namespace {

// Working polygon: a cyclic list of vertex ids (ids may repeat after bridging).
using Ring = std::vector<int>;

bool in_cone(const Point& u, const Point& v, const Point& w, const Point& x) {
  // Is x strictly inside the interior wedge at v (interior on the left of u->v->w)?
  int ou = orient(u, v, x);
  int ow = orient(v, w, x);
  if (orient(u, v, w) > 0) return ou > 0 && ow > 0;
  return ou > 0 || ow > 0;
}

// The open segment a-b meets no edge of `rings` except at a or b.
bool clear_segment(const Point& a, const Point& b, const std::vector<Point>& pts,
                   const std::vector<const Ring*>& rings) {
  Segment s{a, b};
  for (const Ring* r : rings) {
    for (std::size_t i = 0; i < r->size(); ++i) {
      const Point& p = pts[(*r)[i]];
      const Point& q = pts[(*r)[(i + 1) % r->size()]];
      auto hit = segments_intersect(s, Segment{p, q});
      if (hit.kind == IntersectionKind::Disjoint) continue;
      if (hit.kind != IntersectionKind::Touch) return false;
      if (hit.point != a && hit.point != b) return false;
    }
  }
  return true;
}

void bridge_holes(Ring& merged, std::vector<Ring> holes, const std::vector<Point>& pts,
                  unsigned seed) {
  while (!holes.empty()) {
    struct Candidate {
      Rational len2;
      std::size_t hole, hi, mi;
    };
    std::vector<Candidate> cands;
    for (std::size_t h = 0; h < holes.size(); ++h) {
      for (std::size_t hi = 0; hi < holes[h].size(); ++hi) {
        for (std::size_t mi = 0; mi < merged.size(); ++mi) {
          cands.push_back({squared_distance(pts[holes[h][hi]], pts[merged[mi]]), h, hi, mi});
        }
      }
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      if (a.len2 != b.len2) return a.len2 < b.len2;
      return std::tie(a.hole, a.hi, a.mi) < std::tie(b.hole, b.hi, b.mi);
    });
    std::vector<const Ring*> all{&merged};
    for (const auto& h : holes) all.push_back(&h);

    const unsigned wanted = seed % 3 + 1;
    unsigned found = 0;
    const Candidate* chosen = nullptr;
    for (const auto& c : cands) {
      const Ring& hole = holes[c.hole];
      const std::size_t hn = hole.size(), mn = merged.size();
      const Point& hp = pts[hole[c.hi]];
      const Point& mp = pts[merged[c.mi]];
      if (!in_cone(pts[merged[(c.mi + mn - 1) % mn]], mp, pts[merged[(c.mi + 1) % mn]], hp)) continue;
      if (!in_cone(pts[hole[(c.hi + hn - 1) % hn]], hp, pts[hole[(c.hi + 1) % hn]], mp)) continue;
      if (!clear_segment(hp, mp, pts, all)) continue;
      chosen = &c;
      if (++found == wanted) break;
    }
    if (!chosen) throw std::runtime_error("triangulation: no bridge found");

    const Ring& hole = holes[chosen->hole];
    Ring next(merged.begin(), merged.begin() + chosen->mi + 1);
    for (std::size_t k = 0; k <= hole.size(); ++k) next.push_back(hole[(chosen->hi + k) % hole.size()]);
    next.push_back(merged[chosen->mi]);
    next.insert(next.end(), merged.begin() + chosen->mi + 1, merged.end());
    merged = std::move(next);
    holes.erase(holes.begin() + chosen->hole);
  }
}

bool is_ear(const Ring& poly, std::size_t i, const std::vector<Point>& pts) {
  const std::size_t n = poly.size();
  const std::size_t ip = (i + n - 1) % n, in = (i + 1) % n;
  const Point& a = pts[poly[ip]];
  const Point& b = pts[poly[i]];
  const Point& c = pts[poly[in]];
  if (orient(a, b, c) <= 0) return false;
  for (std::size_t k = 0; k < n; ++k) {
    const Point& p = pts[poly[k]];
    if (p == a || p == b || p == c) continue;
    if (orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0) return false;
  }
  // Duplicated corners can carry edges into the triangle; such an edge must
  // cross the diagonal c-a.
  Segment diag{c, a};
  for (std::size_t k = 0; k < n; ++k) {
    if (k == ip || k == i) continue;
    Segment e{pts[poly[k]], pts[poly[(k + 1) % n]]};
    auto hit = segments_intersect(diag, e);
    if (hit.kind == IntersectionKind::Disjoint) continue;
    if (hit.kind == IntersectionKind::Touch && (hit.point == a || hit.point == c)) {
      // An edge leaving a corner into the triangle interior.
      const Point& other = hit.point == e.a ? e.b : e.a;
      if (hit.point == e.a || hit.point == e.b) {
        if (orient(a, b, other) > 0 && orient(b, c, other) > 0 && orient(c, a, other) > 0) return false;
        continue;
      }
      continue;
    }
    return false;
  }
  return true;
}

std::vector<std::array<int, 3>> clip_ears(Ring poly, const std::vector<Point>& pts, unsigned seed) {
  std::vector<std::array<int, 3>> tris;
  std::size_t i = poly.empty() ? 0 : seed % poly.size();
  std::size_t misses = 0;
  while (poly.size() > 3) {
    const std::size_t n = poly.size();
    i %= n;
    if (is_ear(poly, i, pts)) {
      tris.push_back({poly[(i + n - 1) % n], poly[i], poly[(i + 1) % n]});
      poly.erase(poly.begin() + i);
      i = (i + poly.size() - 1) % poly.size();
      misses = 0;
    } else {
      ++i;
      if (++misses > n) throw std::runtime_error("triangulation: no ear found");
    }
  }
  if (orient(pts[poly[0]], pts[poly[1]], pts[poly[2]]) <= 0) {
    throw std::runtime_error("triangulation: degenerate final triangle");
  }
  tris.push_back({poly[0], poly[1], poly[2]});
  return tris;
}

}  // namespace

int Triangulation::slot_towards(int tri, int other) const {
  for (int k = 0; k < 3; ++k) {
    if (neighbors[tri][k] == other) return k;
  }
  return -1;
}

int Triangulation::local_index(int tri, int v) const {
  for (int k = 0; k < 3; ++k) {
    if (triangles[tri][k] == v) return k;
  }
  return -1;
}

std::vector<int> Triangulation::containing(const Point& p) const {
  std::vector<int> out;
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const Point& a = vertices[triangles[t][0]];
    const Point& b = vertices[triangles[t][1]];
    const Point& c = vertices[triangles[t][2]];
    if (orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0) {
      out.push_back(static_cast<int>(t));
    }
  }
  return out;
}

std::vector<int> Triangulation::fan(int v) const {
  int start = -1;
  for (std::size_t t = 0; t < triangles.size() && start < 0; ++t) {
    int i = local_index(static_cast<int>(t), v);
    if (i >= 0 && neighbors[t][i] < 0) start = static_cast<int>(t);
  }
  std::vector<int> out;
  for (int t = start; t >= 0;) {
    out.push_back(t);
    int i = local_index(t, v);
    t = neighbors[t][(i + 2) % 3];
    if (out.size() > triangles.size()) throw std::logic_error("fan does not terminate");
  }
  return out;
}

int Triangulation::vertex_at(const Point& p) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == p) return static_cast<int>(i);
  }
  return -1;
}

Triangulation triangulate(const PolygonalDomain& d, unsigned seed) {
  Triangulation t;
  t.vertices = d.all_vertices();
  Ring merged(d.outer.size());
  std::iota(merged.begin(), merged.end(), 0);
  std::vector<Ring> holes;
  for (std::size_t h = 0; h < d.holes.size(); ++h) {
    Ring r(d.holes[h].size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<int>(d.global_id(h + 1, i));
    holes.push_back(std::move(r));
  }
  bridge_holes(merged, std::move(holes), t.vertices, seed);
  t.triangles = clip_ears(std::move(merged), t.vertices, seed);

  const std::size_t m = t.triangles.size();
  t.neighbors.assign(m, {-1, -1, -1});
  t.edge_ids.assign(m, {-1, -1, -1});
  std::map<std::pair<int, int>, std::pair<int, int>> open;  // undirected edge -> (tri, slot)
  for (std::size_t i = 0; i < m; ++i) {
    for (int k = 0; k < 3; ++k) {
      int a = t.triangles[i][k], b = t.triangles[i][(k + 1) % 3];
      auto key = std::minmax(a, b);
      auto it = open.find(key);
      if (it == open.end()) {
        open.emplace(key, std::make_pair(static_cast<int>(i), k));
        continue;
      }
      auto [j, slot] = it->second;
      open.erase(it);
      t.neighbors[i][k] = j;
      t.neighbors[j][slot] = static_cast<int>(i);
      int id = static_cast<int>(t.edges.size());
      t.edges.push_back({j, slot, static_cast<int>(i), k});
      t.edge_ids[i][k] = id;
      t.edge_ids[j][slot] = id;
    }
  }
  return t;
}

std::vector<std::string> check_triangulation(const Triangulation& t, const PolygonalDomain& d) {
  std::vector<std::string> problems;
  const std::size_t expected = d.vertex_count() + 2 * d.holes.size() - 2;
  if (t.size() != expected) {
    problems.push_back("triangle count " + std::to_string(t.size()) + ", expected " +
                       std::to_string(expected));
  }
  Rational area = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& tr = t.triangles[i];
    if (orient(t.vertices[tr[0]], t.vertices[tr[1]], t.vertices[tr[2]]) <= 0) {
      problems.push_back("triangle " + std::to_string(i) + " not counter-clockwise");
    }
    area += twice_signed_area({t.vertices[tr[0]], t.vertices[tr[1]], t.vertices[tr[2]]});
    for (int k = 0; k < 3; ++k) {
      int n = t.neighbors[i][k];
      if (n >= 0 && t.neighbors[n][t.slot_towards(n, static_cast<int>(i))] != static_cast<int>(i)) {
        problems.push_back("asymmetric adjacency at triangle " + std::to_string(i));
      }
    }
  }
  Rational domain_area = twice_signed_area(d.outer);
  for (const auto& h : d.holes) domain_area += twice_signed_area(h);
  if (area != domain_area) problems.push_back("triangle areas do not sum to the domain area");

  std::map<std::pair<int, int>, int> boundary;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (int k = 0; k < 3; ++k) {
      if (t.neighbors[i][k] < 0) {
        boundary[std::minmax(t.triangles[i][k], t.triangles[i][(k + 1) % 3])]++;
      }
    }
  }
  std::size_t ring_edges = 0;
  for (std::size_t r = 0; r < d.ring_count(); ++r) {
    const auto& ring = d.ring(r);
    for (std::size_t i = 0; i < ring.size(); ++i) {
      int a = static_cast<int>(d.global_id(r, i));
      int b = static_cast<int>(d.global_id(r, (i + 1) % ring.size()));
      ++ring_edges;
      if (!boundary.count(std::minmax(a, b))) problems.push_back("domain edge missing from boundary");
    }
  }
  if (boundary.size() != ring_edges) problems.push_back("boundary has extra edges");

  std::vector<bool> seen(t.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    ++reached;
    for (int n : t.neighbors[c]) {
      if (n >= 0 && !seen[n]) {
        seen[n] = true;
        stack.push_back(n);
      }
    }
  }
  if (reached != t.size()) problems.push_back("dual graph not connected");
  return problems;
}

}  // namespace taut
