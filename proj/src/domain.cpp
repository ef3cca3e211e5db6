#include "taut/domain.hpp"

#include <algorithm>
#include <sstream>

namespace taut {

PolygonalDomain PolygonalDomain::oriented(std::vector<Point> outer,
                                          std::vector<std::vector<Point>> holes) {
  if (twice_signed_area(outer) < 0) std::reverse(outer.begin(), outer.end());
  for (auto& h : holes) {
    if (twice_signed_area(h) > 0) std::reverse(h.begin(), h.end());
  }
  return PolygonalDomain{std::move(outer), std::move(holes)};
}

std::size_t PolygonalDomain::vertex_count() const {
  std::size_t n = outer.size();
  for (const auto& h : holes) n += h.size();
  return n;
}

std::vector<Point> PolygonalDomain::all_vertices() const {
  std::vector<Point> v(outer);
  for (const auto& h : holes) v.insert(v.end(), h.begin(), h.end());
  return v;
}

std::size_t PolygonalDomain::global_id(std::size_t r, std::size_t i) const {
  std::size_t base = 0;
  for (std::size_t k = 0; k < r; ++k) base += ring(k).size();
  return base + i;
}

std::array<Rational, 4> PolygonalDomain::bounding_box() const {
  std::array<Rational, 4> box{outer[0].x(), outer[0].y(), outer[0].x(), outer[0].y()};
  for (const auto& p : outer) {
    box[0] = std::min(box[0], p.x());
    box[1] = std::min(box[1], p.y());
    box[2] = std::max(box[2], p.x());
    box[3] = std::max(box[3], p.y());
  }
  return box;
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << invariant;
  if (!vertices.empty()) {
    os << " (vertices";
    for (auto v : vertices) os << " " << v;
    os << ")";
  }
  return os.str();
}

namespace {

// Strict interior test of p against a simple ring; p must not be on the ring.
bool inside_ring(const std::vector<Point>& ring, const Point& p) {
  bool inside = false;
  for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    const Point& a = ring[j];
    const Point& b = ring[i];
    if ((a.y() > p.y()) != (b.y() > p.y())) {
      // Crossing of the horizontal ray to the right of p.
      int o = orient(a, b, p);
      if (b.y() > a.y() ? o > 0 : o < 0) inside = !inside;
    }
  }
  return inside;
}

// -1 if p is not on the ring, else the index of the first edge containing p.
int edge_containing(const std::vector<Point>& ring, const Point& p) {
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (on_segment(ring[i], ring[(i + 1) % ring.size()], p)) return static_cast<int>(i);
  }
  return -1;
}

bool ring_simple(const std::vector<Point>& ring, std::vector<std::size_t>& offenders) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (ring[i] == ring[j]) {
        offenders = {i, j};
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Segment e1{ring[i], ring[(i + 1) % n]};
    for (std::size_t j = i + 1; j < n; ++j) {
      Segment e2{ring[j], ring[(j + 1) % n]};
      auto hit = segments_intersect(e1, e2);
      if (hit.kind == IntersectionKind::Disjoint) continue;
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent && hit.kind == IntersectionKind::Touch) continue;
      offenders = {i, j};
      return false;
    }
  }
  return true;
}

bool rings_meet(const std::vector<Point>& a, const std::vector<Point>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    Segment e1{a[i], a[(i + 1) % a.size()]};
    for (std::size_t j = 0; j < b.size(); ++j) {
      Segment e2{b[j], b[(j + 1) % b.size()]};
      if (segments_intersect(e1, e2).kind != IntersectionKind::Disjoint) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Violation> validate(const PolygonalDomain& d) {
  std::vector<Violation> out;
  auto ids = [&](std::size_t r, std::vector<std::size_t> local) {
    for (auto& v : local) v = d.global_id(r, v);
    return local;
  };

  std::vector<bool> usable(d.ring_count(), true);
  for (std::size_t r = 0; r < d.ring_count(); ++r) {
    const auto& ring = d.ring(r);
    const std::string name = r == 0 ? "outer" : "hole";
    std::vector<std::size_t> all(ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i) all[i] = i;
    if (ring.size() < 3) {
      out.push_back({name + " degenerate", ids(r, all)});
      usable[r] = false;
      continue;
    }
    std::vector<std::size_t> offenders;
    if (!ring_simple(ring, offenders)) {
      out.push_back({name + " not simple", ids(r, offenders)});
      usable[r] = false;
      continue;
    }
    if (twice_signed_area(ring) == 0) {
      out.push_back({name + " degenerate", ids(r, all)});
      usable[r] = false;
      continue;
    }
    Rational area = twice_signed_area(ring);
    if (r == 0 && area < 0) out.push_back({"outer not counter-clockwise", {}});
    if (r > 0 && area > 0) out.push_back({"hole not clockwise", ids(r, {0})});
  }
  if (!usable[0]) return out;

  for (std::size_t h = 1; h < d.ring_count(); ++h) {
    if (!usable[h]) continue;
    const auto& hole = d.ring(h);
    bool strictly_inside = !rings_meet(hole, d.outer);
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < hole.size(); ++i) {
      if (edge_containing(d.outer, hole[i]) >= 0 || !inside_ring(d.outer, hole[i])) {
        strictly_inside = false;
        bad.push_back(i);
      }
    }
    if (!strictly_inside) out.push_back({"hole not strictly interior", ids(h, bad)});
  }
  for (std::size_t a = 1; a < d.ring_count(); ++a) {
    for (std::size_t b = a + 1; b < d.ring_count(); ++b) {
      if (!usable[a] || !usable[b]) continue;
      const auto& ha = d.ring(a);
      const auto& hb = d.ring(b);
      bool overlap = rings_meet(ha, hb) || inside_ring(ha, hb[0]) || inside_ring(hb, ha[0]);
      if (overlap) out.push_back({"holes intersect", {d.global_id(a, 0), d.global_id(b, 0)}});
    }
  }
  return out;
}

Location locate(const PolygonalDomain& d, const Point& p) {
  Location loc;
  for (std::size_t r = 0; r < d.ring_count(); ++r) {
    const auto& ring = d.ring(r);
    int e = edge_containing(ring, p);
    if (e < 0) continue;
    loc.kind = Location::Kind::Boundary;
    loc.edge = static_cast<int>(d.global_id(r, e));
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (ring[i] == p) loc.vertex = static_cast<int>(d.global_id(r, i));
    }
    return loc;
  }
  if (!inside_ring(d.outer, p)) return loc;
  for (const auto& h : d.holes) {
    if (inside_ring(h, p)) return loc;
  }
  loc.kind = Location::Kind::Interior;
  return loc;
}

}  // namespace taut
