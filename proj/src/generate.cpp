#include "taut/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace taut {

namespace {

// Portable draws: std distributions differ between standard libraries.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit(rng); }
std::size_t below(std::mt19937_64& rng, std::size_t n) { return n ? static_cast<std::size_t>(rng() % n) : 0; }

Rational snap(double v, double grid) {
  const long steps = std::max(1L, std::lround(1.0 / grid));
  return ratio(std::lround(v * static_cast<double>(steps)), steps);
}

Point snap(double x, double y, double grid) { return Point(snap(x, grid), snap(y, grid)); }

std::vector<Point> star(std::mt19937_64& rng, double cx, double cy, double r, std::size_t n, double wobble,
                        double grid) {
  std::vector<Point> ring;
  const double phase = uniform(rng, 0, 2 * std::numbers::pi);
  for (std::size_t k = 0; k < n; ++k) {
    const double th = phase + 2 * std::numbers::pi * (static_cast<double>(k) + 0.7 * unit(rng)) / static_cast<double>(n);
    const double rr = r * (1.0 - wobble * unit(rng));
    ring.push_back(snap(cx + rr * std::cos(th), cy + rr * std::sin(th), grid));
  }
  return ring;
}

double seg_dist(const Point& p, const Point& a, const Point& b) {
  const double ax = a.fx(), ay = a.fy(), dx = b.fx() - ax, dy = b.fy() - ay;
  const double l2 = dx * dx + dy * dy;
  double t = l2 > 0 ? ((p.fx() - ax) * dx + (p.fy() - ay) * dy) / l2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.fx() - ax - t * dx, p.fy() - ay - t * dy);
}

// Smallest distance from a vertex of one ring to an edge of the other, both ways.
double ring_gap(const std::vector<Point>& a, const std::vector<Point>& b) {
  double best = INFINITY;
  for (int pass = 0; pass < 2; ++pass) {
    const auto& u = pass ? b : a;
    const auto& v = pass ? a : b;
    for (const auto& p : u) {
      for (std::size_t i = 0; i < v.size(); ++i) best = std::min(best, seg_dist(p, v[i], v[(i + 1) % v.size()]));
    }
  }
  return best;
}

bool valid_segment_path(const std::vector<Point>& v, const PolygonalDomain& d, bool closure = false) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] == v[i + 1]) return false;
  }
  return validate_path(make_path(v, d, closure), d).empty();
}

bool same_class(const std::vector<Point>& a, const std::vector<Point>& b, const PolygonalDomain& d,
                const Triangulation& tri) {
  return homotopic(make_path(a, d, true), make_path(b, d, true), tri);
}

}  // namespace

PolygonalDomain random_convex_domain(std::mt19937_64& rng, double radius) {
  for (;;) {
    const std::size_t n = 3 + below(rng, 8);
    std::vector<double> th;
    for (std::size_t k = 0; k < n; ++k) th.push_back(uniform(rng, 0, 2 * std::numbers::pi));
    std::sort(th.begin(), th.end());
    std::vector<Point> ring;
    for (double t : th) ring.push_back(snap(radius * std::cos(t), radius * std::sin(t), radius / 1000));
    // Snapping can break strict convexity; keep only strictly convex rings.
    bool convex = true;
    for (std::size_t i = 0; i < n && convex; ++i) {
      convex = orient(ring[i], ring[(i + 1) % n], ring[(i + 2) % n]) > 0;
    }
    if (!convex) continue;
    auto d = PolygonalDomain::oriented(ring);
    if (validate(d).empty()) return d;
  }
}

Point random_interior_point(const PolygonalDomain& d, std::mt19937_64& rng, double grid) {
  const auto box = d.bounding_box();
  for (;;) {
    Point p = snap(uniform(rng, box[0].get_d(), box[2].get_d()), uniform(rng, box[1].get_d(), box[3].get_d()), grid);
    if (locate(d, p).interior()) return p;
  }
}

std::vector<Point> random_path(const PolygonalDomain& d, std::mt19937_64& rng, const Point& p, const Point& q,
                               std::size_t waypoints, double grid) {
  for (;;) {
    std::vector<Point> v{p};
    bool stuck = false;
    for (std::size_t k = 0; k < waypoints && !stuck; ++k) {
      stuck = true;
      for (int tries = 0; tries < 200; ++tries) {
        Point x = random_interior_point(d, rng, grid);
        if (x != v.back() && valid_segment_path({v.back(), x}, d)) {
          v.push_back(x);
          stuck = false;
          break;
        }
      }
    }
    if (stuck) continue;
    if (p == q && v.size() == 1) return v;
    if (v.back() != q && valid_segment_path({v.back(), q}, d)) {
      v.push_back(q);
      return v;
    }
    if (v.back() == q && v.size() > 1) return v;
  }
}

Instance generate_instance(const GenOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  const double R = opts.radius, grid = R / 200;
  Instance inst;
  inst.seed = opts.seed;
  inst.name = "gen-s" + std::to_string(opts.seed) + "-h" + std::to_string(opts.holes) + "-v" +
              std::to_string(opts.vertices);

  std::size_t holes = opts.holes;
  while (holes > 0 && 3 * holes + 4 > opts.vertices) --holes;
  std::vector<std::size_t> hole_sizes;
  std::size_t spare = opts.vertices - 3 * holes - 4;
  for (std::size_t h = 0; h < holes; ++h) {
    const std::size_t extra = std::min<std::size_t>(below(rng, 4), spare / 2);
    hole_sizes.push_back(3 + extra);
    spare -= extra;
  }
  const std::size_t outer_count = 4 + spare;

  for (;;) {
    auto outer = star(rng, 0, 0, R, outer_count, 0.45, grid);
    PolygonalDomain d = PolygonalDomain::oriented(outer);
    if (!validate(d).empty()) continue;
    for (std::size_t h = 0; h < hole_sizes.size(); ++h) {
      for (int tries = 0; tries < 300; ++tries) {
        const double r = uniform(rng, 0.07, 0.18) * R;
        auto ring = star(rng, uniform(rng, -0.6, 0.6) * R, uniform(rng, -0.6, 0.6) * R, r, hole_sizes[h], 0.5, grid);
        PolygonalDomain cand = d;
        cand.holes.push_back(ring);
        cand = PolygonalDomain::oriented(cand.outer, cand.holes);
        if (!validate(cand).empty()) continue;
        bool clear = ring_gap(ring, d.outer) > 0.04 * R;
        for (const auto& other : d.holes) clear = clear && ring_gap(ring, other) > 0.04 * R;
        if (!clear) continue;
        d = std::move(cand);
        break;
      }
    }
    inst.domain = d;
    break;
  }
  const Point p = random_interior_point(inst.domain, rng, grid);
  Point q = random_interior_point(inst.domain, rng, grid);
  while (q == p) q = random_interior_point(inst.domain, rng, grid);
  inst.path = random_path(inst.domain, rng, p, q, opts.path_vertices, grid);
  return inst;
}

std::optional<std::vector<Point>> homotopic_variant(const std::vector<Point>& base, const PolygonalDomain& d,
                                                    const Triangulation& tri, std::mt19937_64& rng) {
  if (base.size() < 2) return std::nullopt;
  const auto box = d.bounding_box();
  const double span = std::max(box[2].get_d() - box[0].get_d(), box[3].get_d() - box[1].get_d());
  double jitter = 0.05 * span;
  for (int attempt = 0; attempt < 60; ++attempt, jitter *= 0.8) {
    std::vector<Point> v{base.front()};
    for (std::size_t i = 0; i + 1 < base.size(); ++i) {
      const std::size_t extra = below(rng, 3);
      std::vector<double> ts;
      for (std::size_t k = 0; k < extra; ++k) ts.push_back(uniform(rng, 0.1, 0.9));
      std::sort(ts.begin(), ts.end());
      for (double t : ts) {
        const double x = base[i].fx() + t * (base[i + 1].fx() - base[i].fx());
        const double y = base[i].fy() + t * (base[i + 1].fy() - base[i].fy());
        v.push_back(snap(x + uniform(rng, -jitter, jitter), y + uniform(rng, -jitter, jitter), span / 4000));
        if (unit(rng) < 0.25) {
          // Excursion out and back, slightly off its own track.
          const double ang = uniform(rng, 0, 2 * std::numbers::pi), reach = uniform(rng, 0.05, 0.3) * span;
          const Point& s = v.back();
          v.push_back(snap(s.fx() + reach * std::cos(ang), s.fy() + reach * std::sin(ang), span / 4000));
          v.push_back(snap(s.fx() + uniform(rng, -jitter, jitter) * 0.3, s.fy() + uniform(rng, -jitter, jitter) * 0.3,
                           span / 4000));
        }
      }
      if (i + 2 < base.size()) {
        v.push_back(snap(base[i + 1].fx() + uniform(rng, -jitter, jitter),
                         base[i + 1].fy() + uniform(rng, -jitter, jitter), span / 4000));
      }
    }
    v.push_back(base.back());
    if (!valid_segment_path(v, d)) continue;
    if (!same_class(v, base, d, tri)) continue;
    return v;
  }
  return std::nullopt;
}

std::optional<std::vector<Point>> longer_variant(const std::vector<Point>& base, const PolygonalDomain& d,
                                                 const Triangulation& tri, std::mt19937_64& rng) {
  if (base.size() < 2) return std::nullopt;
  const double base_len = polyline_length(base);
  double scale = 0.3;
  for (int attempt = 0; attempt < 80; ++attempt, scale *= 0.85) {
    std::vector<Point> v = base;
    const std::size_t i = below(rng, base.size() - 1);
    const Point &a = base[i], &b = base[i + 1];
    const double t = uniform(rng, 0.2, 0.8), len = distance(a, b);
    const double nx = -(b.fy() - a.fy()) / len, ny = (b.fx() - a.fx()) / len;
    const double off = (unit(rng) < 0.5 ? -1 : 1) * uniform(rng, 0.3, 1.0) * scale * len;
    const double x = a.fx() + t * (b.fx() - a.fx()) + off * nx, y = a.fy() + t * (b.fy() - a.fy()) + off * ny;
    v.insert(v.begin() + static_cast<long>(i) + 1, snap(x, y, len / 4096));
    if (!valid_segment_path(v, d, true)) continue;
    if (polyline_length(v) <= base_len) continue;
    if (!same_class(v, base, d, tri)) continue;
    return v;
  }
  return std::nullopt;
}

}  // namespace taut
