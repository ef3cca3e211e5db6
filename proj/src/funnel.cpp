#include "taut/tighten.hpp"

namespace taut {

PathPoly funnel_shortest(const Sleeve& sleeve, const Point& p, const Point& q) {
  const Triangulation& t = sleeve.cover->triangulation();
  // Portals as (left, right) seen when walking from p towards q.
  std::vector<std::pair<Point, Point>> portals{{p, p}};
  for (std::size_t i = 0; i + 1 < sleeve.cells.size(); ++i) {
    const auto& c = sleeve.cells[i];
    portals.emplace_back(t.corner(c.tri, c.exit_slot + 1), t.corner(c.tri, c.exit_slot));
  }
  portals.emplace_back(q, q);

  std::vector<Point> out{p};
  Point apex = p, left = p, right = p;
  std::size_t apex_i = 0, left_i = 0, right_i = 0;
  for (std::size_t i = 1; i < portals.size(); ++i) {
    const Point& l = portals[i].first;
    const Point& r = portals[i].second;
    if (orient(apex, right, r) >= 0) {
      if (apex == right || orient(apex, left, r) < 0) {
        right = r;
        right_i = i;
      } else {
        out.push_back(left);
        apex = left;
        apex_i = left_i;
        right = apex;
        right_i = apex_i;
        i = apex_i;
        continue;
      }
    }
    if (orient(apex, left, l) <= 0) {
      if (apex == left || orient(apex, right, l) > 0) {
        left = l;
        left_i = i;
      } else {
        out.push_back(right);
        apex = right;
        apex_i = right_i;
        left = apex;
        left_i = apex_i;
        i = apex_i;
        continue;
      }
    }
  }
  out.push_back(q);
  PathPoly path;
  path.vertices = normalize_vertices(std::move(out));
  path.closure = true;
  return path;
}

PathPoly shortest_in_class(const PathPoly& path, const Triangulation& tri) {
  auto cover = std::make_shared<Cover>(tri, start_triangle(tri, path.p()));
  const int end = lift_end(path, *cover);
  return funnel_shortest(build_sleeve(cover, cover->root(), end), path.p(), path.q());
}

}  // namespace taut
