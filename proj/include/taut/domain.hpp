#pragma once

#include "taut/geom.hpp"

#include <array>
#include <string>
#include <vector>

namespace taut {

/// Open set Omega = interior(outer) minus the closed holes. The outer ring is
/// counter-clockwise, holes are clockwise.
struct PolygonalDomain {
  std::vector<Point> outer;
  std::vector<std::vector<Point>> holes;

  /// Builds a domain and fixes ring orientation (outer CCW, holes CW).
  static PolygonalDomain oriented(std::vector<Point> outer,
                                  std::vector<std::vector<Point>> holes = {});

  std::size_t vertex_count() const;
  /// All vertices in global order: outer first, then each hole.
  std::vector<Point> all_vertices() const;
  /// Ring r (0 = outer, i+1 = hole i).
  const std::vector<Point>& ring(std::size_t r) const { return r == 0 ? outer : holes[r - 1]; }
  std::size_t ring_count() const { return holes.size() + 1; }
  /// Global id of vertex i of ring r.
  std::size_t global_id(std::size_t r, std::size_t i) const;

  std::array<Rational, 4> bounding_box() const;  // xmin, ymin, xmax, ymax
};

struct Violation {
  std::string invariant;
  std::vector<std::size_t> vertices;  // global vertex ids involved

  std::string describe() const;
};

std::vector<Violation> validate(const PolygonalDomain& d);

struct Location {
  enum class Kind { Interior, Boundary, Exterior };
  Kind kind = Kind::Exterior;
  // Boundary only: global id of the vertex hit (if any) and of the edge
  // (edge k of a ring runs from vertex k to vertex k+1; ids are global
  // vertex ids of the edge start).
  int vertex = -1;
  int edge = -1;

  bool interior() const { return kind == Kind::Interior; }
  bool boundary() const { return kind == Kind::Boundary; }
  bool exterior() const { return kind == Kind::Exterior; }
};

Location locate(const PolygonalDomain& d, const Point& p);

/// Constrained triangulation of the closed domain, vertices = domain vertices.
struct Triangulation {
  std::vector<Point> vertices;
  std::vector<std::array<int, 3>> triangles;   // CCW vertex ids
  std::vector<std::array<int, 3>> neighbors;   // across edge k = (v[k], v[k+1]); -1 on the boundary
  std::vector<std::array<int, 3>> edge_ids;    // interior edge id per slot, -1 on the boundary

  struct Edge {
    int tri0, slot0, tri1, slot1;  // crossing from tri0 to tri1 is the '+' direction
  };
  std::vector<Edge> edges;  // interior edges only

  std::size_t size() const { return triangles.size(); }
  Point corner(int tri, int k) const { return vertices[triangles[tri][((k % 3) + 3) % 3]]; }
  bool boundary_slot(int tri, int slot) const { return neighbors[tri][slot] < 0; }
  /// Slot of `tri` facing `other`, or -1.
  int slot_towards(int tri, int other) const;
  /// Local index of vertex id v in tri, or -1.
  int local_index(int tri, int v) const;

  /// Triangles whose closure contains p, in id order.
  std::vector<int> containing(const Point& p) const;
  /// Triangles around vertex v in counter-clockwise order, starting at the
  /// one whose clockwise-side edge lies on the boundary.
  std::vector<int> fan(int v) const;
  /// Vertex id at position p, or -1.
  int vertex_at(const Point& p) const;
};

/// Ear clipping after hole bridging. `seed` varies bridge choice and ear scan
/// start; every seed gives a valid triangulation.
Triangulation triangulate(const PolygonalDomain& d, unsigned seed = 0);

/// Invariant check used by tests: tiling, adjacency symmetry, dual connectivity.
std::vector<std::string> check_triangulation(const Triangulation& t, const PolygonalDomain& d);

}  // namespace taut
