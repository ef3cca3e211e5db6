#pragma once

#include "taut/domain.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace taut {

struct InvalidPath : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotGeneralPosition : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EndpointMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Polyline path. In the strict regime every interior vertex and every open
/// edge lies in the open domain; closure members may also touch the boundary.
struct PathPoly {
  std::vector<Point> vertices;
  bool closure = false;
  bool start_on_boundary = false;
  bool end_on_boundary = false;

  const Point& p() const { return vertices.front(); }
  const Point& q() const { return vertices.back(); }
  std::size_t segments() const { return vertices.size() - 1; }
  double length() const { return polyline_length(vertices); }
};

/// Builds a path and fills in the endpoint flags.
PathPoly make_path(std::vector<Point> vertices, const PolygonalDomain& d, bool closure = false);

/// Empty when the path satisfies its regime; otherwise human-readable reasons.
std::vector<std::string> validate_path(const PathPoly& path, const PolygonalDomain& d);

struct Crossing {
  int edge;
  int dir;  // +1 from edges[edge].tri0 to tri1, -1 the other way
  bool operator==(const Crossing&) const = default;
};
using CrossingWord = std::vector<Crossing>;

CrossingWord reduce(const CrossingWord& w);

/// Transversal crossings of interior edges in path order. Endpoints at domain
/// vertices are referred to the first triangle of the vertex fan, so words
/// of paths with the same endpoints are comparable.
CrossingWord crossing_word(const PathPoly& path, const Triangulation& tri);

/// Lazily expanded universal cover of the closed domain: a tree of triangle
/// copies rooted at one triangle. A node is identified with its reduced
/// crossing word from the root.
class Cover {
 public:
  Cover(const Triangulation& tri, int root_tri);

  const Triangulation& triangulation() const { return *tri_; }
  int id() const { return id_; }
  int root() const { return 0; }
  int tri(int node) const { return nodes_[node].tri; }
  int parent(int node) const { return nodes_[node].parent; }
  int parent_slot(int node) const { return nodes_[node].parent_slot; }
  int depth(int node) const { return nodes_[node].depth; }
  std::size_t size() const { return nodes_.size(); }

  /// Node across `slot`, creating it on first use; -1 across a boundary edge.
  int neighbor(int node, int slot);
  /// Crossing word of the tree path from the root to `node`.
  CrossingWord word(int node) const;
  /// Tree path between two nodes, inclusive.
  std::vector<int> tree_path(int a, int b) const;
  /// Representative node for the cover point over x (x in tri(node)).
  int canonical(int node, const Point& x) const;

 private:
  struct Node {
    int tri, parent, parent_slot, depth;
    std::array<int, 3> child{-1, -1, -1};
  };
  const Triangulation* tri_;
  int id_;
  std::vector<Node> nodes_;
};

/// Root triangle for paths starting at p: the containing triangle, or the
/// first fan triangle when p is a vertex.
int start_triangle(const Triangulation& tri, const Point& p);

/// Piece of a lifted straight walk: parameter range [t0, t1] lies in `node`.
struct Piece {
  int node;
  Rational t0, t1;
};

struct LiftedPath {
  std::vector<std::vector<Piece>> segments;  // per path segment, t in [0, 1]
  int end_node = -1;
};

/// Lifts a closure-regime path into `cover` starting at the root. Throws
/// InvalidPath when the path leaves the closed domain.
LiftedPath lift(const PathPoly& path, Cover& cover);

/// Canonical end node of the lift (class invariant for fixed endpoints).
int lift_end(const PathPoly& path, Cover& cover);

/// Same class closure. Both paths must share endpoints.
bool homotopic(const PathPoly& a, const PathPoly& b, const Triangulation& tri);
/// Same, triangulating the domain (retrying seeds for strict paths not in
/// general position).
bool homotopic(const PathPoly& a, const PathPoly& b, const PolygonalDomain& d);

/// Straight chord of the line inside the (closed) cover: parameter range on
/// the line and the nodes it runs through.
struct LiftedChord {
  LineSpec line;  // parameter t: anchor + t * direction
  Rational t0, t1;
  std::vector<Piece> pieces;  // sorted by t, covering [t0, t1]
  int cover_id = -1;
  bool open = false;  // endpoints lie on the boundary and are excluded

  Point at(const Rational& t) const;
  /// Node containing the chord point at t (t within [t0, t1]).
  int node_at(const Rational& t) const;
};

/// Component of the line through the cover point (node, x). `open` stops at
/// the domain boundary; otherwise the chord may pass tangentially through
/// obstacle corners and along boundary edges.
/// With `clip`, the walk stops at those line parameters and the result is
/// the corresponding piece of the chord.
LiftedChord chord_through(Cover& cover, int node, const Point& x, const LineSpec& line, bool open,
                          const std::optional<std::pair<Rational, Rational>>& clip = std::nullopt);

struct SleeveCell {
  int tri;
  int copy;        // occurrence index of tri within the sleeve
  int node;        // cover node
  int entry_slot;  // -1 for the first cell
  int exit_slot;   // -1 for the last cell
};

/// Chain of triangle copies glued along crossed edges.
struct Sleeve {
  std::shared_ptr<Cover> cover;
  std::vector<SleeveCell> cells;
};

Sleeve build_sleeve(const CrossingWord& reduced, const Triangulation& tri, int start_tri);
Sleeve build_sleeve(std::shared_ptr<Cover> cover, int from_node, int to_node);

/// Maximal pieces of the line inside the sleeve (closed triangles), ordered
/// along the sleeve.
std::vector<LiftedChord> line_lifts(const LineSpec& line, const Sleeve& sleeve);

}  // namespace taut
