#pragma once

#include "taut/io.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace taut {

struct GenOptions {
  std::uint64_t seed = 1;
  std::size_t holes = 1;
  std::size_t vertices = 24;      // total domain vertex budget
  std::size_t path_vertices = 3;  // interior waypoints of the generated path
  double radius = 10.0;           // outer ring radius scale
};

/// Deterministic for a given option set: star-shaped outer ring, star-shaped
/// holes with clearance, and a random polyline between two interior points.
Instance generate_instance(const GenOptions& opts);

/// Random convex polygon (vertices on a circle, snapped to a grid).
PolygonalDomain random_convex_domain(std::mt19937_64& rng, double radius);

Point random_interior_point(const PolygonalDomain& d, std::mt19937_64& rng, double grid);

/// Random strict-regime polyline from p through `waypoints` interior points to q.
std::vector<Point> random_path(const PolygonalDomain& d, std::mt19937_64& rng, const Point& p, const Point& q,
                               std::size_t waypoints, double grid);

/// Another strict-regime path with the same endpoints and class as `base`:
/// subdivided, jittered, sometimes with a back-and-forth excursion.
std::optional<std::vector<Point>> homotopic_variant(const std::vector<Point>& base, const PolygonalDomain& d,
                                                    const Triangulation& tri, std::mt19937_64& rng);

/// Strictly longer homotopic path obtained by pushing a bump into one segment
/// or nudging an interior vertex.
std::optional<std::vector<Point>> longer_variant(const std::vector<Point>& base, const PolygonalDomain& d,
                                                 const Triangulation& tri, std::mt19937_64& rng);

}  // namespace taut
