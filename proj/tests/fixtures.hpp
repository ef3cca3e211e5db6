#pragma once

#include "taut/domain.hpp"

#include <cmath>
#include <vector>

namespace fixtures {

using taut::Point;
using taut::PolygonalDomain;

inline PolygonalDomain square(long r = 5) {
  return PolygonalDomain::oriented({Point(-r, -r), Point(r, -r), Point(r, r), Point(-r, r)});
}

// Square (-5,-5)..(5,5) with the hole (-1,-1)..(1,1).
inline PolygonalDomain d1() {
  return PolygonalDomain::oriented(
      {Point(-5, -5), Point(5, -5), Point(5, 5), Point(-5, 5)},
      {{Point(-1, -1), Point(1, -1), Point(1, 1), Point(-1, 1)}});
}

inline double golden_top() { return 2.0 + 2.0 * std::sqrt(5.0); }
inline double golden_loop() { return 6.0 + 2.0 * std::sqrt(5.0); }

}  // namespace fixtures
