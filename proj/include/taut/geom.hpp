#pragma once

// Exact planar primitives. Every incidence and side decision is made on
// rational coordinates; doubles appear only in reported lengths and as a
// filter in front of the exact orientation test.

#include "taut/rational.hpp"

#include <array>
#include <cmath>
#include <compare>
#include <optional>
#include <ostream>
#include <vector>

namespace taut {

class Point {
 public:
  Point() = default;
  Point(Rational x, Rational y);
  Point(long x, long y) : Point(Rational(x), Rational(y)) {}

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  double fx() const { return fx_; }
  double fy() const { return fy_; }

  friend bool operator==(const Point& a, const Point& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  /// Lexicographic (x, then y); used for deterministic ordering only.
  friend bool operator<(const Point& a, const Point& b) {
    return a.x_ < b.x_ || (a.x_ == b.x_ && a.y_ < b.y_);
  }

 private:
  Rational x_, y_;
  double fx_ = 0.0, fy_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

/// Point a + t * (b - a).
Point lerp(const Point& a, const Point& b, const Rational& t);

Rational cross(const Point& o, const Point& a, const Point& b);  // (a-o) x (b-o)
Rational dot(const Point& o, const Point& a, const Point& b);    // (a-o) . (b-o)
Rational squared_distance(const Point& a, const Point& b);
double distance(const Point& a, const Point& b);

/// Sign of twice the signed area of pqr: +1 counter-clockwise, 0 collinear,
/// -1 clockwise. Exact.
int orient(const Point& p, const Point& q, const Point& r);

/// True when r lies on the closed segment pq.
bool on_segment(const Point& p, const Point& q, const Point& r);

struct Segment {
  Point a, b;
  bool degenerate() const { return a == b; }
};

enum class IntersectionKind { Disjoint, ProperCross, Touch, Overlap };

struct SegmentIntersection {
  IntersectionKind kind = IntersectionKind::Disjoint;
  Point point;    // ProperCross / Touch
  Segment overlap;  // Overlap (endpoints ordered lexicographically)
};

/// Classifies the intersection of two closed segments. Degenerate segments
/// are treated as points; a shared single point that is interior to both
/// segments is a ProperCross, any other single shared point is a Touch.
SegmentIntersection segments_intersect(const Segment& s1, const Segment& s2);

/// Line through `anchor` with direction `direction` (any non-zero vector).
struct LineSpec {
  Point anchor;
  Point direction;

  static LineSpec through(const Point& a, const Point& b);
  /// Direction (cos theta, sin theta) rounded to the nearest doubles.
  static LineSpec from_angle(const Point& anchor, double theta);

  Point second_point() const;
  /// Representative with direction scaled so its first non-zero coordinate
  /// is positive and of unit magnitude, anchor moved to the foot of the
  /// perpendicular from the origin. Equal lines normalize identically.
  LineSpec normalized() const;
};

/// Sign of the signed distance from p to the line (positive on the left of
/// the direction).
int line_side(const LineSpec& line, const Point& p);

/// Parameter t with a + t (b - a) on line cd, if ab is not parallel to cd.
std::optional<Rational> line_param(const Point& a, const Point& b,
                                   const Point& c, const Point& d);

double polyline_length(const std::vector<Point>& pts);

/// Twice the signed area of a closed ring.
Rational twice_signed_area(const std::vector<Point>& ring);

}  // namespace taut
