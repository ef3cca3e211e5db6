#include "taut/geom.hpp"

#include <algorithm>
#include <cctype>
#include <cfloat>
#include <cmath>
#include <sstream>

namespace taut {

Rational parse_rational(std::string_view text) {
  auto fail = [&]() {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  };
  if (text.empty()) fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) fail();
    Rational q = num / den;
    q.canonicalize();
    return q;
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false, seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) fail();
  long exponent = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') fail();
    ++i;
    std::string exp_text(text.substr(i));
    if (exp_text.empty()) fail();
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (...) {
      fail();
    }
    if (used != exp_text.size() || std::labs(exponent) > 4000) fail();
  }
  mpz_class mantissa(digits, 10);
  long scale = exponent - frac_digits;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  Rational q = scale >= 0 ? Rational(mantissa * pow10) : Rational(mantissa, pow10);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string format_rational(const Rational& value) {
  mpz_class den = value.get_den();
  mpz_class rest = den;
  unsigned long twos = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), mpz_class(2).get_mpz_t());
  unsigned long fives = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), mpz_class(5).get_mpz_t());
  if (rest != 1) return value.get_num().get_str() + "/" + den.get_str();
  unsigned long places = std::max(twos, fives);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, places);
  mpz_class scaled = value.get_num() * (pow10 / den);
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (places > 0) {
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
  }
  return negative ? "-" + digits : digits;
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite coordinate");
  Rational q(value);
  q.canonicalize();
  return q;
}

Point::Point(Rational x, Rational y)
    : x_(std::move(x)), y_(std::move(y)), fx_(x_.get_d()), fy_(y_.get_d()) {}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << "(" << format_rational(p.x()) << ", " << format_rational(p.y()) << ")";
}

Point lerp(const Point& a, const Point& b, const Rational& t) {
  if (t == 0) return a;
  if (t == 1) return b;
  return Point(a.x() + t * (b.x() - a.x()), a.y() + t * (b.y() - a.y()));
}

Rational cross(const Point& o, const Point& a, const Point& b) {
  // Scratch values reused per thread; this sits under every exact fallback.
  thread_local Rational ax, ay, bx, by;
  mpq_sub(ax.get_mpq_t(), a.x().get_mpq_t(), o.x().get_mpq_t());
  mpq_sub(ay.get_mpq_t(), a.y().get_mpq_t(), o.y().get_mpq_t());
  mpq_sub(bx.get_mpq_t(), b.x().get_mpq_t(), o.x().get_mpq_t());
  mpq_sub(by.get_mpq_t(), b.y().get_mpq_t(), o.y().get_mpq_t());
  mpq_mul(ax.get_mpq_t(), ax.get_mpq_t(), by.get_mpq_t());
  mpq_mul(ay.get_mpq_t(), ay.get_mpq_t(), bx.get_mpq_t());
  Rational out;
  mpq_sub(out.get_mpq_t(), ax.get_mpq_t(), ay.get_mpq_t());
  return out;
}

Rational dot(const Point& o, const Point& a, const Point& b) {
  return (a.x() - o.x()) * (b.x() - o.x()) + (a.y() - o.y()) * (b.y() - o.y());
}

Rational squared_distance(const Point& a, const Point& b) {
  Rational dx = a.x() - b.x(), dy = a.y() - b.y();
  return dx * dx + dy * dy;
}

double distance(const Point& a, const Point& b) {
  if (a == b) return 0.0;
  return std::sqrt(squared_distance(a, b).get_d());
}

int orient(const Point& p, const Point& q, const Point& r) {
  // Inputs carry up to one ulp of conversion error each; the bound below
  // covers that plus the rounding of the double evaluation.
  const double qx = q.fx() - p.fx(), qy = q.fy() - p.fy();
  const double rx = r.fx() - p.fx(), ry = r.fy() - p.fy();
  const double det = qx * ry - qy * rx;
  const double a = std::fabs(p.fx()) + std::fabs(q.fx());
  const double b = std::fabs(p.fy()) + std::fabs(r.fy());
  const double c = std::fabs(p.fy()) + std::fabs(q.fy());
  const double d = std::fabs(p.fx()) + std::fabs(r.fx());
  const double bound = 16.0 * DBL_EPSILON * (a * b + c * d);
  if (det > bound) return 1;
  if (det < -bound) return -1;
  return sgn(cross(p, q, r));
}

bool on_segment(const Point& p, const Point& q, const Point& r) {
  // Doubles are within one ulp of the exact values; reject clear misses early.
  const double slack = 4 * DBL_EPSILON * (std::fabs(r.fx()) + std::fabs(r.fy()) + 1.0);
  if (r.fx() < std::min(p.fx(), q.fx()) - slack || r.fx() > std::max(p.fx(), q.fx()) + slack ||
      r.fy() < std::min(p.fy(), q.fy()) - slack || r.fy() > std::max(p.fy(), q.fy()) + slack) {
    return false;
  }
  if (orient(p, q, r) != 0) return false;
  return std::min(p.x(), q.x()) <= r.x() && r.x() <= std::max(p.x(), q.x()) &&
         std::min(p.y(), q.y()) <= r.y() && r.y() <= std::max(p.y(), q.y());
}

namespace {

SegmentIntersection point_result(IntersectionKind kind, const Point& p) {
  SegmentIntersection r;
  r.kind = kind;
  r.point = p;
  return r;
}

}  // namespace

SegmentIntersection segments_intersect(const Segment& s1, const Segment& s2) {
  SegmentIntersection none;
  if (s1.degenerate() && s2.degenerate()) {
    return s1.a == s2.a ? point_result(IntersectionKind::Touch, s1.a) : none;
  }
  if (s1.degenerate()) {
    return on_segment(s2.a, s2.b, s1.a) ? point_result(IntersectionKind::Touch, s1.a) : none;
  }
  if (s2.degenerate()) {
    return on_segment(s1.a, s1.b, s2.a) ? point_result(IntersectionKind::Touch, s2.a) : none;
  }
  const int o1 = orient(s1.a, s1.b, s2.a);
  const int o2 = orient(s1.a, s1.b, s2.b);
  const int o3 = orient(s2.a, s2.b, s1.a);
  const int o4 = orient(s2.a, s2.b, s1.b);

  if (o1 == 0 && o2 == 0) {
    // Collinear: project on the dominant axis of s1.
    const Point& lo1 = s1.b < s1.a ? s1.b : s1.a;
    const Point& hi1 = s1.b < s1.a ? s1.a : s1.b;
    const Point& lo2 = s2.b < s2.a ? s2.b : s2.a;
    const Point& hi2 = s2.b < s2.a ? s2.a : s2.b;
    const Point& lo = lo1 < lo2 ? lo2 : lo1;
    const Point& hi = hi2 < hi1 ? hi2 : hi1;
    if (hi < lo) return none;
    if (lo == hi) return point_result(IntersectionKind::Touch, lo);
    SegmentIntersection r;
    r.kind = IntersectionKind::Overlap;
    r.overlap = Segment{lo, hi};
    return r;
  }
  if (o1 * o2 > 0 || o3 * o4 > 0) return none;
  if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
    Rational t = cross(s2.a, s2.b, s1.a) / (cross(s2.a, s2.b, s1.a) - cross(s2.a, s2.b, s1.b));
    return point_result(IntersectionKind::ProperCross, lerp(s1.a, s1.b, t));
  }
  if (o1 == 0) return point_result(IntersectionKind::Touch, s2.a);
  if (o2 == 0) return point_result(IntersectionKind::Touch, s2.b);
  if (o3 == 0) return point_result(IntersectionKind::Touch, s1.a);
  return point_result(IntersectionKind::Touch, s1.b);
}

LineSpec LineSpec::through(const Point& a, const Point& b) {
  if (a == b) throw std::invalid_argument("line through coincident points");
  return LineSpec{a, Point(b.x() - a.x(), b.y() - a.y())};
}

LineSpec LineSpec::from_angle(const Point& anchor, double theta) {
  Point dir(from_double(std::cos(theta)), from_double(std::sin(theta)));
  if (dir.x() == 0 && dir.y() == 0) throw std::invalid_argument("zero direction");
  return LineSpec{anchor, dir};
}

Point LineSpec::second_point() const {
  return Point(anchor.x() + direction.x(), anchor.y() + direction.y());
}

LineSpec LineSpec::normalized() const {
  const Rational& dx = direction.x();
  const Rational& dy = direction.y();
  Rational lead = dx != 0 ? dx : dy;
  Point dir(dx / lead, dy / lead);
  // Foot of the perpendicular from the origin: anchor - ((anchor.d)/(d.d)) d.
  Rational dd = dir.x() * dir.x() + dir.y() * dir.y();
  Rational ad = anchor.x() * dir.x() + anchor.y() * dir.y();
  Rational s = ad / dd;
  return LineSpec{Point(anchor.x() - s * dir.x(), anchor.y() - s * dir.y()), dir};
}

int line_side(const LineSpec& line, const Point& p) {
  return orient(line.anchor, line.second_point(), p);
}

std::optional<Rational> line_param(const Point& a, const Point& b, const Point& c,
                                   const Point& d) {
  // cross(d - c, a + t(b - a) - c) = 0
  Rational ca = cross(c, d, a);
  Rational cb = cross(c, d, b);
  Rational denom = ca - cb;
  if (denom == 0) return std::nullopt;
  return ca / denom;
}

double polyline_length(const std::vector<Point>& pts) {
  double total = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) total += distance(pts[i - 1], pts[i]);
  return total;
}

Rational twice_signed_area(const std::vector<Point>& ring) {
  Rational sum = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % ring.size()];
    sum += a.x() * b.y() - a.y() * b.x();
  }
  return sum;
}

}  // namespace taut
