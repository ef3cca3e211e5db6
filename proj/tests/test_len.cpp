#include "doctest.h"

#include "taut/len.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

using namespace taut;

namespace {

double sorted_value(std::vector<double> gs) {
  std::sort(gs.begin(), gs.end(), std::greater<>());
  double v = 0, w = 0.5;
  for (double g : gs) v += w * g, w *= 0.5;
  return v;
}

// Brute force over every family of disjoint index intervals of at most k
// members on the given point list.
double brute_families(const std::vector<std::pair<double, double>>& pts, std::size_t k) {
  double best = 0;
  std::vector<double> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    best = std::max(best, sorted_value(chosen));
    if (chosen.size() == k) return;
    for (std::size_t a = from; a < pts.size(); ++a) {
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        chosen.push_back(chord_weight(std::hypot(pts[b].first - pts[a].first, pts[b].second - pts[a].second)));
        rec(b);
        chosen.pop_back();
      }
    }
  };
  rec(0);
  return best;
}

std::vector<Point> rand_poly(std::mt19937_64& rng, std::size_t n, double scale) {
  std::uniform_int_distribution<long> c(-100, 100);
  std::vector<Point> v;
  for (std::size_t i = 0; i < n; ++i) {
    v.emplace_back(from_double(c(rng) * scale / 100), from_double(c(rng) * scale / 100));
  }
  return v;
}

}  // namespace

TEST_CASE("len examples") {
  CHECK(len({Point(1, 1), Point(1, 1)}).value == 0.0);
  CHECK(len({Point(1, 1), Point(1, 1)}).error_bound == 0.0);

  std::vector<Point> unit{Point(0, 0), Point(1, 0)};
  auto v = len(unit, {20, 6});
  CHECK(v.value >= 0.25);
  CHECK(v.upper() < 1.0);
  auto rot = len({Point(0, 0), Point(0, 1)}, {20, 6});
  CHECK(std::fabs(rot.value - v.value) < 1e-12);
}

TEST_CASE("segment value matches brute force over compositions") {
  // On a straight segment an optimal family covers it with adjacent pieces.
  const int units = 64;
  double best = 0;
  for (int a = 1; a <= units; ++a) {
    for (int b = 0; a + b <= units; ++b) {
      for (int c = 0; a + b + c <= units; ++c) {
        const int d = units - a - b - c;
        std::vector<double> gs;
        for (int x : {a, b, c, d}) {
          if (x > 0) gs.push_back(chord_weight(x / double(units)));
        }
        best = std::max(best, sorted_value(gs));
      }
    }
  }
  auto v = len({Point(0, 0), Point(1, 0)}, {4, 6});
  CHECK(std::fabs(v.value - best) < 1e-12);
}

TEST_CASE("dp matches brute force family search on small polylines") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto poly = rand_poly(rng, 4, 2.0);
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
      for (int h = 0; h < 2; ++h) {
        const double t = h / 2.0;
        pts.push_back({poly[i].fx() + t * (poly[i + 1].fx() - poly[i].fx()),
                       poly[i].fy() + t * (poly[i + 1].fy() - poly[i].fy())});
      }
    }
    pts.push_back({poly.back().fx(), poly.back().fy()});
    auto v = len(poly, {3, 1});
    CHECK(std::fabs(v.value - brute_families(pts, 3)) < 1e-12);
  }
}

TEST_CASE("len_compare") {
  std::vector<Point> seg{Point(0, 0), Point(2, 0)};
  std::vector<Point> detour{Point(0, 0), Point(3, 1), Point(-1, 1), Point(2, 0)};
  CHECK(len_compare(seg, detour, {8, 4}) == LenOrder::Less);
  CHECK(len_compare(detour, seg, {8, 4}) == LenOrder::Greater);
  CHECK(len_compare(detour, detour, {8, 4}) == LenOrder::Indistinguishable);

  std::vector<Point> top{Point(-3, 0), Point(0, 3), Point(3, 0)};
  std::vector<Point> eff{Point(-3, 0), Point(-1, 1), Point(1, 1), Point(3, 0)};
  CHECK(len_compare(eff, top, {20, 6}) == LenOrder::Less);
}

TEST_CASE("axioms on random polylines") {
  std::mt19937_64 rng(11);
  const LenOptions opts{8, 2};
  for (int trial = 0; trial < 30; ++trial) {
    auto poly = rand_poly(rng, 3 + trial % 6, 3.0);
    auto v = len(poly, opts);
    CHECK(v.value >= 0.0);
    CHECK(v.upper() < 1.0);
    // Subpath never exceeds the path.
    std::vector<Point> sub(poly.begin(), poly.begin() + 2);
    CHECK(len(sub, opts).value <= v.upper() + 1e-12);
    // Subadditivity at a vertex split.
    std::vector<Point> left(poly.begin(), poly.begin() + 2), right(poly.begin() + 1, poly.end());
    CHECK(v.value <= len(left, opts).upper() + len(right, opts).upper() + 1e-12);
  }
}
