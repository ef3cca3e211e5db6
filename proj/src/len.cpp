#include "taut/len.hpp"

#include <algorithm>
#include <cmath>

namespace taut {

namespace {

struct Refined {
  std::vector<double> x, y;
  double max_edge = 0.0;
  std::size_t size() const { return x.size(); }
  double dist(std::size_t a, std::size_t b) const { return std::hypot(x[b] - x[a], y[b] - y[a]); }
};

Refined refine_path(const std::vector<Point>& path, std::size_t rounds) {
  Refined r;
  const std::size_t parts = std::size_t{1} << rounds;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const double ax = path[i].fx(), ay = path[i].fy(), bx = path[i + 1].fx(), by = path[i + 1].fy();
    for (std::size_t k = 0; k < parts; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(parts);
      r.x.push_back(ax + t * (bx - ax));
      r.y.push_back(ay + t * (by - ay));
    }
    r.max_edge = std::max(r.max_edge, std::hypot(bx - ax, by - ay) / static_cast<double>(parts));
  }
  r.x.push_back(path.back().fx());
  r.y.push_back(path.back().fy());
  return r;
}

// Weighted chord matrix g(|P_b - P_a|), row-major.
std::vector<double> chord_matrix(const Refined& r) {
  const std::size_t n = r.size();
  std::vector<double> g(n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) g[a * n + b] = g[b * n + a] = chord_weight(r.dist(a, b));
  }
  return g;
}

double family_value(const std::vector<double>& sorted_desc) {
  double v = 0.0, w = 0.5;
  for (double g : sorted_desc) {
    v += w * g;
    w *= 0.5;
  }
  return v;
}

// Exact maximum over families of at most k intervals with endpoints on the
// refined vertices. State: last endpoint used and the set of weight ranks taken.
double exact_dp(const std::vector<double>& g, std::size_t n, std::size_t k) {
  const std::size_t masks = std::size_t{1} << k;
  std::vector<double> weight(k);
  for (std::size_t r = 0; r < k; ++r) weight[r] = std::ldexp(1.0, -static_cast<int>(r) - 1);
  std::vector<double> best(n * masks, -1.0);
  best[0] = 0.0;
  for (std::size_t b = 1; b < n; ++b) {
    double* row = &best[b * masks];
    std::copy(&best[(b - 1) * masks], &best[b * masks], row);
    for (std::size_t a = 0; a < b; ++a) {
      const double c = g[a * n + b];
      if (c <= 0.0) continue;
      const double* from = &best[a * masks];
      for (std::size_t m = 0; m < masks; ++m) {
        if (from[m] < 0.0) continue;
        for (std::size_t r = 0; r < k; ++r) {
          if (m >> r & 1) continue;
          const std::size_t to = m | (std::size_t{1} << r);
          row[to] = std::max(row[to], from[m] + weight[r] * c);
        }
      }
    }
  }
  return *std::max_element(&best[(n - 1) * masks], &best[n * masks]);
}

struct Family {
  std::vector<double> chords;  // descending, at most k
  double value = 0.0;
};

// Lower bound for k above the exact range: keeps the best `width` families
// ending at or before each refined vertex.
double beam_search(const std::vector<double>& g, std::size_t n, std::size_t k, std::size_t width) {
  std::vector<std::vector<Family>> beam(n);
  beam[0].push_back({});
  auto keep_best = [&](std::vector<Family>& fs) {
    std::sort(fs.begin(), fs.end(), [](const Family& a, const Family& b) {
      if (a.value != b.value) return a.value > b.value;
      return a.chords > b.chords;
    });
    fs.erase(std::unique(fs.begin(), fs.end(), [](const Family& a, const Family& b) { return a.chords == b.chords; }),
             fs.end());
    if (fs.size() > width) fs.resize(width);
  };
  for (std::size_t b = 1; b < n; ++b) {
    std::vector<Family> cand = beam[b - 1];
    for (std::size_t a = 0; a < b; ++a) {
      const double c = g[a * n + b];
      if (c <= 0.0) continue;
      for (const Family& f : beam[a]) {
        Family h = f;
        h.chords.insert(std::upper_bound(h.chords.begin(), h.chords.end(), c, std::greater<>()), c);
        if (h.chords.size() > k) h.chords.pop_back();
        h.value = family_value(h.chords);
        cand.push_back(std::move(h));
      }
    }
    keep_best(cand);
    beam[b] = std::move(cand);
  }
  return beam[n - 1].empty() ? 0.0 : beam[n - 1].front().value;
}

// Upper bound on the supremum over families of at most k intervals with
// arbitrary endpoints. A continuous interval from refined edge i to edge j >= i
// has chord at most C(i, j), the largest chord between the corners of the two
// edges (distance is convex along each pair of edges); disjoint intervals give
// a chain with j <= i' for the next one. Same rank-mask recursion as above,
// positions are edges.
double relaxed_dp(const std::vector<double>& g, std::size_t n, std::size_t k) {
  const std::size_t edges = n - 1;
  const std::size_t masks = std::size_t{1} << k;
  std::vector<double> weight(k);
  for (std::size_t r = 0; r < k; ++r) weight[r] = std::ldexp(1.0, -static_cast<int>(r) - 1);
  auto corner = [&](std::size_t i, std::size_t j) {
    return std::max({g[i * n + j], g[i * n + j + 1], g[(i + 1) * n + j], g[(i + 1) * n + j + 1]});
  };
  std::vector<double> best(edges * masks, -1.0);
  best[0] = 0.0;
  for (std::size_t j = 0; j < edges; ++j) {
    double* row = &best[j * masks];
    if (j > 0) std::copy(&best[(j - 1) * masks], &best[j * masks], row);
    for (std::size_t i = 0; i <= j; ++i) {
      const double c = corner(i, j);
      if (c <= 0.0) continue;
      // i == j reads and writes the same row; ascending masks chain correctly.
      const double* from = &best[i * masks];
      for (std::size_t m = 0; m < masks; ++m) {
        if (from[m] < 0.0) continue;
        for (std::size_t r = 0; r < k; ++r) {
          if (m >> r & 1) continue;
          const std::size_t to = m | (std::size_t{1} << r);
          row[to] = std::max(row[to], from[m] + weight[r] * c);
        }
      }
    }
  }
  return *std::max_element(&best[(edges - 1) * masks], &best[edges * masks]);
}

}  // namespace

LenValue len(const std::vector<Point>& path, const LenOptions& opts) {
  const bool constant = std::all_of(path.begin(), path.end(), [&](const Point& x) { return x == path.front(); });
  if (path.size() < 2 || constant) return {};
  const std::size_t k = std::max<std::size_t>(opts.k_max, 1);
  const Refined r = refine_path(path, opts.refine);
  const std::size_t n = r.size();
  const auto g = chord_matrix(r);

  LenValue out;
  // Every chord is at most the diameter, attained between two vertices, so
  // each interval past rank k adds at most 2^-i g(diameter).
  const double g_diam = *std::max_element(g.begin(), g.end());
  const double truncation = std::ldexp(g_diam, -static_cast<int>(k));
  if (k <= 8) {
    const double upper = relaxed_dp(g, n, k);
    out.value = exact_dp(g, n, k);
    out.error_bound = truncation + std::min(2.0 * r.max_edge, std::max(0.0, upper - out.value));
  } else {
    // Ranks 9..k add at most (2^-8 - 2^-k) g(diameter) over the best 8-family.
    const double upper = relaxed_dp(g, n, 8) + std::ldexp(g_diam, -8) - truncation;
    out.value = std::max(exact_dp(g, n, 8), beam_search(g, n, k, opts.beam_width));
    out.error_bound = truncation + std::max(0.0, upper - out.value);
  }
  return out;
}

LenOrder len_compare(const std::vector<Point>& a, const std::vector<Point>& b, const LenOptions& opts) {
  const LenValue la = len(a, opts), lb = len(b, opts);
  const double slack = la.error_bound + lb.error_bound;
  if (lb.value - la.value > slack) return LenOrder::Less;
  if (la.value - lb.value > slack) return LenOrder::Greater;
  return LenOrder::Indistinguishable;
}

}  // namespace taut
