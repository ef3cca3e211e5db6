// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include "fixtures.hpp"
#include "oracle.hpp"
#include "taut/generate.hpp"
#include "taut/len.hpp"
#include "taut/tighten.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <string>

using namespace taut;

namespace {

// Tolerances.
constexpr double kRelLength = 1e-9;   // tighten vs funnel, relative
constexpr double kSupDistance = 1e-9;  // uniqueness, absolute
constexpr double kGolden = 1e-9;       // D1 golden values, absolute
constexpr double kIsometry = 1e-12;    // len under isometries
constexpr double kMaxSuiteSeconds = 30.0;
constexpr double kMaxConvexSeconds = 1.0;
constexpr double kMaxLenSeconds = 60.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Case {
  Instance inst;
  Triangulation tri;
  PathPoly input;
  TightenReport report;
  double seconds = 0.0;
};

// 200 instances with at most 5 holes and 60 domain vertices.
std::vector<Case> build_suite() {
  std::vector<Case> out;
  for (std::uint64_t s = 1; s <= 200; ++s) {
    GenOptions o;
    o.seed = s;
    o.holes = 1 + s % 5;
    o.vertices = 20 + (s * 7) % 41;
    o.path_vertices = 2 + s % 4;
    Case c;
    c.inst = generate_instance(o);
    c.tri = triangulate(c.inst.domain);
    c.input = make_path(c.inst.path, c.inst.domain);
    const auto t0 = Clock::now();
    c.report = tighten(c.input, c.inst.domain);
    c.seconds = seconds_since(t0);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Point> points_at(const std::vector<Point>& v, const std::vector<double>& fractions) {
  std::vector<double> cum{0.0};
  for (std::size_t i = 1; i < v.size(); ++i) cum.push_back(cum.back() + distance(v[i - 1], v[i]));
  std::vector<Point> out;
  for (double f : fractions) {
    const double s = f * cum.back();
    std::size_t i = 1;
    while (i + 1 < v.size() && cum[i] < s) ++i;
    const double seg = cum[i] - cum[i - 1];
    const double t = seg > 0 ? (s - cum[i - 1]) / seg : 0.0;
    out.push_back(lerp(v[i - 1], v[i], from_double(std::clamp(t, 0.0, 1.0))));
  }
  return out;
}

// Sup distance between two polylines after arc-length reparameterization,
// sampled at 1000 uniform fractions.
double sup_distance(const std::vector<Point>& a, const std::vector<Point>& b) {
  if (a.size() < 2 || b.size() < 2) return a.front() == b.front() ? 0.0 : distance(a.front(), b.front());
  std::vector<double> fr;
  for (int k = 0; k <= 1000; ++k) fr.push_back(k / 1000.0);
  const auto pa = points_at(a, fr), pb = points_at(b, fr);
  double worst = 0.0;
  for (std::size_t k = 0; k < pa.size(); ++k) worst = std::max(worst, distance(pa[k], pb[k]));
  return worst;
}

struct Line {
  bool pass;
  std::string detail;
};

void report(int id, const std::string& title, const std::function<Line()>& body, int& failures) {
  const auto t0 = Clock::now();
  Line r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  if (!r.pass) ++failures;
  std::printf("criterion %d %-28s %s  %s [%.1fs]\n", id, title.c_str(), r.pass ? "PASS" : "FAIL", r.detail.c_str(),
              seconds_since(t0));
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Line convex_identity() {
  std::mt19937_64 rng(101);
  int ok = 0;
  double spent = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto d = random_convex_domain(rng, 10.0);
    const Point p = random_interior_point(d, rng, 0.01), q = random_interior_point(d, rng, 0.01);
    auto v = random_path(d, rng, p, q, 1 + k % 3, 0.01);
    const auto t0 = Clock::now();
    auto r = tighten(make_path(v, d), d);
    spent += seconds_since(t0);
    const std::vector<Point> want = p == q ? std::vector<Point>{p} : std::vector<Point>{p, q};
    if (r.result.vertices == want) ++ok;
  }
  return {ok == 100 && spent < kMaxConvexSeconds, fmt("%.0f/100 straight, tighten %.3fs", ok, spent)};
}

Line oracle_equivalence(const std::vector<Case>& suite) {
  int ok = 0;
  double spent = 0.0, worst = 0.0;
  for (const auto& c : suite) {
    spent += c.seconds;
    const PathPoly ref = shortest_in_class(c.input, c.tri);
    const double lt = c.report.result.length(), lf = ref.length();
    const double rel = std::fabs(lt - lf) / std::max(lf, 1e-300);
    worst = std::max(worst, lf > 0 ? rel : std::fabs(lt));
    if ((lf > 0 ? rel : std::fabs(lt)) <= kRelLength && ref.vertices == c.report.result.vertices) ++ok;
  }
  return {ok == static_cast<int>(suite.size()) && spent < kMaxSuiteSeconds,
          fmt("%.0f/200 match, worst rel %.1e, tighten %.1fs", ok, worst, spent)};
}

Line uniqueness(const std::vector<Case>& suite) {
  int starts = 0, agree = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < 20; ++i) {
    const auto& c = suite[i];
    std::mt19937_64 rng(1000 + i);
    for (int k = 0; k < 50; ++k) {
      auto v = homotopic_variant(c.inst.path, c.inst.domain, c.tri, rng);
      if (!v) continue;
      ++starts;
      auto r = tighten(make_path(*v, c.inst.domain), c.inst.domain);
      const double sd = sup_distance(r.result.vertices, c.report.result.vertices);
      worst = std::max(worst, sd);
      if (r.result.vertices == c.report.result.vertices && sd < kSupDistance) ++agree;
    }
  }
  return {starts == 1000 && agree == starts, fmt("%.0f/%.0f starts agree, worst sup %.1e", agree, starts, worst)};
}

// Strictly longer homotopic paths, one per instance where one can be built.
std::vector<std::pair<const Case*, PathPoly>> perturbed(const std::vector<Case>& suite, std::size_t want) {
  std::vector<std::pair<const Case*, PathPoly>> out;
  std::mt19937_64 rng(4242);
  for (const auto& c : suite) {
    if (out.size() == want) break;
    if (c.report.result.vertices.size() < 2) continue;
    auto v = longer_variant(c.report.result.vertices, c.inst.domain, c.tri, rng);
    if (v) out.emplace_back(&c, make_path(*v, c.inst.domain, true));
  }
  return out;
}

Line certificate(const std::vector<Case>& suite, const std::vector<std::pair<const Case*, PathPoly>>& longer) {
  int clean = 0, caught = 0;
  for (const auto& c : suite) {
    if (certify_efficient(c.report.result, c.inst.domain, 1000, 7).violations == 0) ++clean;
  }
  for (const auto& [c, path] : longer) {
    if (certify_efficient(path, c->inst.domain, 1000, 7).violations >= 1) ++caught;
  }
  return {clean == static_cast<int>(suite.size()) && longer.size() == 100 && caught == 100,
          fmt("%.0f/200 clean, %.0f/%.0f perturbed flagged", clean, caught, static_cast<double>(longer.size()))};
}

Line persistence(const std::vector<Case>& suite) {
  std::size_t violations = 0;
  for (const auto& c : suite) {
    const auto snaps = replay_moves(c.input, c.report.moves);
    violations += chord_persistence_violations(snaps, c.tri, vertex_pair_lines(c.inst.domain, c.input.p(), c.input.q()));
  }
  return {violations == 0, fmt("%.0f violations over %.0f move logs", static_cast<double>(violations), 200)};
}

Line locally_shortest(const std::vector<Case>& suite, const std::vector<std::pair<const Case*, PathPoly>>& longer) {
  int yes = 0, no = 0;
  for (const auto& c : suite) yes += locally_shortest_check(c.report.result, c.inst.domain, 12);
  for (const auto& [c, path] : longer) no += !locally_shortest_check(path, c->inst.domain, 12);
  return {yes == static_cast<int>(suite.size()) && no == static_cast<int>(longer.size()) && longer.size() == 100,
          fmt("%.0f/200 tightened pass, %.0f/%.0f perturbed rejected", yes, no, static_cast<double>(longer.size()))};
}

std::vector<Point> random_polyline(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> u(-3000, 3000);
  std::vector<Point> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(ratio(u(rng), 1000), ratio(u(rng), 1000));
  return v;
}

// Rotation by a Pythagorean angle, optional reflection, then translation:
// exact on rationals.
std::vector<Point> isometry(const std::vector<Point>& v, int which) {
  const Rational c = ratio(3, 5), s = ratio(4, 5), tx = ratio(17, 7), ty = ratio(-5, 3);
  std::vector<Point> out;
  for (const auto& p : v) {
    Rational x = c * p.x() - s * p.y(), y = s * p.x() + c * p.y();
    if (which % 2) y = -y;
    out.emplace_back(x + tx, y + ty);
  }
  return out;
}

Line len_axioms() {
  const auto t0 = Clock::now();
  const LenOptions opts{8, 2};
  std::mt19937_64 rng(77);
  std::size_t checks = 0;
  std::map<std::string, int> broken;
  auto expect = [&](bool ok, const char* what) {
    ++checks;
    if (!ok) ++broken[what];
  };
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial) % 29;
    const auto v = random_polyline(rng, n);
    const LenValue lv = len(v, opts);
    expect(lv.value > 0 && lv.error_bound >= 0 && lv.upper() < 1.0, "axiom 1 (bounded)");
    expect(len(std::vector<Point>(n, v[0]), opts).value == 0.0, "axiom 2 (constant is zero)");
    expect(lv.value > 0.0, "axiom 2 (non-constant is positive)");
    expect(std::fabs(len(isometry(v, trial), opts).value - lv.value) <= kIsometry, "axiom 4 (isometry)");

    // Subpath monotonicity on a random vertex-aligned subrange.
    const std::size_t a = static_cast<std::size_t>(rng() % (n - 1));
    const std::size_t b = a + 1 + static_cast<std::size_t>(rng() % (n - 1 - a));
    if (a > 0 || b < n - 1) {
      const LenValue sub = len(std::vector<Point>(v.begin() + a, v.begin() + b + 1), opts);
      expect(sub.value <= lv.upper(), "axiom 5 (subpath)");
      expect(lv.value > sub.upper(), "axiom 5 (strict beyond bounds)");
    }
    // Subadditivity at an interior vertex.
    if (n >= 3) {
      const std::size_t m = 1 + static_cast<std::size_t>(rng() % (n - 2));
      const LenValue l = len(std::vector<Point>(v.begin(), v.begin() + m + 1), opts);
      const LenValue r = len(std::vector<Point>(v.begin() + m, v.end()), opts);
      expect(lv.value <= l.upper() + r.upper(), "axiom 6 (subadditive)");
      expect(l.value + r.value > lv.upper(), "axiom 6 (strict beyond bounds)");
    }
    // Uniform continuity: moving every vertex by at most delta.
    std::vector<Point> w;
    Rational delta = ratio(1, 100 + trial);
    for (std::size_t i = 0; i < n; ++i) w.emplace_back(v[i].x() + (i % 2 ? delta : -delta), v[i].y() + delta);
    const LenValue lw = len(w, opts);
    const double dsup = std::sqrt(2.0) * delta.get_d();
    expect(std::fabs(lw.value - lv.value) <= 2 * dsup + lv.error_bound + lw.error_bound, "axiom 7 (2-Lipschitz)");
    // Collinear midpoints leave the value within the bound.
    std::vector<Point> mid{v[0]};
    for (std::size_t i = 1; i < n; ++i) {
      mid.push_back(lerp(v[i - 1], v[i], ratio(1, 2)));
      mid.push_back(v[i]);
    }
    const LenValue lm = len(mid, opts);
    expect(std::fabs(lm.value - lv.value) <= std::max(lm.error_bound, lv.error_bound), "reparameterization");
  }

  // Axiom 3: segment against a detour with a definite excursion (past q,
  // sideways by half the length, or back past p) in a convex domain.
  int strict = 0, pairs = 0;
  const LenOptions cmp{8, 6};
  while (pairs < 100) {
    const auto d = random_convex_domain(rng, 1.0);
    const Point p = random_interior_point(d, rng, 0.001);
    Point q = random_interior_point(d, rng, 0.001);
    while (q == p) q = random_interior_point(d, rng, 0.001);
    const Point mid = lerp(p, q, ratio(1, 2));
    const Rational hx = (q.x() - p.x()) / 2, hy = (q.y() - p.y()) / 2;
    std::vector<Point> detour;
    for (const Point& x : {lerp(p, q, ratio(3, 2)), Point(mid.x() - hy, mid.y() + hx), Point(mid.x() + hy, mid.y() - hx),
                           lerp(q, p, ratio(3, 2))}) {
      // Convex domain: both legs stay inside when x does.
      if (locate(d, x).interior()) {
        detour = {p, x, q};
        break;
      }
    }
    if (detour.empty()) continue;
    ++pairs;
    strict += len_compare({p, q}, detour, cmp) == LenOrder::Less;
  }
  ++checks;
  if (strict < 100) ++broken["axiom 3 (strict)"];

  const double spent = seconds_since(t0);
  std::string detail = fmt("%.0f checks, axiom 3 strict %.0f/100, %.1fs", static_cast<double>(checks), strict, spent);
  for (const auto& [what, n] : broken) detail += "; " + what + " failed " + std::to_string(n) + "x";
  return {broken.empty() && spent < kMaxLenSeconds, detail};
}

Line len_minimality() {
  const LenOptions opts{8, 4};
  int instances = 0, samples = 0, strict = 0;
  for (std::uint64_t s = 1; instances < 50 && s < 500; ++s) {
    GenOptions o;
    o.seed = 5000 + s;
    o.holes = 1 + s % 3;
    o.vertices = 16 + s % 20;
    o.path_vertices = 2 + s % 3;
    o.radius = 1.0;
    const Instance inst = generate_instance(o);
    const auto tri = triangulate(inst.domain);
    const auto tight = tighten(make_path(inst.path, inst.domain), inst.domain).result.vertices;
    if (tight.size() < 2) continue;
    ++instances;
    std::mt19937_64 rng(s);
    for (int k = 0; k < 20; ++k) {
      auto v = homotopic_variant(inst.path, inst.domain, tri, rng);
      if (!v) continue;
      ++samples;
      strict += len_compare(tight, *v, opts) == LenOrder::Less;
    }
  }
  return {instances == 50 && samples == 1000 && strict == samples,
          fmt("%.0f/%.0f samples strictly longer in len over %.0f instances", strict, samples, instances)};
}

Line golden() {
  const auto d = fixtures::d1();
  const oracle::P c{0, 0};
  const double pi = std::numbers::pi;
  const std::vector<Point> top{Point(-3, 0), Point(-2, 3), Point(2, 3), Point(3, 0)};
  const std::vector<Point> loop{Point(-3, 0), Point(-3, -3), Point(3, -3), Point(3, 3), Point(-3, 3), Point(-3, 0)};
  const auto ref_top = oracle::shortest_with_angle(d, top.front(), top.back(), c, -pi);
  const auto ref_loop = oracle::shortest_with_angle(d, loop.front(), loop.back(), c, 2 * pi);
  if (!ref_top || !ref_loop) return {false, "oracle found no path"};
  const double lt = tighten(make_path(top, d), d).result.length();
  const double ll = tighten(make_path(loop, d), d).result.length();
  const bool ok = std::fabs(lt - ref_top->length) <= kGolden && std::fabs(ll - ref_loop->length) <= kGolden &&
                  std::fabs(ref_top->length - fixtures::golden_top()) <= kGolden &&
                  std::fabs(ref_loop->length - fixtures::golden_loop()) <= kGolden;
  return {ok, fmt("top %.9f (oracle %.9f), loop %.9f", lt, ref_top->length, ll) +
                  fmt(" (oracle %.9f)", ref_loop->length)};
}

}  // namespace

int main() {
  int failures = 0;
  report(1, "convex-domain identity", convex_identity, failures);

  std::vector<Case> suite;
  const auto t0 = Clock::now();
  suite = build_suite();
  std::printf("built 200-instance suite in %.1fs\n", seconds_since(t0));

  report(2, "oracle equivalence", [&] { return oracle_equivalence(suite); }, failures);
  report(3, "uniqueness", [&] { return uniqueness(suite); }, failures);
  const auto longer = perturbed(suite, 100);
  report(4, "efficiency certificate", [&] { return certificate(suite, longer); }, failures);
  report(5, "chord persistence", [&] { return persistence(suite); }, failures);
  report(6, "locally shortest", [&] { return locally_shortest(suite, longer); }, failures);
  report(7, "len axioms", len_axioms, failures);
  report(8, "len minimality", len_minimality, failures);
  report(9, "D1 golden values", golden, failures);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
