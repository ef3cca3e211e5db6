#include "internal.hpp"

#include <algorithm>

namespace taut {

namespace {

struct Session {
  const PolygonalDomain& d;
  const Triangulation& tri;
  std::shared_ptr<Cover> cover;
  PathPoly path;
  LiftedPath lifted;
  std::vector<Point> domain_vertices;
  TightenReport& report;
  std::size_t budget;

  void relift() { lifted = lift(path, *cover); }

  bool try_chord(const LiftedChord& chord) {
    auto ms = meeting_set(path, lifted, chord, *cover);
    auto step = detail::shortcut(path, ms, chord);
    if (!step) return false;
    path.vertices = std::move(step->first);
    path.closure = true;
    relift();
    step->second.length_after = path.length();
    report.moves.push_back(step->second);
    report.length_trace.push_back(step->second.length_after);
    if (report.moves.size() > budget) throw NonTerminating("move budget exhausted");
    return true;
  }

  // Lines through `a` rotating from a->v towards a->b, stopping at each
  // domain vertex swept on the way, then b itself.
  bool cut_corner(std::size_t ia, std::size_t iv, std::size_t ib) {
    const Point a = path.vertices[ia], v = path.vertices[iv], b = path.vertices[ib];
    const int s = orient(a, v, b);
    std::vector<Point> cands;
    for (const auto& x : domain_vertices) {
      if (x == a || x == b || x == v) continue;
      const bool inside = orient(a, v, x) * s > 0 && orient(v, b, x) * s > 0 && orient(b, a, x) * s > 0;
      const bool on_ab = orient(a, b, x) == 0 && on_segment(a, b, x);
      if (inside || on_ab) cands.push_back(x);
    }
    std::sort(cands.begin(), cands.end(), [&](const Point& x, const Point& y) {
      const int o = orient(a, x, y) * s;
      if (o != 0) return o > 0;
      return squared_distance(a, x) < squared_distance(a, y);
    });
    cands.push_back(b);
    const int node = ia < iv ? detail::node_leaving(lifted, ia, Rational(0))
                             : detail::node_arriving(lifted, ia - 1, Rational(1));
    for (std::size_t k = 0; k < cands.size(); ++k) {
      if (k > 0 && orient(a, cands[k - 1], cands[k]) == 0 && dot(a, cands[k - 1], cands[k]) > 0) continue;
      LineSpec line = LineSpec::through(a, cands[k]);
      LiftedChord chord = chord_through(*cover, node, a, line, false);
      if (try_chord(chord)) return true;
    }
    return false;
  }

  // Domain vertices and the endpoints. Anchoring a cut anywhere else builds
  // lines from computed intersection points, and coordinate sizes then grow
  // exponentially with the number of moves.
  bool simple(const Point& x) const {
    return x == path.p() || x == path.q() ||
           std::find(domain_vertices.begin(), domain_vertices.end(), x) != domain_vertices.end();
  }

  bool vertex_phase() {
    for (std::size_t i = 1; i + 1 < path.vertices.size(); ++i) {
      if (detail::vertex_taut(path, lifted, *cover, i)) continue;
      if (simple(path.vertices[i - 1]) && cut_corner(i - 1, i, i + 1)) return true;
      if (simple(path.vertices[i + 1]) && cut_corner(i + 1, i, i - 1)) return true;
    }
    return false;
  }

  // Resumes after the line that produced the last move; a full pass without
  // a move means the path is at the fixpoint.
  std::size_t next_line = 0;

  bool line_phase(const std::vector<LineSpec>& lines) {
    for (std::size_t n = 0; n < lines.size(); ++n) {
      const LineSpec& line = lines[next_line];
      next_line = (next_line + 1) % lines.size();
      for (const auto& chord : detail::chords_met(path, lifted, *cover, line, false, true)) {
        if (try_chord(chord)) return true;
      }
    }
    return false;
  }
};

}  // namespace

TightenReport tighten(const PathPoly& input, const PolygonalDomain& d, const TightenOptions& opts) {
  if (auto problems = validate_path(input, d); !problems.empty()) throw InvalidPath(problems.front());
  const Triangulation tri = triangulate(d, opts.tri_seed);
  TightenReport report;
  auto cover = std::make_shared<Cover>(tri, start_triangle(tri, input.p()));

  PathPoly path = input;
  path.vertices = normalize_vertices(path.vertices);
  const int target = lift_end(input, *cover);
  report.word_length = cover->word(target).size();
  report.length_trace.push_back(input.length());

  if (input.p() == input.q() && report.word_length == 0) {
    path.vertices = {input.p()};
    path.closure = true;
    report.result = path;
    report.length_trace.push_back(0.0);
    return report;
  }

  const std::size_t scale = report.word_length + d.vertex_count() + input.vertices.size();
  Session s{d, tri, cover, path, {}, d.all_vertices(), report, 10 * scale * scale};
  s.relift();
  const auto lines = vertex_pair_lines(d, input.p(), input.q());
  for (;;) {
    if (s.vertex_phase()) continue;
    if (s.line_phase(lines)) continue;
    break;
  }
  s.path.closure = true;
  s.path.start_on_boundary = input.start_on_boundary;
  s.path.end_on_boundary = input.end_on_boundary;
  report.result = s.path;

  Sleeve sleeve = build_sleeve(cover, cover->root(), target);
  PathPoly oracle = funnel_shortest(sleeve, input.p(), input.q());
  report.funnel_agrees = oracle.vertices == s.path.vertices;
  if (opts.certify) report.certificate = certify_efficient(s.path, d, opts.certify_lines, opts.certify_seed);
  return report;
}

std::vector<PathPoly> replay_moves(const PathPoly& input, const std::vector<MoveRecord>& log) {
  std::vector<PathPoly> out;
  PathPoly cur = input;
  cur.vertices = normalize_vertices(cur.vertices);
  out.push_back(cur);
  for (const auto& m : log) {
    const auto& v = cur.vertices;
    std::vector<Point> next(v.begin(), v.begin() + m.from.seg + 1);
    next.push_back(m.from_point);
    if (m.to_point != m.from_point) next.push_back(m.to_point);
    for (std::size_t k = m.to.seg + 1; k < v.size(); ++k) next.push_back(v[k]);
    cur.vertices = normalize_vertices(std::move(next));
    cur.closure = true;
    out.push_back(cur);
  }
  return out;
}

std::vector<LineSpec> vertex_pair_lines(const PolygonalDomain& d, const Point& p, const Point& q) {
  std::vector<Point> pts = d.all_vertices();
  for (const Point& e : {p, q}) {
    if (std::find(pts.begin(), pts.end(), e) == pts.end()) pts.push_back(e);
  }
  std::vector<LineSpec> lines;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) lines.push_back(LineSpec::through(pts[i], pts[j]));
  }
  return lines;
}

}  // namespace taut
