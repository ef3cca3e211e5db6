#include "internal.hpp"

#include <algorithm>

namespace taut {

namespace detail {

int node_leaving(const LiftedPath& lifted, std::size_t seg, const Rational& t) {
  const auto& pieces = lifted.segments[seg];
  for (const auto& pc : pieces) {
    if (pc.t0 <= t && t < pc.t1) return pc.node;
  }
  return pieces.back().node;
}

int node_arriving(const LiftedPath& lifted, std::size_t seg, const Rational& t) {
  const auto& pieces = lifted.segments[seg];
  for (const auto& pc : pieces) {
    if (pc.t0 < t && t <= pc.t1) return pc.node;
  }
  return pieces.front().node;
}

Point point_at(const PathPoly& path, const PathParam& s) {
  if (s.seg + 1 >= path.vertices.size()) return path.vertices.back();
  return lerp(path.vertices[s.seg], path.vertices[s.seg + 1], s.t);
}

namespace {

Rational line_t(const LineSpec& line, const Point& x) {
  const Point& a = line.anchor;
  const Point& d = line.direction;
  return ((x.x() - a.x()) * d.x() + (x.y() - a.y()) * d.y()) / (d.x() * d.x() + d.y() * d.y());
}

struct Hit {
  std::size_t seg;
  Rational s;
  Point x;
};

// Points where each segment meets the line: the crossing point, or the
// midpoint of a segment lying on the line. `count` weighs overlaps twice.
std::vector<Hit> line_hits(const PathPoly& path, const LineSpec& line, std::size_t& count) {
  const Point a = line.anchor, b = line.second_point();
  std::vector<int> side(path.vertices.size());
  for (std::size_t i = 0; i < side.size(); ++i) side[i] = orient(a, b, path.vertices[i]);
  std::vector<Hit> hits;
  count = 0;
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    const int oa = side[i], ob = side[i + 1];
    if (oa * ob > 0) continue;
    const Point& u = path.vertices[i];
    const Point& v = path.vertices[i + 1];
    if (oa == 0 && ob == 0) {
      hits.push_back({i, Rational(1, 2), lerp(u, v, Rational(1, 2))});
      count += 2;
    } else if (oa == 0) {
      hits.push_back({i, Rational(0), u});
      ++count;
    } else if (ob == 0) {
      hits.push_back({i, Rational(1), v});
      ++count;
    } else {
      Rational s = *line_param(u, v, a, b);
      hits.push_back({i, s, lerp(u, v, s)});
      ++count;
    }
  }
  return hits;
}

bool chord_contains(const LiftedChord& ch, const Cover& cover, int node, const Point& x, const Rational& t) {
  if (ch.open ? !(ch.t0 < t && t < ch.t1) : !(ch.t0 <= t && t <= ch.t1)) return false;
  const int cn = ch.node_at(t);
  return cn >= 0 && cover.canonical(cn, x) == cover.canonical(node, x);
}

}  // namespace

std::vector<LiftedChord> chords_met(const PathPoly& path, const LiftedPath& lifted, Cover& cover,
                                    const LineSpec& line, bool open, bool at_least_two,
                                    std::vector<LiftedChord>* cache) {
  std::size_t count = 0;
  auto hits = line_hits(path, line, count);
  std::vector<LiftedChord> out;
  if (at_least_two && count < 2) return out;
  // Only the stretch between the extreme hits can matter for a shortcut.
  std::optional<std::pair<Rational, Rational>> clip;
  if (at_least_two) {
    for (const auto& h : hits) {
      const Rational t = line_t(line, h.x);
      if (!clip) clip.emplace(t, t);
      clip->first = std::min(clip->first, t);
      clip->second = std::max(clip->second, t);
    }
  }
  for (const auto& h : hits) {
    const int node = node_leaving(lifted, h.seg, h.s);
    const Rational t = line_t(line, h.x);
    bool known = false;
    for (const auto& ch : out) {
      if (chord_contains(ch, cover, node, h.x, t)) {
        known = true;
        break;
      }
    }
    if (known) continue;
    if (cache) {
      auto it = std::find_if(cache->begin(), cache->end(),
                             [&](const LiftedChord& ch) { return chord_contains(ch, cover, node, h.x, t); });
      if (it != cache->end()) {
        out.push_back(*it);
        continue;
      }
    }
    LiftedChord ch = chord_through(cover, node, h.x, line, open, clip);
    if (ch.pieces.empty()) continue;
    if (cache) cache->push_back(ch);
    out.push_back(std::move(ch));
  }
  return out;
}

std::optional<std::pair<std::vector<Point>, MoveRecord>> shortcut(const PathPoly& path,
                                                                  const std::vector<MeetInterval>& ms,
                                                                  const LiftedChord& chord) {
  if (ms.empty()) return std::nullopt;
  if (ms.size() == 1 && !(ms[0].forward && ms[0].backward)) return std::nullopt;
  const PathParam lo = ms.front().lo, hi = ms.back().hi;
  const Point x1 = point_at(path, lo), x2 = point_at(path, hi);
  const auto& v = path.vertices;
  std::vector<Point> out(v.begin(), v.begin() + lo.seg + 1);
  out.push_back(x1);
  if (x2 != x1) out.push_back(x2);
  for (std::size_t k = hi.seg + 1; k < v.size(); ++k) out.push_back(v[k]);
  MoveRecord rec;
  rec.line = chord.line;
  rec.from = lo;
  rec.to = hi;
  rec.from_point = x1;
  rec.to_point = x2;
  return std::make_pair(normalize_vertices(std::move(out)), rec);
}

}  // namespace detail

std::vector<Point> normalize_vertices(std::vector<Point> v) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Point> out;
    for (auto& p : v) {
      if (!out.empty() && out.back() == p) {
        changed = true;
        continue;
      }
      // Drop the middle of three collinear points; the segment between the
      // outer two is covered by the original pair.
      if (out.size() >= 2 && orient(out[out.size() - 2], out.back(), p) == 0) {
        out.pop_back();
        changed = true;
        if (out.back() == p) continue;
      }
      out.push_back(std::move(p));
    }
    v = std::move(out);
  }
  return v;
}

std::vector<MeetInterval> meeting_set(const PathPoly& path, const LiftedPath& lifted,
                                      const LiftedChord& chord, const Cover& cover) {
  const LineSpec& line = chord.line;
  const Point a = line.anchor, b = line.second_point();
  auto in_range = [&](const Rational& t) {
    return chord.open ? (chord.t0 < t && t < chord.t1) : (chord.t0 <= t && t <= chord.t1);
  };
  auto same = [&](std::size_t seg, const Rational& s, const Point& x, const Rational& t) {
    const int cn = chord.node_at(t);
    if (cn < 0) return false;
    const int pn = detail::node_leaving(lifted, seg, s);
    return cover.canonical(pn, x) == cover.canonical(cn, x);
  };
  const std::size_t segs = path.vertices.size() - 1;
  auto norm = [&](PathParam p) {
    if (p.t == 1 && p.seg + 1 < segs) return PathParam{p.seg + 1, Rational(0)};
    return p;
  };

  std::vector<MeetInterval> raw;
  for (std::size_t i = 0; i < segs; ++i) {
    const Point& u = path.vertices[i];
    const Point& v = path.vertices[i + 1];
    const int ou = orient(a, b, u), ov = orient(a, b, v);
    if (ou * ov > 0) continue;
    if (ou == 0 && ov == 0) {
      const Rational tu = detail::line_t(line, u), tv = detail::line_t(line, v);
      Rational lo = std::max(std::min(tu, tv), chord.t0);
      Rational hi = std::min(std::max(tu, tv), chord.t1);
      if (lo > hi) continue;
      const Rational mid = (lo + hi) / 2;
      if (!in_range(mid)) continue;
      const Rational smid = (mid - tu) / (tv - tu);
      if (!same(i, smid, lerp(u, v, smid), mid)) continue;
      Rational s_lo = (lo - tu) / (tv - tu), s_hi = (hi - tu) / (tv - tu);
      if (s_lo > s_hi) std::swap(s_lo, s_hi);
      MeetInterval m{norm({i, s_lo}), norm({i, s_hi})};
      if (lo < hi) (tv > tu ? m.forward : m.backward) = true;
      raw.push_back(m);
    } else {
      Rational s = ou == 0 ? Rational(0) : ov == 0 ? Rational(1) : *line_param(u, v, a, b);
      const Point x = s == 0 ? u : s == 1 ? v : lerp(u, v, s);
      const Rational t = detail::line_t(line, x);
      if (!in_range(t)) continue;
      // At s = 1 the leaving piece lies in the next segment's lift.
      const bool at_end = s == 1 && i + 1 < segs;
      if (at_end ? !same(i + 1, Rational(0), x, t) : !same(i, s, x, t)) continue;
      raw.push_back({norm({i, s}), norm({i, s})});
    }
  }
  std::sort(raw.begin(), raw.end(), [](const MeetInterval& x, const MeetInterval& y) { return x.lo < y.lo; });
  std::vector<MeetInterval> out;
  for (const auto& m : raw) {
    if (!out.empty() && !(out.back().hi < m.lo)) {
      auto& cur = out.back();
      if (cur.hi < m.hi) cur.hi = m.hi;
      cur.forward |= m.forward;
      cur.backward |= m.backward;
    } else {
      out.push_back(m);
    }
  }
  return out;
}

std::optional<PathPoly> replace_move(const PathPoly& path, const LiftedChord& chord, Cover& cover) {
  if (chord.cover_id != cover.id()) throw ChordMismatch("chord was lifted in a different cover");
  LiftedPath lifted = lift(path, cover);
  auto ms = meeting_set(path, lifted, chord, cover);
  auto step = detail::shortcut(path, ms, chord);
  if (!step) return std::nullopt;
  PathPoly out = path;
  out.vertices = std::move(step->first);
  out.closure = true;
  return out;
}

}  // namespace taut
