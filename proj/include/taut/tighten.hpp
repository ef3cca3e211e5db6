#pragma once

#include "taut/homotopy.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace taut {

struct NonTerminating : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ChordMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Position on a path: segment index plus parameter in [0, 1]. A parameter
/// of 1 is normalized to the start of the next segment.
struct PathParam {
  std::size_t seg = 0;
  Rational t;
  bool operator<(const PathParam& o) const { return seg < o.seg || (seg == o.seg && t < o.t); }
  bool operator==(const PathParam& o) const { return seg == o.seg && t == o.t; }
};

/// Connected piece of the set of path parameters whose lift lies on a chord.
struct MeetInterval {
  PathParam lo, hi;
  bool forward = false;   // contains a stretch running with the line direction
  bool backward = false;  // contains a stretch running against it
};

/// Meeting set of the lifted path with the chord, merged into maximal
/// intervals and sorted along the path.
std::vector<MeetInterval> meeting_set(const PathPoly& path, const LiftedPath& lifted,
                                      const LiftedChord& chord, const Cover& cover);

/// Replaces the path between its first and last meeting with the chord by the
/// chord segment. Returns nullopt (no change) when the meeting set is empty or
/// a single interval traversed monotonically.
std::optional<PathPoly> replace_move(const PathPoly& path, const LiftedChord& chord, Cover& cover);

/// Removes repeated points and collinear interior vertices (straight
/// passages and back-tracking spikes).
std::vector<Point> normalize_vertices(std::vector<Point> v);

struct MoveRecord {
  LineSpec line;
  PathParam from, to;
  Point from_point, to_point;
  double length_after = 0.0;
};

struct CertificateSummary {
  std::size_t lines_sampled = 0;
  std::size_t violations = 0;
  bool taut_vertices_ok = true;
  bool clean() const { return violations == 0 && taut_vertices_ok; }
};

struct TightenOptions {
  bool certify = false;
  std::size_t certify_lines = 1000;
  std::uint64_t certify_seed = 42;
  unsigned tri_seed = 0;
};

struct TightenReport {
  PathPoly result;
  std::vector<MoveRecord> moves;
  std::vector<double> length_trace;  // initial length, then after each move
  CertificateSummary certificate;
  bool funnel_agrees = true;
  std::size_t word_length = 0;
};

TightenReport tighten(const PathPoly& path, const PolygonalDomain& d, const TightenOptions& opts = {});

/// Rebuilds the intermediate paths from a move log: element 0 is the
/// normalized input, element i the path after move i.
std::vector<PathPoly> replay_moves(const PathPoly& input, const std::vector<MoveRecord>& log);

/// Shortest path from p (in the first cell) to q (in the last cell) inside
/// the sleeve.
PathPoly funnel_shortest(const Sleeve& sleeve, const Point& p, const Point& q);

/// Funnel on the sleeve of the path's own class.
PathPoly shortest_in_class(const PathPoly& path, const Triangulation& tri);

/// True when the path turns by at least a straight angle on the free side of
/// every interior vertex and bends only at domain vertices.
bool taut_vertices(const PathPoly& path, const Triangulation& tri);

CertificateSummary certify_efficient(const PathPoly& path, const PolygonalDomain& d, std::size_t n_lines,
                                     std::uint64_t seed);

bool locally_shortest_check(const PathPoly& path, const PolygonalDomain& d, std::size_t grid);

/// Lines through pairs of distinct points of the domain vertices plus p and q.
std::vector<LineSpec> vertex_pair_lines(const PolygonalDomain& d, const Point& p, const Point& q);

/// Replays snapshots against the given lines; counts open chords whose
/// meeting set was connected and non-empty at some step and disconnected
/// later.
std::size_t chord_persistence_violations(const std::vector<PathPoly>& snapshots, const Triangulation& tri,
                                         const std::vector<LineSpec>& lines);

}  // namespace taut
