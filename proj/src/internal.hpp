#pragma once

// Helpers shared by the tightening, certificate and funnel code.

#include "taut/tighten.hpp"

namespace taut::detail {

/// Node of the lifted piece leaving (arriving at) parameter t of a segment.
int node_leaving(const LiftedPath& lifted, std::size_t seg, const Rational& t);
int node_arriving(const LiftedPath& lifted, std::size_t seg, const Rational& t);

Point point_at(const PathPoly& path, const PathParam& s);

/// Distinct chords of the line met by the lifted path. With `at_least_two`
/// the line is skipped unless the path meets it at two or more places.
/// Chords already in `cache` (same line, same cover) are reused instead of
/// walked again; new ones are appended to it.
std::vector<LiftedChord> chords_met(const PathPoly& path, const LiftedPath& lifted, Cover& cover,
                                    const LineSpec& line, bool open, bool at_least_two,
                                    std::vector<LiftedChord>* cache = nullptr);

/// Interior vertex i bends by at least a straight angle on its free side.
bool vertex_taut(const PathPoly& path, const LiftedPath& lifted, Cover& cover, std::size_t i);

/// Applies the shortcut implied by a meeting set; nullopt when it is empty or
/// a single monotone interval.
std::optional<std::pair<std::vector<Point>, MoveRecord>> shortcut(const PathPoly& path,
                                                                  const std::vector<MeetInterval>& ms,
                                                                  const LiftedChord& chord);

}  // namespace taut::detail
