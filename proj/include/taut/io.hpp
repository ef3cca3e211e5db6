#pragma once

#include "taut/homotopy.hpp"
#include "taut/len.hpp"
#include "taut/tighten.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace taut {

struct Instance {
  PolygonalDomain domain;
  std::vector<Point> path;
  std::string name;
  std::uint64_t seed = 0;
};

/// Malformed instance text. line/column are 1-based; 0 when the problem is
/// structural rather than tied to a position.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line, column;
};

Instance parse_instance(const std::string& text);
Instance read_instance(const std::string& file);

/// Canonical form: sorted keys, two-space indent, coordinates as exact
/// decimal strings, trailing newline.
std::string write_instance(const Instance& inst);

struct ResultRecord {
  std::string name;
  std::vector<Point> vertices;
  double euclidean_length = 0.0;
  LenValue len;
  CertificateSummary certificate;
  std::size_t moves = 0;
  double wall_time_ms = 0.0;
  bool funnel_agrees = true;
};

std::string write_result(const ResultRecord& r);

/// SVG 1.1 rendering: viewBox from the domain bounding box, holes filled,
/// input path dashed, result path solid.
std::string render_svg(const PolygonalDomain& d, const std::vector<Point>& input,
                       const std::vector<Point>& result);

}  // namespace taut
