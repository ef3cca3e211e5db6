#pragma once

#include "taut/geom.hpp"

#include <vector>

namespace taut {

/// len(path) = sup over families of disjoint parameter intervals of
/// sum_i 2^-i g(d_(i)), chords sorted in decreasing order, g(d) = d / (1 + d).
/// `value` is attained by a family with endpoints on the refined vertices,
/// so the true value lies in [value, value + error_bound].
struct LenValue {
  double value = 0.0;
  double error_bound = 0.0;
  double upper() const { return value + error_bound; }
};

struct LenOptions {
  std::size_t k_max = 8;
  std::size_t refine = 4;      // rounds of uniform edge bisection
  std::size_t beam_width = 24;  // used when k_max > 8
};

LenValue len(const std::vector<Point>& path, const LenOptions& opts = {});

enum class LenOrder { Less, Greater, Indistinguishable };

/// Strict only when the gap between values exceeds the summed error bounds.
LenOrder len_compare(const std::vector<Point>& a, const std::vector<Point>& b, const LenOptions& opts = {});

inline double chord_weight(double d) { return d / (1.0 + d); }

}  // namespace taut
