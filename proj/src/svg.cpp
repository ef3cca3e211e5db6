#include "taut/io.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace taut {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

// SVG y grows downwards; flip so the picture matches the usual axes.
std::string coords(const std::vector<Point>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += num(pts[i].fx()) + "," + num(-pts[i].fy());
  }
  return s;
}

}  // namespace

std::string render_svg(const PolygonalDomain& d, const std::vector<Point>& input, const std::vector<Point>& result) {
  const auto box = d.bounding_box();
  const double x0 = box[0].get_d(), y0 = box[1].get_d(), x1 = box[2].get_d(), y1 = box[3].get_d();
  const double span = std::max(x1 - x0, y1 - y0);
  const double pad = 0.05 * span, stroke = span / 250.0;

  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + num(x0 - pad) + " " +
       num(-y1 - pad) + " " + num(x1 - x0 + 2 * pad) + " " + num(y1 - y0 + 2 * pad) + "\">\n";
  s += "<style>\n"
       ".outer{fill:#f7f7f2;stroke:#333;stroke-linejoin:round}\n"
       ".hole{fill:#9a9a9a;stroke:#333;stroke-linejoin:round}\n"
       ".input{fill:none;stroke:#1f5fa8;stroke-linejoin:round}\n"
       ".result{fill:none;stroke:#c0392b;stroke-linejoin:round}\n"
       ".end{fill:#111}\n"
       "</style>\n";
  s += "<g stroke-width=\"" + num(stroke) + "\">\n";
  s += "<polygon class=\"outer\" points=\"" + coords(d.outer) + "\"/>\n";
  for (const auto& h : d.holes) s += "<polygon class=\"hole\" points=\"" + coords(h) + "\"/>\n";
  if (input.size() >= 2) {
    s += "<polyline class=\"input\" stroke-dasharray=\"" + num(4 * stroke) + " " + num(3 * stroke) +
         "\" points=\"" + coords(input) + "\"/>\n";
  }
  if (result.size() >= 2) {
    s += "<polyline class=\"result\" stroke-width=\"" + num(1.6 * stroke) + "\" points=\"" + coords(result) + "\"/>\n";
  }
  const std::vector<Point>& ends = input.empty() ? result : input;
  if (!ends.empty()) {
    for (const Point* e : {&ends.front(), &ends.back()}) {
      s += "<circle class=\"end\" cx=\"" + num(e->fx()) + "\" cy=\"" + num(-e->fy()) + "\" r=\"" + num(2.5 * stroke) +
           "\"/>\n";
    }
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace taut
