#include "taut/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace taut {

using nlohmann::json;

ParseError::ParseError(const std::string& what, std::size_t l, std::size_t c)
    : std::runtime_error(l ? what + " at line " + std::to_string(l) + ", column " + std::to_string(c) : what),
      line(l),
      column(c) {}

namespace {

Rational coordinate(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.dump());
    // Shortest round-trip text of the double, read as a decimal literal.
    if (v.is_number_float()) return parse_rational(v.dump());
  } catch (const std::invalid_argument&) {
  }
  throw ParseError("bad coordinate in " + where + ": " + v.dump(), 0, 0);
}

std::vector<Point> points(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw ParseError(where + " must be an array of [x, y] pairs", 0, 0);
  std::vector<Point> out;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2) throw ParseError(where + " entries must be [x, y] pairs", 0, 0);
    out.emplace_back(coordinate(p[0], where), coordinate(p[1], where));
  }
  return out;
}

json to_json(const std::vector<Point>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back({format_rational(p.x()), format_rational(p.y())});
  return arr;
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + " is missing \"" + key + "\"", 0, 0);
  return *it;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed JSON", line, col);
  }
  if (!j.is_object()) throw ParseError("instance must be a JSON object", 0, 0);
  Instance inst;
  const json& dom = field(j, "domain", "instance");
  inst.domain.outer = points(field(dom, "outer", "domain"), "outer");
  if (auto h = dom.find("holes"); h != dom.end()) {
    if (!h->is_array()) throw ParseError("holes must be an array of rings", 0, 0);
    for (const auto& ring : *h) inst.domain.holes.push_back(points(ring, "hole"));
  }
  inst.path = points(field(j, "path", "instance"), "path");
  if (auto n = j.find("name"); n != j.end()) {
    if (!n->is_string()) throw ParseError("name must be a string", 0, 0);
    inst.name = n->get<std::string>();
  }
  if (auto s = j.find("seed"); s != j.end()) {
    if (!s->is_number_unsigned()) throw ParseError("seed must be a non-negative integer", 0, 0);
    inst.seed = s->get<std::uint64_t>();
  }
  return inst;
}

Instance read_instance(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string write_instance(const Instance& inst) {
  json j;
  j["domain"]["outer"] = to_json(inst.domain.outer);
  j["domain"]["holes"] = json::array();
  for (const auto& h : inst.domain.holes) j["domain"]["holes"].push_back(to_json(h));
  j["path"] = to_json(inst.path);
  j["name"] = inst.name;
  j["seed"] = inst.seed;
  return j.dump(2) + "\n";
}

std::string write_result(const ResultRecord& r) {
  json j;
  j["name"] = r.name;
  j["vertices"] = to_json(r.vertices);
  j["euclidean_length"] = r.euclidean_length;
  j["len"] = {{"value", r.len.value}, {"error_bound", r.len.error_bound}};
  j["certificate"] = {{"lines_sampled", r.certificate.lines_sampled},
                      {"violations", r.certificate.violations},
                      {"taut_vertices_ok", r.certificate.taut_vertices_ok}};
  j["moves"] = r.moves;
  j["wall_time_ms"] = r.wall_time_ms;
  j["funnel_agrees"] = r.funnel_agrees;
  return j.dump(2) + "\n";
}

}  // namespace taut
